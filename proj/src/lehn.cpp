#include <segre/lehn.hpp>

#include <segre/k3.hpp>

#include <sstream>
#include <stdexcept>

namespace segre
{

LehnExponents lehn_exponents(const SurfaceInvariants &inv)
{
    const Rational d(inv.d);
    const Rational pi(inv.pi);
    const Rational kappa(inv.kappa);
    const Rational chi = Rational(inv.kappa + inv.e) / Rational(12);
    return LehnExponents{
        pi - Rational(2) * kappa,
        d - Rational(2) * pi + kappa + Rational(3) * chi,
        (d - pi) / Rational(2) + chi,
        chi,
    };
}

namespace
{

Series one_minus_w(std::size_t order)
{
    return Series({1, -1}, order);
}

Series one_minus_2w(std::size_t order)
{
    return Series({1, -2}, order);
}

Series quadratic(std::size_t order)
{
    return Series({1, -6, 6}, order);
}

} // namespace

ChangeOfVariable change_of_variable(std::size_t order)
{
    if (order < 1) {
        throw std::invalid_argument("change of variable needs order >= 1");
    }
    const Series z_of_w = Series::variable(order) * one_minus_w(order) * pow(one_minus_2w(order), Rational(4))
                          * pow(quadratic(order), Rational(-3));
    return {z_of_w, revert(z_of_w)};
}

Series lehn_series(const SurfaceInvariants &inv, std::size_t order)
{
    if (order == 0) {
        return Series::constant(1, 0);
    }
    return lehn_series(inv, order, change_of_variable(order));
}

Series lehn_series(const SurfaceInvariants &inv, std::size_t order, const ChangeOfVariable &cov)
{
    if (order == 0) {
        return Series::constant(1, 0);
    }
    if (cov.order() < order) {
        throw std::invalid_argument("insufficient truncation order");
    }
    const LehnExponents x = lehn_exponents(inv);
    const Series in_w = pow(one_minus_w(order), x.a) * pow(one_minus_2w(order), x.b) * pow(quadratic(order), -x.c);
    return compose(in_w, cov.w_of_z.truncated(order));
}

UniversalSeriesSet extract_lehn_universal(std::size_t order)
{
    if (order == 0) {
        const Series one = Series::constant(1, 0);
        return {one, one, one, one};
    }
    const ChangeOfVariable cov = change_of_variable(order);
    return {
        lehn_series({1, 0, 0, 0}, order, cov),
        lehn_series({0, 0, 0, 1}, order, cov),
        lehn_series({0, 1, 0, 0}, order, cov),
        lehn_series({0, 0, 1, 0}, order, cov),
    };
}

std::vector<VanishingCheck> check_blowup_vanishings(std::int64_t max_k)
{
    std::vector<VanishingCheck> out;
    if (max_k < 2) {
        return out;
    }
    const auto order = static_cast<std::size_t>(max_k);
    const ChangeOfVariable cov = change_of_variable(order);
    for (std::int64_t k = 2; k <= max_k; ++k) {
        const auto n = static_cast<std::size_t>(k);
        const BlowupTargets targets = blowup_targets(k);
        for (const BlowupTarget &t : {targets.first, targets.second}) {
            out.push_back({k, t, lehn_series(t.invariants, n, cov)[n]});
        }
    }
    return out;
}

Rational eval_s5_polynomial(const SurfaceInvariants &inv)
{
    const mpz_class d(std::to_string(inv.d));
    const mpz_class p(std::to_string(inv.pi));
    const mpz_class k(std::to_string(inv.kappa));
    const mpz_class e(std::to_string(inv.e));
    const mpz_class d2 = d * d;
    const mpz_class d3 = d2 * d;
    const mpz_class d4 = d3 * d;
    const mpz_class d5 = d4 * d;

    // Transcribed term by term from Lehn's table.
    mpz_class v = d5 - 100 * d4 + d3 * (3740 + 10 * e - 50 * p - 10 * k);
    v -= d2 * (62000 - 3420 * p + 700 * e - 860 * k);
    v += d
         * (384384 + 15 * e * e + 15960 * e - 30 * e * k - 150 * p * e + 15 * k * k + 150 * k * p - 75610 * p
            - 24340 * k + 375 * p * p);
    v += -400 * e * e - 117120 * e + 3920 * p * e + 960 * k * e + 226560 * k - 4720 * k * p - 560 * k * k
         + 530880 * p - 9600 * p * p;
    return Rational(mpq_class(v, 120));
}

std::string to_string(const Monomial &m)
{
    static constexpr std::array<const char *, 4> names{"d", "pi", "kappa", "e"};
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) {
            continue;
        }
        os << (first ? "" : "*") << names[i];
        if (m[i] > 1) {
            os << '^' << m[i];
        }
        first = false;
    }
    return first ? "1" : os.str();
}

namespace
{

std::vector<Monomial> simplex(int degree)
{
    std::vector<Monomial> out;
    for (int i = 0; i <= degree; ++i) {
        for (int j = 0; i + j <= degree; ++j) {
            for (int m = 0; i + j + m <= degree; ++m) {
                for (int n = 0; i + j + m + n <= degree; ++n) {
                    out.push_back({i, j, m, n});
                }
            }
        }
    }
    return out;
}

// Monomial coefficients of binom(x, a) = x (x-1) ... (x-a+1) / a!.
std::vector<Rational> binomial_polynomial(int a)
{
    std::vector<Rational> poly{Rational(1)};
    for (int i = 0; i < a; ++i) {
        std::vector<Rational> next(poly.size() + 1);
        for (std::size_t j = 0; j < poly.size(); ++j) {
            next[j + 1] += poly[j];
            next[j] -= Rational(i) * poly[j];
        }
        poly = std::move(next);
    }
    Rational factorial(1);
    for (int i = 2; i <= a; ++i) {
        factorial *= Rational(i);
    }
    for (auto &c : poly) {
        c /= factorial;
    }
    return poly;
}

} // namespace

std::map<Monomial, Rational> interpolate_polynomial(const std::function<Rational(const SurfaceInvariants &)> &fn,
                                                    int degree)
{
    const std::vector<Monomial> points = simplex(degree);
    std::map<Monomial, Rational> values;
    for (const Monomial &pt : points) {
        values.emplace(pt, fn(SurfaceInvariants{pt[0], pt[1], pt[2], pt[3]}));
    }

    std::vector<std::vector<Rational>> binom_polys;
    for (int a = 0; a <= degree; ++a) {
        binom_polys.push_back(binomial_polynomial(a));
    }

    // Newton form p(x) = sum_alpha c_alpha prod_i binom(x_i, alpha_i), where
    // c_alpha = sum_{beta <= alpha} (-1)^{|alpha - beta|} prod_i binom(alpha_i, beta_i) p(beta).
    std::map<Monomial, Rational> result;
    for (const Monomial &alpha : points) {
        Rational c_alpha;
        for (const Monomial &beta : points) {
            bool below = true;
            int gap = 0;
            Rational weight(1);
            for (std::size_t i = 0; i < 4 && below; ++i) {
                below = beta[i] <= alpha[i];
                if (below) {
                    gap += alpha[i] - beta[i];
                    weight *= generalized_binomial(alpha[i], beta[i]);
                }
            }
            if (!below) {
                continue;
            }
            c_alpha += (gap % 2 == 0 ? weight : -weight) * values.at(beta);
        }
        if (c_alpha.is_zero()) {
            continue;
        }
        for (const Monomial &gamma : points) {
            Rational term = c_alpha;
            for (std::size_t i = 0; i < 4 && !term.is_zero(); ++i) {
                term = gamma[i] <= alpha[i] ? term * binom_polys[static_cast<std::size_t>(alpha[i])]
                                                                [static_cast<std::size_t>(gamma[i])]
                                            : Rational(0);
            }
            if (!term.is_zero()) {
                result[gamma] += term;
            }
        }
    }
    std::erase_if(result, [](const auto &kv) { return kv.second.is_zero(); });
    return result;
}

std::vector<MonomialMismatch> s5_polynomial_mismatches(const UniversalSeriesSet &u)
{
    if (u.order() < 5) {
        throw std::invalid_argument("insufficient truncation order");
    }
    const Rational scale(120);
    const auto published
        = interpolate_polynomial([&](const SurfaceInvariants &inv) { return scale * eval_s5_polynomial(inv); }, 5);
    const auto engine
        = interpolate_polynomial([&](const SurfaceInvariants &inv) { return scale * segre_number(inv, 5, u); }, 5);

    std::map<Monomial, std::pair<Rational, Rational>> merged;
    for (const auto &[m, c] : published) {
        merged[m].first = c;
    }
    for (const auto &[m, c] : engine) {
        merged[m].second = c;
    }
    std::vector<MonomialMismatch> out;
    for (const auto &[m, pair] : merged) {
        if (pair.first != pair.second) {
            out.push_back({m, pair.first, pair.second});
        }
    }
    return out;
}

} // namespace segre
