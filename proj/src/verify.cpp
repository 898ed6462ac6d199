#include <segre/verify.hpp>

#include <segre/k3.hpp>
#include <segre/lehn.hpp>
#include <segre/series.hpp>
#include <segre/universal.hpp>

#include <algorithm>
#include <array>
#include <random>
#include <sstream>

namespace segre
{

std::string CheckResult::line() const
{
    std::string out = name + ":";
    if (!detail.empty()) {
        out += " " + detail;
    }
    return out + (passed ? " PASS" : " FAIL");
}

namespace
{

constexpr std::uint32_t kSeed = 20151105;

Rational random_rational(std::mt19937 &rng)
{
    std::uniform_int_distribution<std::int64_t> num(-6, 6);
    std::uniform_int_distribution<std::int64_t> den(1, 5);
    const std::int64_t n = num(rng);
    const std::int64_t q = den(rng);
    return Rational(n, q);
}

Series random_series(std::mt19937 &rng, std::size_t order, const Rational &c0)
{
    std::vector<Rational> c(order + 1);
    c[0] = c0;
    for (std::size_t k = 1; k <= order; ++k) {
        c[k] = random_rational(rng);
    }
    return Series(std::move(c));
}

std::string show(const Series &s)
{
    std::ostringstream os;
    os << s;
    return os.str();
}

CheckResult kernel_roundtrips(std::size_t order)
{
    CheckResult r{"kernel-roundtrip", "", true};
    std::mt19937 rng(kSeed);
    const std::size_t n = std::max<std::size_t>(order, 1);
    constexpr int samples = 25;
    for (int i = 0; i < samples && r.passed; ++i) {
        const Series unit = random_series(rng, n, 1);
        const Series nil = random_series(rng, n, 0);
        Series f = nil.with_coeff(1, nil[1].is_zero() ? Rational(1) : nil[1]);
        const Rational alpha = random_rational(rng);
        const Rational beta = random_rational(rng);
        const Series z = Series::variable(n);
        if (exp(log(unit)) != unit) {
            r = {"kernel-roundtrip", "exp(log f) != f for f = " + show(unit), false};
        } else if (log(exp(nil)) != nil) {
            r = {"kernel-roundtrip", "log(exp g) != g for g = " + show(nil), false};
        } else if (pow(unit, alpha) * pow(unit, beta) != pow(unit, alpha + beta)) {
            r = {"kernel-roundtrip",
                 "f^a f^b != f^(a+b) for a = " + alpha.to_string() + ", b = " + beta.to_string(), false};
        } else if (compose(f, revert(f)) != z || compose(revert(f), f) != z) {
            r = {"kernel-roundtrip", "reversion roundtrip fails for f = " + show(f), false};
        }
    }
    if (r.passed) {
        r.detail = std::to_string(samples) + " samples at order " + std::to_string(n);
    }
    return r;
}

CheckResult closed_vs_recursion(std::int64_t max_k)
{
    const BSequences seqs = determine_b_s1(max_k);
    for (std::int64_t g = 1; g <= 30; ++g) {
        const auto col = recursion_column(max_k, g, seqs);
        for (std::int64_t k = 0; k <= max_k; ++k) {
            const Rational expected = closed_segre(k, GenusIndex{g});
            const Rational &got = col[static_cast<std::size_t>(k)];
            if (got != expected) {
                return {"closed-vs-recursion",
                        "k=" + std::to_string(k) + " g=" + std::to_string(g) + ": recursion " + got.to_string()
                            + " != closed " + expected.to_string(),
                        false};
            }
        }
    }
    return {"closed-vs-recursion", "k<=" + std::to_string(max_k) + " 1<=g<=30", true};
}

CheckResult pascal_identity(std::int64_t max_k)
{
    const auto s = [](std::int64_t k, std::int64_t g) {
        return k < 0 ? Rational(0) : closed_segre(k, GenusIndex{g});
    };
    for (std::int64_t k = 1; k <= max_k; ++k) {
        for (std::int64_t g = -40; g <= 40; ++g) {
            if (Rational(2) * s(k - 1, g - 3) != s(k, g) - s(k, g - 1)) {
                return {"pascal-identity", "k=" + std::to_string(k) + " g=" + std::to_string(g), false};
            }
        }
    }
    return {"pascal-identity", "1<=k<=" + std::to_string(max_k) + " |g|<=40", true};
}

CheckResult b_vs_b_prime(std::int64_t max_k)
{
    const BSequences seqs = determine_sequences(max_k);
    for (std::size_t l = 0; l < seqs.b.size(); ++l) {
        if (seqs.b[l] != seqs.b_prime[l]) {
            return {"b-vs-bprime",
                    "l=" + std::to_string(l) + ": b " + seqs.b[l].to_string() + " != b' " + seqs.b_prime[l].to_string(),
                    false};
        }
    }
    return {"b-vs-bprime", "l<=" + std::to_string(max_k), true};
}

std::string name_of(std::size_t i)
{
    static constexpr std::array<const char *, 4> names{"A", "B", "C", "D"};
    return names[i];
}

CheckResult engine_vs_lehn(const UniversalSeriesSet &u, std::size_t order)
{
    const CheckResult fail_base{"engine-vs-lehn", "", false};
    const UniversalSeriesSet lehn_u = extract_lehn_universal(order);
    const std::array<const Series *, 4> ours{&u.a, &u.b, &u.c, &u.d};
    const std::array<const Series *, 4> theirs{&lehn_u.a, &lehn_u.b, &lehn_u.c, &lehn_u.d};
    for (std::size_t i = 0; i < 4; ++i) {
        if (ours[i]->truncated(order) != *theirs[i]) {
            auto r = fail_base;
            r.detail = "universal series " + name_of(i) + ": engine " + show(ours[i]->truncated(order)) + " vs lehn "
                       + show(*theirs[i]);
            return r;
        }
    }
    const ChangeOfVariable cov = change_of_variable(std::max<std::size_t>(order, 1));
    std::size_t tuples = 0;
    for (std::int64_t d = -3; d <= 3; ++d) {
        for (std::int64_t pi = -3; pi <= 3; ++pi) {
            for (std::int64_t kappa = -3; kappa <= 3; ++kappa) {
                for (std::int64_t e : {0, 12, 24}) {
                    const SurfaceInvariants inv{d, pi, kappa, e};
                    const Series engine = segre_series(inv, order, u);
                    const Series lehn = lehn_series(inv, order, cov);
                    ++tuples;
                    if (engine != lehn) {
                        std::ostringstream os;
                        os << "tuple " << inv << ": engine " << engine << " vs lehn " << lehn;
                        auto r = fail_base;
                        r.detail = os.str();
                        return r;
                    }
                }
            }
        }
    }
    return {"engine-vs-lehn", std::to_string(tuples) + " tuples to order " + std::to_string(order), true};
}

std::vector<CheckResult> blowup_vanishing(std::int64_t max_k, const UniversalSeriesSet &u)
{
    std::vector<CheckResult> out;
    const auto checks = check_blowup_vanishings(max_k);
    for (std::size_t i = 0; i + 1 < checks.size(); i += 2) {
        const VanishingCheck &first = checks[i];
        const VanishingCheck &second = checks[i + 1];
        const auto k = static_cast<std::size_t>(first.k);
        std::string detail = first.coefficient.to_string() + ", " + second.coefficient.to_string();
        bool ok = first.vanishes() && second.vanishes();
        if (k <= u.order()) {
            const Rational e1 = segre_number(first.target.invariants, k, u);
            const Rational e2 = segre_number(second.target.invariants, k, u);
            if (!e1.is_zero() || !e2.is_zero()) {
                ok = false;
                detail += " (engine " + e1.to_string() + ", " + e2.to_string() + ")";
            }
        }
        out.push_back({"blowup-vanishing k=" + std::to_string(k), detail, ok});
    }
    return out;
}

CheckResult s5_polynomial(const UniversalSeriesSet &u)
{
    const BlowupTargets t = blowup_targets(5);
    const Rational z1 = eval_s5_polynomial(t.first.invariants);
    const Rational z2 = eval_s5_polynomial(t.second.invariants);
    if (!z1.is_zero() || !z2.is_zero()) {
        return {"s5-polynomial", "published polynomial at blow-up tuples: " + z1.to_string() + ", " + z2.to_string(),
                false};
    }
    const auto mismatches = s5_polynomial_mismatches(u);
    if (!mismatches.empty()) {
        std::string detail = "transcription discrepancy in 5!*s5 at";
        for (const auto &m : mismatches) {
            detail += " " + to_string(m.monomial) + " (published " + m.published.to_string() + ", engine "
                      + m.engine.to_string() + ")";
        }
        return {"s5-polynomial", detail, false};
    }
    return {"s5-polynomial", "blow-up zeros and all monomials agree", true};
}

CheckResult degenerate_family(const UniversalSeriesSet &u, std::size_t order)
{
    const ChangeOfVariable cov = change_of_variable(std::max<std::size_t>(order, 1));
    for (std::int64_t kappa = 1; kappa <= 3; ++kappa) {
        const SurfaceInvariants inv{0, 2 * kappa, kappa, 11 * kappa};
        const Series one = Series::constant(1, order);
        const Series engine = segre_series(inv, order, u);
        const Series lehn = lehn_series(inv, order, cov);
        if (engine != one || lehn != one) {
            std::ostringstream os;
            os << "tuple " << inv << ": engine " << engine << ", lehn " << lehn;
            return {"degenerate-family", os.str(), false};
        }
    }
    return {"degenerate-family", "kappa=1..3 to order " + std::to_string(order), true};
}

} // namespace

std::vector<CheckResult> run_verification(const VerifyOptions &options)
{
    const std::int64_t max_k = std::max<std::int64_t>(options.max_k, 2);
    const std::size_t order = options.max_order;
    // The engine set must reach s_5 and every vanishing order.
    const std::size_t engine_order = std::max({order, std::size_t{5}, static_cast<std::size_t>(max_k)});

    UniversalSeriesSet u = determine_universal(engine_order);
    if (options.inject_fault) {
        u.d = u.d.with_coeff(2, u.d[2] + Rational(1));
    }

    std::vector<CheckResult> results;
    results.push_back(kernel_roundtrips(order));
    results.push_back(closed_vs_recursion(max_k));
    results.push_back(pascal_identity(max_k));
    results.push_back(b_vs_b_prime(max_k));
    results.push_back(engine_vs_lehn(u, order));
    for (auto &r : blowup_vanishing(max_k, u)) {
        results.push_back(std::move(r));
    }
    results.push_back(s5_polynomial(u));
    results.push_back(degenerate_family(u, order));
    return results;
}

std::string format_report(const std::vector<CheckResult> &results)
{
    std::string out;
    for (const auto &r : results) {
        out += r.line() + "\n";
    }
    const auto failed = std::count_if(results.begin(), results.end(), [](const CheckResult &r) { return !r.passed; });
    out += "summary: " + std::to_string(results.size() - static_cast<std::size_t>(failed)) + "/"
           + std::to_string(results.size()) + " checks passed\n";
    return out;
}

bool all_passed(const std::vector<CheckResult> &results)
{
    return std::all_of(results.begin(), results.end(), [](const CheckResult &r) { return r.passed; });
}

} // namespace segre
