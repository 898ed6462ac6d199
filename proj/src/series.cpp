#include <segre/series.hpp>

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace segre
{

Series::Series() : coeffs_(1) {}

Series::Series(std::size_t order) : coeffs_(order + 1) {}

Series::Series(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) {
        throw std::invalid_argument("a series needs at least one coefficient");
    }
}

Series::Series(std::initializer_list<Rational> coeffs, std::size_t order) : coeffs_(order + 1)
{
    std::size_t k = 0;
    for (const auto &c : coeffs) {
        if (k > order) {
            break;
        }
        coeffs_[k++] = c;
    }
}

Series Series::constant(const Rational &c, std::size_t order)
{
    Series s(order);
    s.coeffs_[0] = c;
    return s;
}

Series Series::variable(std::size_t order)
{
    Series s(order);
    if (order >= 1) {
        s.coeffs_[1] = 1;
    }
    return s;
}

Rational Series::coeff(std::size_t k) const
{
    return k < coeffs_.size() ? coeffs_[k] : Rational{};
}

Series Series::truncated(std::size_t order) const
{
    Series s(order);
    std::copy_n(coeffs_.begin(), std::min(coeffs_.size(), order + 1), s.coeffs_.begin());
    return s;
}

Series Series::with_coeff(std::size_t k, const Rational &value) const
{
    Series s = *this;
    if (k < s.coeffs_.size()) {
        s.coeffs_[k] = value;
    }
    return s;
}

bool Series::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational &c) { return c.is_zero(); });
}

Series Series::operator-() const
{
    Series s(order());
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        s.coeffs_[k] = -coeffs_[k];
    }
    return s;
}

Series operator+(const Series &f, const Series &g)
{
    Series s(std::min(f.order(), g.order()));
    for (std::size_t k = 0; k <= s.order(); ++k) {
        s.coeffs_[k] = f.coeffs_[k] + g.coeffs_[k];
    }
    return s;
}

Series operator-(const Series &f, const Series &g)
{
    Series s(std::min(f.order(), g.order()));
    for (std::size_t k = 0; k <= s.order(); ++k) {
        s.coeffs_[k] = f.coeffs_[k] - g.coeffs_[k];
    }
    return s;
}

Series operator*(const Series &f, const Series &g)
{
    Series s(std::min(f.order(), g.order()));
    for (std::size_t i = 0; i <= s.order(); ++i) {
        if (f.coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; i + j <= s.order(); ++j) {
            if (!g.coeffs_[j].is_zero()) {
                s.coeffs_[i + j] += f.coeffs_[i] * g.coeffs_[j];
            }
        }
    }
    return s;
}

Series operator/(const Series &f, const Series &g)
{
    if (g[0].is_zero()) {
        throw std::domain_error("non-unit divisor");
    }
    // Solve g * q = f coefficient by coefficient.
    Series q(std::min(f.order(), g.order()));
    const Rational inv0 = Rational(1) / g[0];
    for (std::size_t k = 0; k <= q.order(); ++k) {
        Rational acc = f[k];
        for (std::size_t i = 1; i <= k; ++i) {
            if (!g[i].is_zero()) {
                acc -= g[i] * q.coeffs_[k - i];
            }
        }
        q.coeffs_[k] = acc * inv0;
    }
    return q;
}

Series operator*(const Rational &c, const Series &f)
{
    Series s(f.order());
    for (std::size_t k = 0; k <= f.order(); ++k) {
        s.coeffs_[k] = c * f.coeffs_[k];
    }
    return s;
}

bool operator==(const Series &f, const Series &g)
{
    const std::size_t n = std::min(f.order(), g.order());
    return std::equal(f.coeffs_.begin(), f.coeffs_.begin() + static_cast<std::ptrdiff_t>(n + 1), g.coeffs_.begin());
}

std::ostream &operator<<(std::ostream &os, const Series &f)
{
    os << '[';
    for (std::size_t k = 0; k <= f.order(); ++k) {
        os << (k == 0 ? "" : ", ") << f[k];
    }
    return os << "] + O(z^" << f.order() + 1 << ')';
}

Series inverse(const Series &f)
{
    return Series::constant(1, f.order()) / f;
}

Series derivative(const Series &f)
{
    if (f.order() == 0) {
        return Series(0);
    }
    std::vector<Rational> d(f.order());
    for (std::size_t k = 1; k <= f.order(); ++k) {
        d[k - 1] = Rational(static_cast<std::int64_t>(k)) * f[k];
    }
    return Series(std::move(d));
}

Series log(const Series &f)
{
    if (!f[0].is_one()) {
        throw std::domain_error("log of non-unit series");
    }
    // L' f = f', i.e. k L_k = k f_k - sum_{i=1}^{k-1} i L_i f_{k-i}.
    const std::size_t n = f.order();
    std::vector<Rational> l(n + 1);
    for (std::size_t k = 1; k <= n; ++k) {
        Rational acc = Rational(static_cast<std::int64_t>(k)) * f[k];
        for (std::size_t i = 1; i < k; ++i) {
            if (!l[i].is_zero() && !f[k - i].is_zero()) {
                acc -= Rational(static_cast<std::int64_t>(i)) * l[i] * f[k - i];
            }
        }
        l[k] = acc / Rational(static_cast<std::int64_t>(k));
    }
    return Series(std::move(l));
}

Series exp(const Series &f)
{
    if (!f[0].is_zero()) {
        throw std::domain_error("exp of series with nonzero constant term");
    }
    // E' = f' E, i.e. k E_k = sum_{i=1}^{k} i f_i E_{k-i}.
    const std::size_t n = f.order();
    std::vector<Rational> e(n + 1);
    e[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        Rational acc;
        for (std::size_t i = 1; i <= k; ++i) {
            if (!f[i].is_zero()) {
                acc += Rational(static_cast<std::int64_t>(i)) * f[i] * e[k - i];
            }
        }
        e[k] = acc / Rational(static_cast<std::int64_t>(k));
    }
    return Series(std::move(e));
}

namespace
{

Series pow_nonnegative(const Series &f, mpz_class e)
{
    Series result = Series::constant(1, f.order());
    Series square = f;
    while (e != 0) {
        if (mpz_odd_p(e.get_mpz_t()) != 0) {
            result = result * square;
        }
        e >>= 1;
        if (e != 0) {
            square = square * square;
        }
    }
    return result;
}

} // namespace

Series pow(const Series &f, const Rational &alpha)
{
    if (alpha.is_integer() && alpha.sign() >= 0) {
        return pow_nonnegative(f, alpha.numerator());
    }
    if (!f[0].is_one()) {
        throw std::domain_error("rational power of non-unit series");
    }
    if (alpha.is_integer()) {
        return inverse(pow_nonnegative(f, -alpha.numerator()));
    }
    return exp(alpha * log(f));
}

Series compose(const Series &f, const Series &g)
{
    if (!g[0].is_zero()) {
        throw std::domain_error("composition requires zero constant term");
    }
    const std::size_t n = std::min(f.order(), g.order());
    const Series inner = g.truncated(n);
    // Horner: (((f_n) g + f_{n-1}) g + ...) g + f_0.
    Series result = Series::constant(f[n], n);
    for (std::size_t k = n; k-- > 0;) {
        result = result * inner;
        result = result + Series::constant(f[k], n);
    }
    return result;
}

Series revert(const Series &f)
{
    if (f.order() == 0) {
        if (!f[0].is_zero()) {
            throw std::domain_error("series not invertible under composition");
        }
        return Series(0);
    }
    if (!f[0].is_zero() || f[1].is_zero()) {
        throw std::domain_error("series not invertible under composition");
    }
    // Undetermined coefficients: with g known below degree k and g_k = 0,
    // [z^k] f(g) = f_1 g_k + (terms in g_1..g_{k-1}), so g_k = -[z^k] f(g) / f_1.
    const std::size_t n = f.order();
    const Rational inv1 = Rational(1) / f[1];
    Series g = Series::variable(n).with_coeff(1, inv1);
    for (std::size_t k = 2; k <= n; ++k) {
        const Rational residual = compose(f.truncated(k), g.truncated(k))[k];
        g = g.with_coeff(k, -residual * inv1);
    }
    return g;
}

} // namespace segre
