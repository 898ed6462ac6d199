#ifndef SEGRE_SERIES_HPP
#define SEGRE_SERIES_HPP

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

#include <segre/rational.hpp>

namespace segre
{

// Dense truncated power series c_0 + c_1 z + ... + c_N z^N over the rationals.
//
// Binary operations between series of different orders truncate to the
// smaller order. Equality compares coefficients up to the smaller order too,
// so it is not transitive across mixed orders.
class Series
{
public:
    // The zero series of order 0.
    Series();
    // The zero series of the given order.
    explicit Series(std::size_t order);
    // Order is coeffs.size() - 1. Throws std::invalid_argument on an empty vector.
    explicit Series(std::vector<Rational> coeffs);
    // Pads with zeros or truncates so that the result has the given order.
    Series(std::initializer_list<Rational> coeffs, std::size_t order);

    static Series constant(const Rational &c, std::size_t order);
    // The series z.
    static Series variable(std::size_t order);

    [[nodiscard]] std::size_t order() const { return coeffs_.size() - 1; }
    [[nodiscard]] const Rational &operator[](std::size_t k) const { return coeffs_[k]; }
    // Coefficient of z^k, zero beyond the stored order.
    [[nodiscard]] Rational coeff(std::size_t k) const;
    [[nodiscard]] std::span<const Rational> coefficients() const { return coeffs_; }

    [[nodiscard]] Series truncated(std::size_t order) const;
    // Copy with the coefficient of z^k replaced.
    [[nodiscard]] Series with_coeff(std::size_t k, const Rational &value) const;

    [[nodiscard]] bool is_zero() const;

    Series operator-() const;
    friend Series operator+(const Series &f, const Series &g);
    friend Series operator-(const Series &f, const Series &g);
    // Cauchy product.
    friend Series operator*(const Series &f, const Series &g);
    // Throws std::domain_error("non-unit divisor") when g has zero constant term.
    friend Series operator/(const Series &f, const Series &g);
    friend Series operator*(const Rational &c, const Series &f);

    friend bool operator==(const Series &f, const Series &g);

    friend std::ostream &operator<<(std::ostream &os, const Series &f);

private:
    std::vector<Rational> coeffs_;
};

// Multiplicative inverse. Throws std::domain_error("non-unit divisor").
Series inverse(const Series &f);

// Formal derivative, order drops by one (order 0 stays order 0 with value 0).
Series derivative(const Series &f);

// Requires f_0 == 1, otherwise throws std::domain_error("log of non-unit series").
Series log(const Series &f);

// Requires f_0 == 0, otherwise throws
// std::domain_error("exp of series with nonzero constant term").
Series exp(const Series &f);

// f^alpha. Non-negative integer exponents use repeated squaring and accept any f.
// Every other exponent needs f_0 == 1, else
// std::domain_error("rational power of non-unit series").
Series pow(const Series &f, const Rational &alpha);

// f(g(z)), truncated at min(order f, order g). Requires g_0 == 0, otherwise
// std::domain_error("composition requires zero constant term").
Series compose(const Series &f, const Series &g);

// Compositional inverse: returns g with f(g(z)) = z and g(f(w)) = w.
// Requires f_0 == 0 and f_1 != 0, otherwise
// std::domain_error("series not invertible under composition").
Series revert(const Series &f);

} // namespace segre

#endif
