#ifndef SEGRE_RATIONAL_HPP
#define SEGRE_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace segre
{

// Arbitrary-precision rational number, always kept in canonical form:
// positive denominator, gcd(|num|, den) == 1, zero stored as 0/1.
class Rational
{
public:
    Rational() = default;
    Rational(std::int64_t n); // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den);
    explicit Rational(mpq_class value);

    // Accepts "p" or "p/q" with an optional leading '-' on p and q > 0.
    // Non-canonical input such as "2/4" is reduced. Throws std::invalid_argument.
    static Rational parse(std::string_view text);

    // "p/q", or "p" when the denominator is 1.
    [[nodiscard]] std::string to_string() const;

    [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
    [[nodiscard]] const mpq_class &get() const { return value_; }

    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
    [[nodiscard]] bool is_one() const { return value_ == 1; }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(value_); }

    Rational &operator+=(const Rational &other);
    Rational &operator-=(const Rational &other);
    Rational &operator*=(const Rational &other);
    // Throws std::domain_error on division by zero.
    Rational &operator/=(const Rational &other);

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational &a, const Rational &b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b);

    friend std::ostream &operator<<(std::ostream &os, const Rational &r);

private:
    mpq_class value_{0};
};

// Integer power with a possibly negative exponent. 0^negative throws std::domain_error.
Rational pow(const Rational &base, std::int64_t exponent);

} // namespace segre

#endif
