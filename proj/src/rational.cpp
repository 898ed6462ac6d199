#include <segre/rational.hpp>

#include <cctype>
#include <stdexcept>
#include <utility>

namespace segre
{

namespace
{

mpz_class to_mpz(std::int64_t n)
{
    // mpz_class has no portable int64 constructor on every platform.
    return mpz_class(std::to_string(n));
}

bool all_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

} // namespace

Rational::Rational(std::int64_t n) : value_(to_mpz(n)) {}

Rational::Rational(std::int64_t num, std::int64_t den)
{
    if (den == 0) {
        throw std::domain_error("zero denominator");
    }
    value_ = mpq_class(to_mpz(num), to_mpz(den));
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value))
{
    if (value_.get_den() == 0) {
        throw std::domain_error("zero denominator");
    }
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    const auto bad = [&] { return std::invalid_argument("malformed rational: '" + std::string(text) + "'"); };

    std::string_view num = text;
    std::string_view den = "1";
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    const bool negative = !num.empty() && num.front() == '-';
    if (negative) {
        num.remove_prefix(1);
    }
    if (!all_digits(num) || !all_digits(den)) {
        throw bad();
    }
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) {
        throw std::domain_error("zero denominator in '" + std::string(text) + "'");
    }
    if (negative) {
        n = -n;
    }
    return Rational(mpq_class(n, d));
}

std::string Rational::to_string() const
{
    return value_.get_str(10);
}

Rational &Rational::operator+=(const Rational &other)
{
    value_ += other.value_;
    return *this;
}

Rational &Rational::operator-=(const Rational &other)
{
    value_ -= other.value_;
    return *this;
}

Rational &Rational::operator*=(const Rational &other)
{
    value_ *= other.value_;
    return *this;
}

Rational &Rational::operator/=(const Rational &other)
{
    if (other.is_zero()) {
        throw std::domain_error("division by zero");
    }
    value_ /= other.value_;
    return *this;
}

Rational Rational::operator-() const
{
    return Rational(mpq_class(-value_));
}

std::strong_ordering operator<=>(const Rational &a, const Rational &b)
{
    const int c = cmp(a.value_, b.value_);
    if (c < 0) {
        return std::strong_ordering::less;
    }
    return c == 0 ? std::strong_ordering::equal : std::strong_ordering::greater;
}

std::ostream &operator<<(std::ostream &os, const Rational &r)
{
    return os << r.to_string();
}

Rational pow(const Rational &base, std::int64_t exponent)
{
    if (exponent < 0) {
        if (base.is_zero()) {
            throw std::domain_error("zero raised to a negative power");
        }
        return Rational(1) / pow(base, -exponent);
    }
    Rational result(1);
    Rational square = base;
    auto e = static_cast<std::uint64_t>(exponent);
    while (e != 0) {
        if (e & 1U) {
            result *= square;
        }
        e >>= 1U;
        if (e != 0) {
            square *= square;
        }
    }
    return result;
}

} // namespace segre
