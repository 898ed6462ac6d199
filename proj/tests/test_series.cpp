#include <doctest.h>

#include <stdexcept>
#include <string>

#include <segre/series.hpp>

#include "support/oracles.hpp"

using segre::Rational;
using segre::Series;
using namespace segre::testing;

namespace
{

Series geometric(std::size_t order)
{
    return Series(std::vector<Rational>(order + 1, Rational(1)));
}

void check_canonical(const Series &s)
{
    for (const auto &c : s.coefficients()) {
        REQUIRE(gcd(c.numerator(), c.denominator()) == 1);
        REQUIRE(c.denominator() > 0);
    }
}

} // namespace

TEST_CASE("construction")
{
    CHECK(Series().order() == 0);
    CHECK(Series(4).is_zero());
    CHECK(Series({1, 2, 3}, 1).order() == 1);
    CHECK(Series({1, 2}, 3) == Series(std::vector<Rational>{1, 2, 0, 0}));
    CHECK(Series::variable(3).coeff(1) == Rational(1));
    CHECK(Series::variable(3).coeff(7) == Rational(0));
    CHECK_THROWS_AS(Series(std::vector<Rational>{}), std::invalid_argument);
}

TEST_CASE("ring operations")
{
    SUBCASE("difference of squares")
    {
        const Series p({1, 1}, 4);
        const Series m({1, -1}, 4);
        CHECK(p * m == Series({1, 0, -1}, 4));
    }
    SUBCASE("geometric series")
    {
        CHECK(Series::constant(1, 4) / Series({1, -1}, 4) == geometric(4));
    }
    SUBCASE("self-cancellation")
    {
        const Series f({1, 3}, 5);
        CHECK((f - f).is_zero());
    }
    SUBCASE("mixed orders truncate to the minimum")
    {
        const Series f({1, 1, 1, 1}, 3);
        const Series g({2, 0, 5, 0, 0, 9}, 5);
        CHECK((f + g).order() == 3);
        CHECK((f * g).order() == 3);
        CHECK((f / g).order() == 3);
        CHECK((g - f) == Series({1, -1, 4, -1}, 3));
    }
    SUBCASE("non-unit divisor")
    {
        CHECK_THROWS_WITH_AS(Series({1}, 3) / Series({0, 1}, 3), "non-unit divisor", std::domain_error);
    }
}

TEST_CASE("equality compares up to the smaller order")
{
    CHECK(Series({1, 2, 3}, 2) == Series({1, 2}, 1));
    CHECK(Series({1, 2, 3}, 2) != Series({1, 2, 4}, 2));
}

TEST_CASE("log and exp")
{
    CHECK(log(Series::constant(1, 6)).is_zero());

    const Series one_plus_z({1, 1}, 6);
    CHECK(exp(log(one_plus_z)) == one_plus_z);

    // log 1/(1-z) = sum z^k / k, verified against the exp roundtrip as well.
    const Series l = log(geometric(4));
    CHECK(l == Series({0, 1, Rational(1, 2), Rational(1, 3), Rational(1, 4)}, 4));
    CHECK(exp(l) == geometric(4));

    // exp(z) = sum z^k / k!
    CHECK(exp(Series::variable(5))
          == Series({1, 1, Rational(1, 2), Rational(1, 6), Rational(1, 24), Rational(1, 120)}, 5));

    CHECK_THROWS_WITH_AS(log(Series({2, 1}, 3)), "log of non-unit series", std::domain_error);
    CHECK_THROWS_WITH_AS(exp(Series({1, 1}, 3)), "exp of series with nonzero constant term", std::domain_error);
}

TEST_CASE("rational powers")
{
    const Series one_plus_z({1, 1}, 6);
    CHECK(pow(one_plus_z, 0) == Series::constant(1, 6));
    CHECK(pow(pow(one_plus_z, Rational(1, 2)), 2) == one_plus_z);
    CHECK(pow(Series({1, -1}, 3), -1) == geometric(3));

    // Non-negative integer powers accept any base.
    CHECK(pow(Series({2, 1}, 3), 3) == Series({8, 12, 6, 1}, 3));
    CHECK(pow(Series({0, 1}, 4), 2) == Series({0, 0, 1}, 4));

    // sqrt(1 + z) = 1 + z/2 - z^2/8 + z^3/16 - 5 z^4/128
    CHECK(pow(one_plus_z, Rational(1, 2))
          == Series({1, Rational(1, 2), Rational(-1, 8), Rational(1, 16), Rational(-5, 128)}, 4));

    CHECK_THROWS_WITH_AS(pow(Series({2, 1}, 3), Rational(1, 2)), "rational power of non-unit series",
                         std::domain_error);
    CHECK_THROWS_WITH_AS(pow(Series({2, 1}, 3), -1), "rational power of non-unit series", std::domain_error);
}

TEST_CASE("composition")
{
    RandomSeries gen(11);
    const Series f = gen.any(6);
    CHECK(compose(f, Series::variable(6)) == f);

    const Series z2({0, 0, 1}, 5);
    CHECK(compose(geometric(5), z2) == Series({1, 0, 1, 0, 1, 0}, 5));

    const Series exp_z = exp(Series::variable(6));
    const Series log_1pz = log(Series({1, 1}, 6));
    CHECK(compose(exp_z, log_1pz) == Series({1, 1}, 6));

    CHECK(compose(Series({1, 1, 1}, 6), Series({0, 1}, 3)).order() == 3);
    CHECK_THROWS_WITH_AS(compose(f, Series({1, 1}, 6)), "composition requires zero constant term",
                         std::domain_error);
}

TEST_CASE("reversion")
{
    CHECK(revert(Series::variable(5)) == Series::variable(5));

    // z/(1-z) inverts to z/(1+z).
    const Series f = Series::variable(5) * geometric(5);
    const Series g = revert(f);
    CHECK(g == Series({0, 1, -1, 1, -1, 1}, 5));
    CHECK(compose(f, g) == Series::variable(5));
    CHECK(compose(g, f) == Series::variable(5));

    // Low-order piece of the Lehn substitution; inverse obtained by hand.
    CHECK(revert(Series({0, 1, 9, 68, 466}, 4)).coeff(2) == Rational(-9));
    CHECK(revert(Series({0, 1, 9, 68, 466}, 4)).coeff(3) == Rational(94));

    // Non-unit linear coefficient.
    const Series h({0, 2, 1}, 6);
    CHECK(compose(h, revert(h)) == Series::variable(6));

    CHECK_THROWS_WITH_AS(revert(Series({1, 1}, 3)), "series not invertible under composition", std::domain_error);
    CHECK_THROWS_WITH_AS(revert(Series({0, 0, 1}, 3)), "series not invertible under composition", std::domain_error);
}

TEST_CASE("property: reversion agrees with Lagrange inversion")
{
    RandomSeries gen(3);
    for (int i = 0; i < 40; ++i) {
        const std::size_t n = gen.order(1, 9);
        const Series f = gen.invertible(n);
        REQUIRE(coeffs_of(revert(f)) == lagrange_inverse(coeffs_of(f), n));
    }
}

TEST_CASE("property: ring laws against schoolbook formulas")
{
    RandomSeries gen(5);
    for (int i = 0; i < 60; ++i) {
        const std::size_t n = gen.order(0, 10);
        const Series a = gen.any(n);
        const Series b = gen.any(n);
        const Series c = gen.any(n);
        REQUIRE(coeffs_of(a * b) == naive_mul(coeffs_of(a), coeffs_of(b), n));
        REQUIRE(a * b == b * a);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        const Series u = gen.unit(n);
        REQUIRE((a * u) / u == a);
        REQUIRE(u * (a / u) == a);
        check_canonical(a * b);
        check_canonical(a / u);
    }
}

TEST_CASE("property: exp/log, powers and composition")
{
    RandomSeries gen(17);
    for (int i = 0; i < 60; ++i) {
        const std::size_t n = gen.order(1, 10);
        const Series u = gen.unit(n);
        const Series nil = gen.nilpotent(n);
        REQUIRE(exp(log(u)) == u);
        REQUIRE(log(exp(nil)) == nil);

        const Rational alpha = gen.rational(5, 4);
        const Rational beta = gen.rational(5, 4);
        REQUIRE(pow(u, alpha) * pow(u, beta) == pow(u, alpha + beta));
        if (!alpha.is_zero()) {
            REQUIRE(pow(pow(u, alpha), Rational(1) / alpha) == u);
        }
        const auto m = static_cast<unsigned>(gen.integer(0, 6));
        const Series any = gen.any(n);
        REQUIRE(coeffs_of(pow(any, Rational(static_cast<std::int64_t>(m)))) == naive_power(coeffs_of(any), m, n));

        const Series f = gen.any(n);
        REQUIRE(coeffs_of(compose(f, nil)) == naive_compose(coeffs_of(f), coeffs_of(nil), n));

        const Series inv = gen.invertible(n);
        REQUIRE(compose(inv, revert(inv)) == Series::variable(n));
        REQUIRE(compose(revert(inv), inv) == Series::variable(n));
        check_canonical(pow(u, alpha));
        check_canonical(revert(inv));
    }
}
