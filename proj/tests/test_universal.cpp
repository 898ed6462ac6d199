#include <doctest.h>

#include <stdexcept>
#include <thread>
#include <vector>

#include <segre/k3.hpp>
#include <segre/universal.hpp>

#include "support/oracles.hpp"

using segre::Rational;
using segre::Series;
using segre::SurfaceInvariants;
using namespace segre::testing;

namespace
{

// Single-exponent specializations of the Lehn generating function, computed
// by the Fraction-based script in tests/oracles. They must coincide with the
// engine's universal series.
const std::vector<std::string> kA{"1",          "1",          "-9/2",          "65/2",          "-2261/8",
                                  "21735/8",    "-445005/16", "4756609/16",    "-419761485/128", "4742880779/128",
                                  "-109224304343/256"};
const std::vector<std::string> kB{"1",           "0",          "1/2",             "-20/3",           "649/8",
                                  "-2938/3",     "1712459/144", "-873629/6",      "2070341075/1152", "-7239119245/324",
                                  "644059381975/2304"};
const std::vector<std::string> kC{"1",       "0",        "-5/2",            "32",       "-2989/8", "4344",
                                  "-816081/16", "605944", "-931595901/128", "88269041", "-276371655659/256"};
const std::vector<std::string> kD{"1",            "0",         "-1/2",             "28/3",             "-1099/8",
                                  "5650/3",       "-3614071/144", "1981139/6",     "-4973938277/1152", "18241351661/324",
                                  "-1689591925327/2304"};

const segre::UniversalSeriesSet &universal10()
{
    static const segre::UniversalSeriesSet u = segre::determine_universal(10);
    return u;
}

} // namespace

TEST_CASE("A and B")
{
    const auto [a, b] = segre::determine_ab(10);
    CHECK(a[1] == Rational(1));
    CHECK(a[2] == Rational(-9, 2));
    CHECK(b[1] == Rational(0));
    CHECK(coeffs_of(a) == parse_all(kA));
    CHECK(coeffs_of(b) == parse_all(kB));

    const segre::BSequences seqs = segre::determine_b_s1(10);
    CHECK(coeffs_of(a * a) == seqs.b);
    CHECK(coeffs_of(pow(b, 24)) == seqs.s1);
}

TEST_CASE("C and D")
{
    const auto &u = universal10();
    CHECK(u.c[0] == Rational(1));
    CHECK(u.d[0] == Rational(1));
    CHECK(u.c[1] == Rational(0));
    CHECK(u.d[1] == Rational(0));
    CHECK(segre::segre_number({7, 1, -1, 25}, 2, u) == Rational(0));
    CHECK(segre::segre_number({8, 2, -1, 25}, 2, u) == Rational(0));
    CHECK(coeffs_of(u.c) == parse_all(kC));
    CHECK(coeffs_of(u.d) == parse_all(kD));
    CHECK(u.order() == 10);

    CHECK_THROWS_AS(segre::determine_cd(5, u.a.truncated(3), u.b), std::invalid_argument);
}

TEST_CASE("probe-and-solve relies on s_k being affine in (C_k, D_k)")
{
    // Perturbing C_k by t moves s_k by pi * t and nothing else at order k.
    const auto &u = universal10();
    RandomSeries gen(23);
    for (int i = 0; i < 10; ++i) {
        const SurfaceInvariants inv{gen.integer(-5, 5), gen.integer(-5, 5), gen.integer(-5, 5), gen.integer(-5, 30)};
        const std::size_t k = gen.order(2, 7);
        const Rational t = gen.rational();
        segre::UniversalSeriesSet moved = u;
        moved.c = u.c.with_coeff(k, u.c[k] + t);
        moved.d = u.d.with_coeff(k, u.d[k] + t);
        const Rational delta = segre::segre_number(inv, k, moved) - segre::segre_number(inv, k, u);
        CHECK(delta == Rational(inv.pi + inv.kappa) * t);
    }
}

TEST_CASE("segre_series basics")
{
    const auto &u = universal10();
    CHECK(segre::segre_series({0, 0, 0, 0}, 10, u) == Series::constant(1, 10));
    RandomSeries gen(29);
    for (int i = 0; i < 20; ++i) {
        const SurfaceInvariants inv{gen.integer(-20, 20), gen.integer(-20, 20), gen.integer(-20, 20),
                                    gen.integer(-30, 30)};
        CHECK(segre::segre_series(inv, 3, u)[1] == Rational(inv.d));
    }
    CHECK_THROWS_WITH_AS(segre::segre_series({1, 0, 0, 0}, 11, u), "insufficient truncation order",
                         std::invalid_argument);
}

TEST_CASE("segre_number examples")
{
    const auto &u = universal10();
    CHECK(segre::segre_number({2, 0, 0, 0}, 1, u) == Rational(2));
    CHECK(segre::segre_number({28, 4, -1, 25}, 5, u) == Rational(0));
    CHECK(segre::segre_number({12, 0, 0, 24}, 2, u) == Rational(24));
    for (std::size_t k = 1; k <= 10; ++k) {
        CHECK(segre::segre_number({0, 2, 1, 11}, k, u) == Rational(0));
    }
    CHECK_THROWS_WITH_AS(segre::segre_number({1, 0, 0, 0}, 11, u), "insufficient truncation order",
                         std::invalid_argument);

    // Frozen from the oracle script: the Lehn series at the k = 5 target.
    const Series s = segre::segre_series({28, 4, -1, 25}, 8, u);
    CHECK(coeffs_of(s) == parse_all({"1", "28", "255", "820", "632", "0", "1", "-340", "333"}));
    CHECK(coeffs_of(segre::segre_series({3, -2, 1, 12}, 8, u))
          == parse_all({"1", "3", "0", "-95/3", "2093/4", "-29025/4", "863429/9", "-4989465/4", "515843341/32"}));
}

TEST_CASE("blow-up targets")
{
    const auto five = segre::blowup_targets(5);
    CHECK(five.first.invariants == SurfaceInvariants{28, 4, -1, 25});
    CHECK(five.second.invariants == SurfaceInvariants{29, 5, -1, 25});
    CHECK(five.first.genus == 23);
    CHECK(five.first.multiplicity == 4);
    CHECK(five.first.sections() == 14);

    const auto two = segre::blowup_targets(2);
    CHECK(two.first.invariants == SurfaceInvariants{7, 1, -1, 25});
    CHECK(two.second.invariants == SurfaceInvariants{8, 2, -1, 25});

    for (std::int64_t k = 2; k <= 30; ++k) {
        const auto t = segre::blowup_targets(k);
        CHECK(t.first.invariants == SurfaceInvariants{7 * (k - 1), k - 1, -1, 25});
        CHECK(t.second.invariants == SurfaceInvariants{7 * (k - 1) + 1, k, -1, 25});
        CHECK(t.first.sections() == 3 * k - 1);
        CHECK(t.second.sections() == 3 * k - 1);
        CHECK(t.first.multiplicity + 1 == k);
        CHECK(t.second.multiplicity == k);
    }
    CHECK_THROWS_WITH_AS(segre::blowup_targets(1), "targets defined for k >= 2 only", std::invalid_argument);
}

TEST_CASE("defining vanishings hold at every order")
{
    const auto &u = universal10();
    for (std::int64_t k = 2; k <= 10; ++k) {
        const auto t = segre::blowup_targets(k);
        const auto n = static_cast<std::size_t>(k);
        CHECK(segre::segre_number(t.first.invariants, n, u).is_zero());
        CHECK(segre::segre_number(t.second.invariants, n, u).is_zero());
    }
}

TEST_CASE("K3 and abelian consistency")
{
    const auto &u = universal10();
    for (std::int64_t g = -19; g <= 21; ++g) {
        const Series s = segre::segre_series({2 * g - 2, 0, 0, 24}, 10, u);
        for (std::int64_t k = 0; k <= 10; ++k) {
            REQUIRE(s[static_cast<std::size_t>(k)] == segre::closed_segre(k, segre::GenusIndex{g}));
        }
    }
    const Series abelian(segre::determine_b_s1(10).b);
    CHECK(segre::segre_series({2, 0, 0, 0}, 10, u) == abelian);
    for (std::int64_t m = 2; m <= 4; ++m) {
        CHECK(segre::segre_series({2 * m, 0, 0, 0}, 10, u) == pow(abelian, Rational(m)));
    }
}

TEST_CASE("property: multiplicativity under disjoint union")
{
    const auto &u = universal10();
    RandomSeries gen(31);
    for (int i = 0; i < 25; ++i) {
        const SurfaceInvariants a{gen.integer(-6, 6), gen.integer(-6, 6), gen.integer(-6, 6), gen.integer(-25, 25)};
        const SurfaceInvariants b{gen.integer(-6, 6), gen.integer(-6, 6), gen.integer(-6, 6), gen.integer(-25, 25)};
        const std::size_t n = gen.order(1, 8);
        REQUIRE(segre::segre_series(a + b, n, u) == segre::segre_series(a, n, u) * segre::segre_series(b, n, u));
    }
}

TEST_CASE("property: k! s_k is an integer for k <= 5")
{
    const auto &u = universal10();
    RandomSeries gen(37);
    for (int i = 0; i < 30; ++i) {
        const SurfaceInvariants inv{gen.integer(-10, 30), gen.integer(-10, 10), gen.integer(-10, 10),
                                    gen.integer(-10, 30)};
        Rational factorial(1);
        for (std::size_t k = 1; k <= 5; ++k) {
            factorial *= Rational(static_cast<std::int64_t>(k));
            REQUIRE((factorial * segre::segre_number(inv, k, u)).is_integer());
        }
    }
}

TEST_CASE("geometric parity")
{
    CHECK(SurfaceInvariants{28, 4, -1, 25}.is_geometric());
    CHECK(SurfaceInvariants{0, 0, 0, 24}.is_geometric());
    CHECK_FALSE(SurfaceInvariants{1, 0, 0, 24}.is_geometric());
    CHECK_FALSE(SurfaceInvariants{0, 0, 0, 1}.is_geometric());
    CHECK(SurfaceInvariants{-2, 0, 0, -12}.is_geometric());
}

TEST_CASE("segre table cross-route bookkeeping")
{
    segre::SegreTable table;
    table.record({12, 0, 0, 24}, 2, segre::Route::closed, 24);
    table.record({12, 0, 0, 24}, 2, segre::Route::engine, 24);
    table.record({12, 0, 0, 24}, 2, segre::Route::lehn, 24);
    CHECK(table.size() == 1);
    CHECK(table.disagreements().empty());
    CHECK(table.lookup({12, 0, 0, 24}, 2, segre::Route::lehn) == Rational(24));
    CHECK_FALSE(table.lookup({12, 0, 0, 24}, 3, segre::Route::lehn).has_value());

    table.record({1, 0, 0, 0}, 1, segre::Route::engine, 1);
    table.record({1, 0, 0, 0}, 1, segre::Route::lehn, 2);
    const auto bad = table.disagreements();
    REQUIRE(bad.size() == 1);
    CHECK(bad[0].key.invariants == SurfaceInvariants{1, 0, 0, 0});
    CHECK(bad[0].first_route == segre::Route::engine);
    CHECK(bad[0].second_route == segre::Route::lehn);
}

TEST_CASE("engine cache is shared and thread safe")
{
    segre::SegreEngine engine;
    std::vector<Rational> results(8);
    std::vector<std::thread> threads;
    for (std::size_t i = 0; i < results.size(); ++i) {
        threads.emplace_back([&, i] { results[i] = engine.number({28, 4, -1, 25}, 5); });
    }
    for (auto &t : threads) {
        t.join();
    }
    for (const auto &r : results) {
        CHECK(r.is_zero());
    }
    CHECK(engine.universal(5).get() == engine.universal(5).get());
    CHECK(engine.series({2, 0, 0, 0}, 2) == Series({1, 2, -8}, 2));
}
