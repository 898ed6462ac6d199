#ifndef SEGRE_LEHN_HPP
#define SEGRE_LEHN_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <segre/rational.hpp>
#include <segre/series.hpp>
#include <segre/universal.hpp>

namespace segre
{

// Exponents of the closed generating function
//     (1 - w)^a (1 - 2w)^b / (1 - 6w + 6w^2)^c
// with chi = (kappa + e)/12, a = pi - 2 kappa, b = d - 2 pi + kappa + 3 chi,
// c = (d - pi)/2 + chi.
struct LehnExponents {
    Rational a;
    Rational b;
    Rational c;
    Rational chi;

    friend bool operator==(const LehnExponents &, const LehnExponents &) = default;
};

LehnExponents lehn_exponents(const SurfaceInvariants &inv);

// z = w (1 - w)(1 - 2w)^4 / (1 - 6w + 6w^2)^3 as a series in w, and its
// compositional inverse w(z). Both have order N.
struct ChangeOfVariable {
    Series z_of_w;
    Series w_of_z;

    [[nodiscard]] std::size_t order() const { return z_of_w.order(); }
};

ChangeOfVariable change_of_variable(std::size_t order);

// Taylor expansion in z of the generating function, truncated at `order`.
// The second overload reuses a precomputed substitution of order >= `order`.
Series lehn_series(const SurfaceInvariants &inv, std::size_t order);
Series lehn_series(const SurfaceInvariants &inv, std::size_t order, const ChangeOfVariable &cov);

// Single-exponent specializations: A from (1,0,0,0), B from (0,0,0,1),
// C from (0,1,0,0), D from (0,0,1,0).
UniversalSeriesSet extract_lehn_universal(std::size_t order);

struct VanishingCheck {
    std::int64_t k;
    BlowupTarget target;
    Rational coefficient;

    [[nodiscard]] bool vanishes() const { return coefficient.is_zero(); }
};

// z^k coefficient of the generating function at both blow-up tuples, for
// 2 <= k <= max_k; two entries per k, first target first.
std::vector<VanishingCheck> check_blowup_vanishings(std::int64_t max_k);

// Lehn's published degree-5 polynomial for 5! s_5, divided by 5!.
Rational eval_s5_polynomial(const SurfaceInvariants &inv);

// Monomial d^i pi^j kappa^m e^n, stored as {i, j, m, n}.
using Monomial = std::array<int, 4>;

std::string to_string(const Monomial &m);

// Monomial coefficients of a polynomial of total degree <= `degree` in
// (d, pi, kappa, e), recovered from its values on the lattice simplex by
// forward differences. Zero coefficients are omitted.
std::map<Monomial, Rational> interpolate_polynomial(const std::function<Rational(const SurfaceInvariants &)> &fn,
                                                    int degree);

struct MonomialMismatch {
    Monomial monomial;
    Rational published; // coefficient in 5! s_5 as printed
    Rational engine;    // coefficient in 5! s_5 from the universal series
};

// Compares the published 5! s_5 polynomial with the engine monomial by
// monomial. Empty when they agree. Requires u.order() >= 5.
std::vector<MonomialMismatch> s5_polynomial_mismatches(const UniversalSeriesSet &u);

} // namespace segre

#endif
