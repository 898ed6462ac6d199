#ifndef SEGRE_K3_HPP
#define SEGRE_K3_HPP

#include <cstdint>
#include <vector>

#include <segre/rational.hpp>

namespace segre
{

// Genus parameter of a polarized K3 surface, H^2 = 2g - 2. Any integer is allowed.
struct GenusIndex {
    std::int64_t g;

    [[nodiscard]] std::int64_t degree() const { return 2 * g - 2; }
};

// n(n-1)...(n-k+1)/k! for any integer n.
// Throws std::invalid_argument("binomial lower index must be non-negative") for k < 0.
Rational generalized_binomial(std::int64_t n, std::int64_t k);

// Top Segre number s_{k,g} = 2^k binom(g - 2k + 1, k) of a K3 surface,
// valid for every integer g. Throws std::invalid_argument for k < 0.
Rational closed_segre(std::int64_t k, GenusIndex g);

// Sequences fixed by the genus recursion
//     s_{k,g} = sum_{l=0}^{k} b_l s_{k-l,g-1}
// together with s_{0,g} = 1, s_{1,g} = 2g - 2, b_0 = 1, b_1 = 2 and the
// vanishings s_{k,2k} = s_{k,2k-1} = 0 for k >= 2.
struct BSequences {
    std::vector<Rational> b;       // abelian numbers b_0..b_K
    std::vector<Rational> s1;      // s_{k,1}, k = 0..K
    std::vector<Rational> b_prime; // interpolated b'_0..b'_K, empty unless requested

    [[nodiscard]] std::size_t size() const { return b.size(); }
};

// Solves, for each k = 2..K, the 2x2 affine system in (s_{k,1}, b_k) obtained
// by telescoping the recursion from g = 1 to g = 2k - 1 and g = 2k.
// b_prime is left empty.
BSequences determine_b_s1(std::int64_t max_k);

// Same as determine_b_s1, with b_prime filled by determine_b_prime.
BSequences determine_sequences(std::int64_t max_k);

// s_{k,g} for g >= 1 by iterating the recursion upward from the g = 1 column.
// Throws std::invalid_argument("b-sequence too short") when seqs does not reach
// index k, and std::invalid_argument for g < 1 or k < 0.
Rational recursion_segre(std::int64_t k, std::int64_t g, const BSequences &seqs);

// The full column (s_{0,g}, ..., s_{k,g}) of the recursion, g >= 1.
std::vector<Rational> recursion_column(std::int64_t k, std::int64_t g, const BSequences &seqs);

// Coefficients b'_{0,k}, ..., b'_{k,k} with
//     s'_{k,g} = sum_{l=0}^{k} b'_{l,k} s'_{k-l,g-1}   for all g,
// where s' is closed_segre. Found by solving the square system at g = 1..k+1.
std::vector<Rational> solve_b_prime_system(std::int64_t k);

// b'_0..b'_K, taken from the system of size K.
std::vector<Rational> determine_b_prime(std::int64_t max_k);

} // namespace segre

#endif
