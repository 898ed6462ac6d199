#include <segre/k3.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace segre
{

namespace
{

// Exact Gauss-Jordan elimination for a square nonsingular system.
std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> a, std::vector<Rational> rhs)
{
    const std::size_t n = rhs.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero()) {
            ++pivot;
        }
        if (pivot == n) {
            throw std::domain_error("singular linear system");
        }
        std::swap(a[pivot], a[col]);
        std::swap(rhs[pivot], rhs[col]);
        const Rational inv = Rational(1) / a[col][col];
        for (std::size_t j = col; j < n; ++j) {
            a[col][j] *= inv;
        }
        rhs[col] *= inv;
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col].is_zero()) {
                continue;
            }
            const Rational factor = a[row][col];
            for (std::size_t j = col; j < n; ++j) {
                a[row][j] -= factor * a[col][j];
            }
            rhs[row] -= factor * rhs[col];
        }
    }
    return rhs;
}

void check_k(std::int64_t k)
{
    if (k < 0) {
        throw std::invalid_argument("binomial lower index must be non-negative");
    }
}

// One step of the genus recursion on a column (s_{0,g-1}, ..., s_{n,g-1}).
std::vector<Rational> next_column(const std::vector<Rational> &col, const std::vector<Rational> &b)
{
    std::vector<Rational> out(col.size());
    for (std::size_t j = 0; j < col.size(); ++j) {
        for (std::size_t l = 0; l <= j; ++l) {
            if (!b[l].is_zero() && !col[j - l].is_zero()) {
                out[j] += b[l] * col[j - l];
            }
        }
    }
    return out;
}

} // namespace

Rational generalized_binomial(std::int64_t n, std::int64_t k)
{
    check_k(k);
    Rational num(1);
    Rational den(1);
    for (std::int64_t i = 0; i < k; ++i) {
        num *= Rational(n - i);
        den *= Rational(i + 1);
    }
    return num / den;
}

Rational closed_segre(std::int64_t k, GenusIndex g)
{
    check_k(k);
    return pow(Rational(2), k) * generalized_binomial(g.g - 2 * k + 1, k);
}

BSequences determine_b_s1(std::int64_t max_k)
{
    if (max_k < 0) {
        throw std::invalid_argument("sequence length must be non-negative");
    }
    BSequences seqs;
    seqs.b = {Rational(1), Rational(2)};
    seqs.s1 = {Rational(1), Rational(0)};
    for (std::int64_t k = 2; k <= max_k; ++k) {
        // Columns g = 1..2k of s_{j,g} for j < k; every entry is already fixed.
        // Writing m_g = sum_{l=1}^{k-1} b_l s_{k-l,g-1}, the recursion reads
        // s_{k,g} = s_{k,g-1} + b_k + m_g, hence
        // s_{k,G} = s_{k,1} + (G - 1) b_k + sum_{g=2}^{G} m_g.
        std::vector<Rational> col = seqs.s1; // s_{j,g-1}, j < k
        Rational telescoped;
        Rational at_odd; // sum up to G = 2k - 1
        for (std::int64_t g = 2; g <= 2 * k; ++g) {
            Rational m;
            for (std::int64_t l = 1; l < k; ++l) {
                m += seqs.b[static_cast<std::size_t>(l)] * col[static_cast<std::size_t>(k - l)];
            }
            telescoped += m;
            if (g == 2 * k - 1) {
                at_odd = telescoped;
            }
            col = next_column(col, seqs.b);
        }
        // x + (2k - 2) y = -at_odd
        // x + (2k - 1) y = -telescoped
        // The linear part has determinant 1.
        const Rational y = at_odd - telescoped;
        const Rational x = -at_odd - Rational(2 * k - 2) * y;
        seqs.s1.push_back(x);
        seqs.b.push_back(y);
    }
    seqs.b.resize(static_cast<std::size_t>(max_k) + 1);
    seqs.s1.resize(static_cast<std::size_t>(max_k) + 1);
    return seqs;
}

BSequences determine_sequences(std::int64_t max_k)
{
    BSequences seqs = determine_b_s1(max_k);
    seqs.b_prime = determine_b_prime(max_k);
    return seqs;
}

std::vector<Rational> recursion_column(std::int64_t k, std::int64_t g, const BSequences &seqs)
{
    if (k < 0) {
        throw std::invalid_argument("Segre index must be non-negative");
    }
    if (g < 1) {
        throw std::invalid_argument("the recursion is defined for g >= 1 only, got g = " + std::to_string(g));
    }
    const auto n = static_cast<std::size_t>(k);
    if (seqs.b.size() <= n || seqs.s1.size() <= n) {
        throw std::invalid_argument("b-sequence too short");
    }
    std::vector<Rational> col(seqs.s1.begin(), seqs.s1.begin() + static_cast<std::ptrdiff_t>(n + 1));
    for (std::int64_t step = 1; step < g; ++step) {
        col = next_column(col, seqs.b);
    }
    return col;
}

Rational recursion_segre(std::int64_t k, std::int64_t g, const BSequences &seqs)
{
    return recursion_column(k, g, seqs).back();
}

std::vector<Rational> solve_b_prime_system(std::int64_t k)
{
    check_k(k);
    const auto n = static_cast<std::size_t>(k) + 1;
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    std::vector<Rational> rhs(n);
    for (std::size_t row = 0; row < n; ++row) {
        const auto g = static_cast<std::int64_t>(row) + 1;
        for (std::size_t l = 0; l < n; ++l) {
            a[row][l] = closed_segre(k - static_cast<std::int64_t>(l), GenusIndex{g - 1});
        }
        rhs[row] = closed_segre(k, GenusIndex{g});
    }
    return solve_linear(std::move(a), std::move(rhs));
}

std::vector<Rational> determine_b_prime(std::int64_t max_k)
{
    return solve_b_prime_system(max_k);
}

} // namespace segre
