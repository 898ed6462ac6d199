#ifndef SEGRE_UNIVERSAL_HPP
#define SEGRE_UNIVERSAL_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <ostream>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include <segre/rational.hpp>
#include <segre/series.hpp>

namespace segre
{

// (d, pi, kappa, e) = (H^2, H.K, K^2, c_2). Any integer tuple is accepted.
struct SurfaceInvariants {
    std::int64_t d = 0;
    std::int64_t pi = 0;
    std::int64_t kappa = 0;
    std::int64_t e = 0;

    friend SurfaceInvariants operator+(const SurfaceInvariants &a, const SurfaceInvariants &b)
    {
        return {a.d + b.d, a.pi + b.pi, a.kappa + b.kappa, a.e + b.e};
    }
    friend auto operator<=>(const SurfaceInvariants &, const SurfaceInvariants &) = default;

    // False when no surface can carry these numbers: Noether needs
    // 12 | (kappa + e) and adjunction needs d + pi even.
    [[nodiscard]] bool is_geometric() const;

    friend std::ostream &operator<<(std::ostream &os, const SurfaceInvariants &inv);
};

// A, B, C, D with s(z) = A^d B^e C^pi D^kappa, all unit series of a common order.
struct UniversalSeriesSet {
    Series a;
    Series b;
    Series c;
    Series d;

    [[nodiscard]] std::size_t order() const { return a.order(); }

    friend bool operator==(const UniversalSeriesSet &, const UniversalSeriesSet &) = default;
};

// A = sqrt of the abelian (theta^2 = 2) series b(z), B = 24th root of the
// genus-1 K3 series sum s_{k,1} z^k, both taken from determine_b_s1.
std::pair<Series, Series> determine_ab(std::size_t order);

// Fixes C_k and D_k order by order from the blow-up vanishings. The z^k
// coefficient of C^pi is pi C_k plus a polynomial in C_1..C_{k-1}, since
// (log C)_k = C_k + (terms in lower coefficients); the same holds for D^kappa.
// So s_k is affine in (C_k, D_k) with linear part pi C_k + kappa D_k, and
// probing with C_k = D_k = 0 yields the constants nu, nu' exactly.
std::pair<Series, Series> determine_cd(std::size_t order, const Series &a, const Series &b);

UniversalSeriesSet determine_universal(std::size_t order);

// A^d B^e C^pi D^kappa truncated at the given order.
// Throws std::invalid_argument("insufficient truncation order") if order > U.order().
Series segre_series(const SurfaceInvariants &inv, std::size_t order, const UniversalSeriesSet &u);

// z^k coefficient of segre_series. Throws std::invalid_argument("insufficient
// truncation order") when k exceeds U.order().
Rational segre_number(const SurfaceInvariants &inv, std::size_t k, const UniversalSeriesSet &u);

// The two blow-up tuples where s_k vanishes, with the underlying (g, l) data
// of H = L(-lE) on a K3 blown up at a point: d = 2g - 2 - l^2, pi = l and
// g - l(l+1)/2 = 3k - 2.
struct BlowupTarget {
    SurfaceInvariants invariants;
    std::int64_t genus;    // g
    std::int64_t multiplicity; // l
    // h^0(H) = g + 1 - l(l+1)/2, which equals 3k - 1.
    [[nodiscard]] std::int64_t sections() const { return genus + 1 - multiplicity * (multiplicity + 1) / 2; }
};

struct BlowupTargets {
    BlowupTarget first;  // k = l + 1: (7(k-1), k-1, -1, 25)
    BlowupTarget second; // k = l:     (7(k-1)+1, k, -1, 25)
};

// Throws std::invalid_argument("targets defined for k >= 2 only").
BlowupTargets blowup_targets(std::int64_t k);

enum class Route { closed, engine, lehn };

std::string_view to_string(Route route);

// Values keyed by (invariants, k, route) for cross-route comparison.
class SegreTable
{
public:
    struct Key {
        SurfaceInvariants invariants;
        std::size_t k;
        friend auto operator<=>(const Key &, const Key &) = default;
    };

    struct Disagreement {
        Key key;
        Route first_route;
        Rational first_value;
        Route second_route;
        Rational second_value;
    };

    void record(const SurfaceInvariants &inv, std::size_t k, Route route, Rational value);
    [[nodiscard]] std::optional<Rational> lookup(const SurfaceInvariants &inv, std::size_t k, Route route) const;
    // Keys where at least two routes hold different values.
    [[nodiscard]] std::vector<Disagreement> disagreements() const;
    [[nodiscard]] std::size_t size() const { return entries_.size(); }

private:
    std::map<Key, std::map<Route, Rational>> entries_;
};

// Caches universal series sets per truncation order. Thread-safe.
class SegreEngine
{
public:
    std::shared_ptr<const UniversalSeriesSet> universal(std::size_t order);
    Rational number(const SurfaceInvariants &inv, std::size_t k);
    Series series(const SurfaceInvariants &inv, std::size_t order);

private:
    std::mutex mutex_;
    std::map<std::size_t, std::shared_ptr<const UniversalSeriesSet>> cache_;
};

} // namespace segre

#endif
