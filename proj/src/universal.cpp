#include <segre/universal.hpp>

#include <segre/k3.hpp>

#include <stdexcept>

namespace segre
{

bool SurfaceInvariants::is_geometric() const
{
    return (kappa + e) % 12 == 0 && (d + pi) % 2 == 0;
}

std::ostream &operator<<(std::ostream &os, const SurfaceInvariants &inv)
{
    return os << '(' << inv.d << ", " << inv.pi << ", " << inv.kappa << ", " << inv.e << ')';
}

std::pair<Series, Series> determine_ab(std::size_t order)
{
    const BSequences seqs = determine_b_s1(static_cast<std::int64_t>(order));
    const Series abelian(seqs.b);
    const Series k3_genus_one(seqs.s1);
    return {pow(abelian, Rational(1, 2)), pow(k3_genus_one, Rational(1, 24))};
}

std::pair<Series, Series> determine_cd(std::size_t order, const Series &a, const Series &b)
{
    if (a.order() < order || b.order() < order) {
        throw std::invalid_argument("insufficient truncation order");
    }
    // C_1 = D_1 = 0 since s_1 = d for every tuple.
    Series c = Series::constant(1, order);
    Series d = Series::constant(1, order);
    for (std::size_t k = 2; k <= order; ++k) {
        const UniversalSeriesSet probe{a.truncated(k), b.truncated(k), c.truncated(k), d.truncated(k)};
        const BlowupTargets targets = blowup_targets(static_cast<std::int64_t>(k));
        const Rational nu = segre_number(targets.first.invariants, k, probe);
        const Rational nu_prime = segre_number(targets.second.invariants, k, probe);
        // 0 = (k-1) C_k - D_k + nu
        // 0 = k C_k - D_k + nu'
        const Rational c_k = nu - nu_prime;
        const Rational d_k = Rational(static_cast<std::int64_t>(k) - 1) * c_k + nu;
        c = c.with_coeff(k, c_k);
        d = d.with_coeff(k, d_k);
    }
    return {c, d};
}

UniversalSeriesSet determine_universal(std::size_t order)
{
    auto [a, b] = determine_ab(order);
    auto [c, d] = determine_cd(order, a, b);
    return {std::move(a), std::move(b), std::move(c), std::move(d)};
}

Series segre_series(const SurfaceInvariants &inv, std::size_t order, const UniversalSeriesSet &u)
{
    if (order > u.order()) {
        throw std::invalid_argument("insufficient truncation order");
    }
    return pow(u.a.truncated(order), Rational(inv.d)) * pow(u.b.truncated(order), Rational(inv.e))
           * pow(u.c.truncated(order), Rational(inv.pi)) * pow(u.d.truncated(order), Rational(inv.kappa));
}

Rational segre_number(const SurfaceInvariants &inv, std::size_t k, const UniversalSeriesSet &u)
{
    return segre_series(inv, k, u)[k];
}

BlowupTargets blowup_targets(std::int64_t k)
{
    if (k < 2) {
        throw std::invalid_argument("targets defined for k >= 2 only");
    }
    const auto make = [k](std::int64_t l) {
        const std::int64_t g = 3 * k - 2 + l * (l + 1) / 2;
        return BlowupTarget{SurfaceInvariants{2 * g - 2 - l * l, l, -1, 25}, g, l};
    };
    return {make(k - 1), make(k)};
}

std::string_view to_string(Route route)
{
    switch (route) {
    case Route::closed:
        return "closed";
    case Route::engine:
        return "engine";
    case Route::lehn:
        return "lehn";
    }
    return "unknown";
}

void SegreTable::record(const SurfaceInvariants &inv, std::size_t k, Route route, Rational value)
{
    entries_[Key{inv, k}].insert_or_assign(route, std::move(value));
}

std::optional<Rational> SegreTable::lookup(const SurfaceInvariants &inv, std::size_t k, Route route) const
{
    const auto it = entries_.find(Key{inv, k});
    if (it == entries_.end()) {
        return std::nullopt;
    }
    const auto jt = it->second.find(route);
    if (jt == it->second.end()) {
        return std::nullopt;
    }
    return jt->second;
}

std::vector<SegreTable::Disagreement> SegreTable::disagreements() const
{
    std::vector<Disagreement> out;
    for (const auto &[key, routes] : entries_) {
        const auto &[first_route, first_value] = *routes.begin();
        for (const auto &[route, value] : routes) {
            if (value != first_value) {
                out.push_back({key, first_route, first_value, route, value});
            }
        }
    }
    return out;
}

std::shared_ptr<const UniversalSeriesSet> SegreEngine::universal(std::size_t order)
{
    std::lock_guard lock(mutex_);
    auto &slot = cache_[order];
    if (!slot) {
        slot = std::make_shared<const UniversalSeriesSet>(determine_universal(order));
    }
    return slot;
}

Rational SegreEngine::number(const SurfaceInvariants &inv, std::size_t k)
{
    return segre_number(inv, k, *universal(k));
}

Series SegreEngine::series(const SurfaceInvariants &inv, std::size_t order)
{
    return segre_series(inv, order, *universal(order));
}

} // namespace segre
