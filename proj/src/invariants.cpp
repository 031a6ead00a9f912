#include "giz/invariants.hpp"

#include <algorithm>

#include "giz/errors.hpp"

namespace giz {

PointSet::PointSet(std::vector<CycNumber> pts, Ambient amb) : points(std::move(pts)), ambient(amb) {
    std::sort(points.begin(), points.end());
    for (std::size_t k = 1; k < points.size(); ++k)
        if (points[k] == points[k - 1]) throw InputError("duplicate point " + points[k].str());
    if (ambient == Ambient::Star)
        for (const auto& p : points)
            if (p.is_zero()) throw InputError("point set on C* contains 0");
}

bool PointSet::contains(const CycNumber& x) const { return std::binary_search(points.begin(), points.end(), x); }

PointSet PointSet::scaled(const CycNumber& alpha) const {
    std::vector<CycNumber> out;
    out.reserve(points.size());
    for (const auto& p : points) out.push_back(alpha * p);
    return PointSet(std::move(out), ambient);
}

namespace {

bool maps_onto(const PointSet& a, const CycNumber& alpha, const CycNumber& beta, const PointSet& b) {
    for (const auto& p : a.points)
        if (!b.contains(alpha * p + beta)) return false;
    return true;
}

int conductor_of(const PointSet& a) { return a.points.empty() ? 1 : a.points.front().conductor(); }

}  // namespace

SymmetryGroup symmetry_group(const PointSet& a) {
    if (a.ambient != Ambient::Star) throw InputError("symmetry group needs a configuration on C*");
    SymmetryGroup g;
    if (a.points.empty()) {
        g.full = true;
        return g;
    }
    const int n = conductor_of(a);
    const CycNumber zero(0, n);
    const CycNumber& first = a.points.front();
    std::vector<CycNumber> elems;
    for (const auto& b : a.points) {
        CycNumber alpha = b / first;
        if (maps_onto(a, alpha, zero, a)) elems.push_back(alpha);
    }
    g.order = static_cast<int>(elems.size());
    for (const auto& x : elems) {
        auto ord = root_of_unity_order(x);
        if (ord && *ord == g.order) {
            g.generator = x;
            return g;
        }
    }
    throw InvariantError("stabilizer is not cyclic");
}

std::vector<std::vector<CycNumber>> orbit_partition(const PointSet& a) {
    std::vector<std::vector<CycNumber>> out;
    if (a.points.empty()) return out;
    SymmetryGroup g = symmetry_group(a);
    std::vector<bool> used(a.points.size(), false);
    for (std::size_t k = 0; k < a.points.size(); ++k) {
        if (used[k]) continue;
        std::vector<CycNumber> orbit;
        CycNumber x = a.points[k];
        for (int e = 0; e < g.order; ++e) {
            auto it = std::lower_bound(a.points.begin(), a.points.end(), x);
            used[static_cast<std::size_t>(it - a.points.begin())] = true;
            orbit.push_back(x);
            x *= g.generator;
        }
        std::sort(orbit.begin(), orbit.end());
        out.push_back(std::move(orbit));
    }
    return out;
}

std::optional<ConfigWitness> config_equal(const PointSet& a, const PointSet& b) {
    if (a.ambient != b.ambient) throw InputError("configuration ambient mismatch");
    const int n = std::max(conductor_of(a), conductor_of(b));
    const CycNumber zero(0, n), one(1, n);
    if (a.size() != b.size()) return std::nullopt;
    if (a.points.empty()) return ConfigWitness{one, zero};
    if (a.ambient == Ambient::Star) {
        for (const auto& y : b.points) {
            CycNumber alpha = y / a.points.front();
            if (maps_onto(a, alpha, zero, b)) return ConfigWitness{alpha, zero};
        }
        return std::nullopt;
    }
    if (a.size() == 1) return ConfigWitness{one, b.points.front() - a.points.front()};
    const CycNumber& a1 = a.points[0];
    const CycNumber& a2 = a.points[1];
    for (const auto& b1 : b.points) {
        for (const auto& b2 : b.points) {
            if (b1 == b2) continue;
            CycNumber alpha = (b1 - b2) / (a1 - a2);
            CycNumber beta = b1 - alpha * a1;
            if (maps_onto(a, alpha, beta, b)) return ConfigWitness{alpha, beta};
        }
    }
    return std::nullopt;
}

ConfigInvariant config_invariant(const ExtendedDivisor& e) {
    auto types = classify_components(e);
    ConfigInvariant q;
    for (int i = 2; i <= e.n(); ++i) {
        ComponentType t = types[i - 2];
        q.entries.push_back({i, t, PointSet(e.bases_with_mother(i), t == ComponentType::Star ? Ambient::Star : Ambient::Plus)});
    }
    return q;
}

namespace {

bool entry_equal(const ConfigEntry& a, const ConfigEntry& b) {
    return a.type == b.type && config_equal(a.rep, b.rep).has_value();
}

}  // namespace

bool config_invariant_equal(const ConfigInvariant& a, const ConfigInvariant& b) {
    if (a.entries.size() != b.entries.size()) return false;
    for (std::size_t k = 0; k < a.entries.size(); ++k)
        if (!entry_equal(a.entries[k], b.entries[k])) return false;
    return true;
}

SymmetryReport is_symmetric(const ExtendedDivisor& e) {
    if (!is_minus_one_completion(e)) throw PreconditionError("symmetry test needs a (-1)-completion");
    const int n = e.n();
    ConfigInvariant q = config_invariant(e);
    SymmetryReport rep;
    rep.literal = true;
    bool mirrored = true;
    for (int i = 2; i <= n; ++i) {
        int v = n + 2 - i;
        if (!entry_equal(q.at(i), q.at(v))) rep.literal = false;
        if (e.zigzag[i] != e.zigzag[v] || e.r(i) != e.r(v)) mirrored = false;
    }
    rep.symmetric = rep.literal && mirrored;
    if (rep.symmetric) {
        for (int i = 2; i <= n; ++i) {
            const ConfigEntry& c = q.at(i);
            if (c.type != ComponentType::Star || c.rep.points.empty()) continue;
            rep.alpha[i] = config_equal(c.rep, q.at(n + 2 - i).rep)->alpha;
        }
    }
    return rep;
}

}  // namespace giz
