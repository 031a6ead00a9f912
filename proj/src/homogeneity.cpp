#include "giz/homogeneity.hpp"

#include <algorithm>
#include <set>

#include "giz/errors.hpp"
#include "giz/invariants.hpp"

namespace giz {

namespace {

void require_minus_one(const ExtendedDivisor& e) {
    if (!orbit_analysis_applies(e)) throw PreconditionError("orbit analysis needs a (-1)-completion");
}

std::set<int> special_indices(const ExtendedDivisor& e, bool with_outer) {
    std::set<int> s = exceptional_components(e);
    auto d = dual_exceptional(e);
    s.insert(d.begin(), d.end());
    if (with_outer)
        for (int k : outer_indices(e)) s.insert(k);
    return s;
}

std::vector<FeatherLabel> labels_for(const ExtendedDivisor& e, int i, const std::vector<CycNumber>& pts) {
    std::vector<FeatherLabel> out;
    for (const auto& f : e.feathers)
        if (f.attach == i && std::find(pts.begin(), pts.end(), f.base) != pts.end()) out.push_back({f.attach, f.j});
    return out;
}

std::vector<CycNumber> bases_at(const ExtendedDivisor& e, int i) {
    std::vector<CycNumber> out;
    for (const auto& f : e.feathers)
        if (f.attach == i) out.push_back(f.base);
    return out;
}

}  // namespace

bool orbit_analysis_applies(const ExtendedDivisor& e) { return e.n() <= 3 || is_minus_one_completion(e); }

std::string verdict_name(VerdictKind k) {
    switch (k) {
        case VerdictKind::NonHomogeneous: return "non-homogeneous";
        case VerdictKind::ExactDecomposition: return "exact-decomposition";
        case VerdictKind::Homogeneous: return "homogeneous";
        case VerdictKind::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

std::vector<FeatherLabel> big_orbit_feathers(const ExtendedDivisor& e) {
    require_minus_one(e);
    auto special = special_indices(e, true);
    std::vector<FeatherLabel> out;
    for (const auto& f : e.feathers)
        if (special.count(f.attach)) out.push_back({f.attach, f.j});
    return out;
}

Criterion nonhomogeneity_criterion(const ExtendedDivisor& e) {
    require_minus_one(e);
    auto special = special_indices(e, true);
    for (int i = 2; i <= e.n(); ++i)
        if (!special.count(i) && e.r(i) > 0) return {true, i};
    return {};
}

OrbitReport orbit_decomposition(const ExtendedDivisor& e) {
    require_minus_one(e);
    const int n = e.n();
    auto special = special_indices(e, true);
    SymmetryReport sym = is_minus_one_completion(e) ? is_symmetric(e) : SymmetryReport{};
    OrbitReport rep;
    rep.symmetric = sym.symmetric;
    for (int i = 2; i <= n; ++i) {
        if (special.count(i) || e.r(i) == 0) continue;
        const int v = n + 2 - i;
        if (sym.symmetric && i > n / 2 + 1) continue;
        PointSet a(bases_at(e, i), Ambient::Star);
        int j = 0;
        for (const auto& orbit : orbit_partition(a)) {
            InvariantSet s{i, ++j, labels_for(e, i, orbit)};
            if (sym.symmetric && v != i) {
                std::vector<CycNumber> image;
                for (const auto& x : orbit) image.push_back(sym.alpha.at(i) * x);
                auto mirrored = labels_for(e, v, image);
                s.members.insert(s.members.end(), mirrored.begin(), mirrored.end());
            }
            std::sort(s.members.begin(), s.members.end());
            rep.invariant_sets.push_back(std::move(s));
        }
    }
    int supported = 0;
    for (int i = 2; i <= n; ++i)
        if (e.r(i) > 0) ++supported;
    if (!rep.invariant_sets.empty()) {
        rep.verdict.kind = supported == 1 ? VerdictKind::ExactDecomposition : VerdictKind::NonHomogeneous;
        rep.verdict.witness = nonhomogeneity_criterion(e).witness;
    } else if (n <= 3 || supported == 1) {
        rep.verdict.kind = VerdictKind::Homogeneous;
    } else {
        rep.verdict.kind = VerdictKind::Inconclusive;
    }
    rep.big_orbit_feathers = big_orbit_feathers(e);
    return rep;
}

}  // namespace giz
