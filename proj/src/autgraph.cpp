#include "giz/autgraph.hpp"

#include <algorithm>

#include "giz/errors.hpp"
#include "giz/invariants.hpp"

namespace giz {

std::optional<FeatherProfile> check_condition_star(const ExtendedDivisor& e) {
    FeatherProfile prof;
    prof.outer = outer_indices(e);
    prof.r = static_cast<int>(prof.outer.size()) + 1;
    for (int i = 2; i <= e.n(); ++i) {
        if (e.r(i) == 0) continue;
        if (std::find(prof.outer.begin(), prof.outer.end(), i) != prof.outer.end()) return std::nullopt;
        prof.support.push_back(i);
    }
    if (prof.support.size() > 2) return std::nullopt;
    if (!prof.support.empty()) {
        prof.s = prof.support.front();
        prof.t = prof.support.back();
    }
    return prof;
}

namespace {

FeatherProfile require_star(const ExtendedDivisor& e) {
    auto prof = check_condition_star(e);
    if (!prof) throw PreconditionError("condition (*) fails");
    return *prof;
}

}  // namespace

int fibration_classes(const ExtendedDivisor& e) {
    FeatherProfile prof = require_star(e);
    const int n = e.n();
    for (int i = 2; i <= n; ++i)
        if (e.zigzag[i] != e.zigzag[n + 2 - i]) return 2;
    if (!prof.s) return 1;
    int s = *prof.s, t = *prof.t;
    if (t != n + 2 - s) return 2;
    if (e.r(s) != e.r(t)) return 2;
    PointSet qs(e.bases_with_mother(s), Ambient::Star);
    PointSet qt(e.bases_with_mother(t), Ambient::Star);
    return config_equal(qs, qt) ? 1 : 2;
}

std::string arrow_class_name(ArrowClass a) {
    switch (a) {
        case ArrowClass::SingleArrowPair: return "single-arrow-pair";
        case ArrowClass::Loop: return "loop";
        case ArrowClass::UncountableFamily: return "uncountable-family";
    }
    return "single-arrow-pair";
}

FvShape fv_shape(const ExtendedDivisor& e) {
    FeatherProfile prof = require_star(e);
    FvShape shape;
    shape.vertex_count = fibration_classes(e);
    bool middle_outer = std::any_of(prof.outer.begin(), prof.outer.end(),
                                    [&](int k) { return k >= 3 && k <= e.n() - 1; });
    if (middle_outer)
        shape.arrows = ArrowClass::UncountableFamily;
    else
        shape.arrows = shape.vertex_count == 2 ? ArrowClass::SingleArrowPair : ArrowClass::Loop;
    return shape;
}

Hugeness hugeness_verdict(const ExtendedDivisor& e) {
    FeatherProfile prof = require_star(e);
    FvShape shape = fv_shape(e);
    Hugeness h;
    h.not_countably_generated = shape.arrows == ArrowClass::UncountableFamily;
    h.contains_uncountable_free = h.not_countably_generated && prof.r == 4 && shape.vertex_count == 2;
    return h;
}

FlaggedPresentation jon_shift_action(const FlaggedPresentation& fp, const CycNumber& a, int t) {
    const Presentation& p = fp.p;
    if (t < 2 || t - 2 >= p.levels())
        throw InputError("shift level must lie in 2.." + std::to_string(p.levels() + 1));
    FlaggedPresentation out = fp;
    if (a.is_zero()) return out;
    const int kt = p.outer[t - 2];
    if (!fp.unknown_sets.count(kt)) {
        std::vector<CycNumber> moved;
        for (const auto& x : p.set(kt)) moved.push_back(a + x);
        if (moved.empty())
            out.p.sets.erase(kt);
        else
            out.p.sets[kt] = moved;
    }
    if (t - 1 < p.levels()) {
        const int next = p.outer[t - 1];
        if (!fp.unknown_births.count(next)) out.p.births[next] = a + p.births.at(next);
        for (int u = t - 1; u < p.levels(); ++u) {
            out.p.sets.erase(p.outer[u]);
            out.unknown_sets.insert(p.outer[u]);
            if (u > t - 1) {
                out.p.births.erase(p.outer[u]);
                out.unknown_births.insert(p.outer[u]);
            }
        }
    }
    canonicalize(out.p);
    return out;
}

FlaggedPresentation jon_shift_action(const Presentation& p, const CycNumber& a, int t) {
    return jon_shift_action(FlaggedPresentation{p, {}, {}}, a, t);
}

Presentation torus_action(const Presentation& p, const CycNumber& a, const CycNumber& b) {
    if (a.is_zero() || b.is_zero()) throw InputError("torus element needs nonzero a and b");
    auto chars = torus_characters(p);
    auto mono = [&](int i) { return a.pow(chars.at(i).first) * b.pow(chars.at(i).second); };
    Presentation out = p;
    for (auto& [i, m] : out.sets) {
        CycNumber f = mono(i);
        for (auto& x : m) x = f * x;
    }
    for (std::size_t s = 1; s < p.outer.size(); ++s) {
        int k = p.outer[s];
        out.births[k] = mono(p.outer[s - 1]) * p.births.at(k);
    }
    canonicalize(out);
    return out;
}

std::string Move::str() const {
    if (kind == Kind::Fibered) return "F(" + tag + ")";
    return std::string(inverse ? "R^-1(" : "R(") + center.str() + ")";
}

MoveWord reduce_word(const MoveWord& w) {
    MoveWord out;
    for (const auto& m : w) {
        if (!out.empty()) {
            Move& top = out.back();
            if (m.kind == Move::Kind::Reversion && top.kind == Move::Kind::Reversion && top.center == m.center &&
                top.inverse != m.inverse) {
                out.pop_back();
                continue;
            }
            if (m.kind == Move::Kind::Fibered && top.kind == Move::Kind::Fibered) {
                top.tag = m.tag + "∘" + top.tag;
                continue;
            }
        }
        out.push_back(m);
    }
    return out;
}

bool alternates_kinds(const MoveWord& w) {
    for (std::size_t k = 1; k < w.size(); ++k)
        if (w[k].kind == w[k - 1].kind) return false;
    return true;
}

}  // namespace giz
