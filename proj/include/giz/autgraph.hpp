#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "giz/cyc.hpp"
#include "giz/extdiv.hpp"

namespace giz {

struct FeatherProfile {
    std::vector<int> support;  // indices with r_i > 0
    std::optional<int> s;
    std::optional<int> t;
    std::vector<int> outer;  // k_2..k_r
    int r = 1;               // outer.size() + 1
};

// Present iff no outer component carries a feather and at most two indices do.
std::optional<FeatherProfile> check_condition_star(const ExtendedDivisor& e);

int fibration_classes(const ExtendedDivisor& e);

enum class ArrowClass { SingleArrowPair, Loop, UncountableFamily };

std::string arrow_class_name(ArrowClass a);

struct FvShape {
    int vertex_count = 2;
    ArrowClass arrows = ArrowClass::SingleArrowPair;
};

FvShape fv_shape(const ExtendedDivisor& e);

struct Hugeness {
    bool not_countably_generated = false;
    bool contains_uncountable_free = false;
};

Hugeness hugeness_verdict(const ExtendedDivisor& e);

// Presentation in which some outer-level data may be unknown.
struct FlaggedPresentation {
    Presentation p;  // unknown entries are absent from p.births / p.sets
    std::set<int> unknown_sets;
    std::set<int> unknown_births;

    bool exact() const { return unknown_sets.empty() && unknown_births.empty(); }
    friend bool operator==(const FlaggedPresentation&, const FlaggedPresentation&) = default;
};

// Elementary shift (u, v) -> (u + a v^{t-2}, v) acting at outer level t.
FlaggedPresentation jon_shift_action(const FlaggedPresentation& fp, const CycNumber& a, int t);
FlaggedPresentation jon_shift_action(const Presentation& p, const CycNumber& a, int t);

// Torus element (u, v) -> (a u, b v).
Presentation torus_action(const Presentation& p, const CycNumber& a, const CycNumber& b);

struct Move {
    enum class Kind { Reversion, Fibered };
    Kind kind = Kind::Fibered;
    CycNumber center;  // reversions only
    bool inverse = false;
    std::string tag;  // fibered only

    static Move reversion(const CycNumber& c, bool inv = false) { return {Kind::Reversion, c, inv, {}}; }
    static Move fibered(std::string t) { return {Kind::Fibered, {}, false, std::move(t)}; }
    std::string str() const;
    friend bool operator==(const Move&, const Move&) = default;
};

using MoveWord = std::vector<Move>;

MoveWord reduce_word(const MoveWord& w);
bool alternates_kinds(const MoveWord& w);

}  // namespace giz
