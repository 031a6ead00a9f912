#pragma once

#include <map>
#include <optional>
#include <vector>

#include "giz/cyc.hpp"
#include "giz/extdiv.hpp"

namespace giz {

enum class Ambient { Star, Plus };

// Finite configuration on C* (Star) or on the affine line (Plus).
struct PointSet {
    std::vector<CycNumber> points;  // sorted, distinct
    Ambient ambient = Ambient::Star;

    PointSet() = default;
    PointSet(std::vector<CycNumber> pts, Ambient amb);

    std::size_t size() const { return points.size(); }
    bool contains(const CycNumber& x) const;
    PointSet scaled(const CycNumber& alpha) const;

    friend bool operator==(const PointSet&, const PointSet&) = default;
};

// G(A); full means G(empty set) = C*.
struct SymmetryGroup {
    bool full = false;
    int order = 1;
    CycNumber generator;
};

SymmetryGroup symmetry_group(const PointSet& a);
std::vector<std::vector<CycNumber>> orbit_partition(const PointSet& a);

// B = alpha*A (Star) or B = alpha*A + beta (Plus).
struct ConfigWitness {
    CycNumber alpha;
    CycNumber beta;
};

std::optional<ConfigWitness> config_equal(const PointSet& a, const PointSet& b);

struct ConfigEntry {
    int index = 2;
    ComponentType type = ComponentType::Plus;
    PointSet rep;
};

struct ConfigInvariant {
    std::vector<ConfigEntry> entries;  // indices 2..n
    const ConfigEntry& at(int i) const { return entries.at(i - 2); }
};

ConfigInvariant config_invariant(const ExtendedDivisor& e);
bool config_invariant_equal(const ConfigInvariant& a, const ConfigInvariant& b);

struct SymmetryReport {
    bool symmetric = false;
    // Only Q_i = Q_{n+2-i} for all i, ignoring weights and counts.
    bool literal = false;
    // alpha_i with A_{n+2-i} = alpha_i * A_i, for Star indices with feathers.
    std::map<int, CycNumber> alpha;
};

SymmetryReport is_symmetric(const ExtendedDivisor& e);

}  // namespace giz
