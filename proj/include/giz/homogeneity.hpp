#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "giz/extdiv.hpp"

namespace giz {

using FeatherLabel = std::pair<int, int>;

// O_{i,j}: the points F_{i,l} cap F^v_{i,l}, listed by their labels (i, l).
struct InvariantSet {
    int index = 0;
    int orbit = 1;
    std::vector<FeatherLabel> members;
};

enum class VerdictKind { NonHomogeneous, ExactDecomposition, Homogeneous, Inconclusive };

struct Verdict {
    VerdictKind kind = VerdictKind::Inconclusive;
    std::optional<int> witness;

    // ExactDecomposition is the refined non-homogeneous case.
    bool non_homogeneous() const {
        return kind == VerdictKind::NonHomogeneous || kind == VerdictKind::ExactDecomposition;
    }
};

std::string verdict_name(VerdictKind k);

// (-1)-completions, and every surface with n <= 3 (no inner components there).
bool orbit_analysis_applies(const ExtendedDivisor& e);

struct OrbitReport {
    bool symmetric = false;
    std::vector<InvariantSet> invariant_sets;
    std::string o0 = "complement of the invariant sets";
    Verdict verdict;
    std::vector<FeatherLabel> big_orbit_feathers;
};

OrbitReport orbit_decomposition(const ExtendedDivisor& e);
std::vector<FeatherLabel> big_orbit_feathers(const ExtendedDivisor& e);

struct Criterion {
    bool holds = false;
    std::optional<int> witness;
};

Criterion nonhomogeneity_criterion(const ExtendedDivisor& e);

}  // namespace giz
