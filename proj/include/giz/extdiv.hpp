#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "giz/cyc.hpp"
#include "giz/zigzag.hpp"

namespace giz {

struct Feather {
    int attach = 2;  // index i of the component it meets
    CycNumber base;  // location on the mother component where it was born
    int self = -1;
    int mother = 2;
    int j = 1;  // label (attach, j), 1-based within attach

    friend bool operator==(const Feather&, const Feather&) = default;
};

struct ExtendedDivisor {
    int conductor = 1;
    Zigzag zigzag;
    std::vector<Feather> feathers;  // sorted by (attach, j)
    // Base points are only a representative of their class up to a common scalar.
    bool bases_up_to_scalar = false;

    int n() const { return zigzag.n(); }
    int r(int i) const;
    std::vector<CycNumber> bases_with_mother(int i) const;
    const Feather& feather(int i, int j) const;

    friend bool operator==(const ExtendedDivisor&, const ExtendedDivisor&) = default;
};

// Sorts feathers by (attach, mother, base) and renumbers j.
void canonicalize(ExtendedDivisor& e);

// Realizability, standardness and feather sanity; throws on failure.
void validate(const ExtendedDivisor& e);

// Blow-up history. Gap words are preorder codes of the inner blow-up tree:
// 'N' near child only, 'F' far child only, 'B' both, '.' leaf; one letter
// per inner component, components numbered in left-to-right order.
struct Presentation {
    int conductor = 1;
    std::vector<int> outer;                      // k_2 = 2 < ... < k_r = n
    std::map<int, CycNumber> births;             // c_k for k = k_3..k_r
    std::vector<std::string> gap_words;          // r - 1 words
    std::map<int, std::vector<CycNumber>> sets;  // M_i, sorted

    int n() const { return outer.empty() ? 2 : outer.back(); }
    int levels() const { return static_cast<int>(outer.size()); }
    std::vector<CycNumber> set(int i) const;
    bool is_outer(int i) const;

    friend bool operator==(const Presentation&, const Presentation&) = default;
};

void canonicalize(Presentation& p);
void validate(const Presentation& p);

ExtendedDivisor build_from_presentation(const Presentation& p);

enum class ComponentType { Plus, Star };

// Types for indices 2..n (entry 0 is C_2).
std::vector<ComponentType> classify_components(const ExtendedDivisor& e);
std::vector<int> outer_indices(const ExtendedDivisor& e);

// The fiber D_(e): C_2..C_n with all feathers; labels i for C_i, 1000*i+j for F_{i,j}.
WeightedTree fiber_tree(const ExtendedDivisor& e);
bool is_realizable(const ExtendedDivisor& e);

std::set<int> exceptional_components(const ExtendedDivisor& e);

ExtendedDivisor reverse_extdiv(const ExtendedDivisor& e);
std::set<int> dual_exceptional(const ExtendedDivisor& e);

bool is_minus_one_completion(const ExtendedDivisor& e);
bool is_minus_one_completion(const Presentation& p);

std::pair<int, int> matching(const ExtendedDivisor& e, std::pair<int, int> label);

// (w', z') = (w^k z^l, w^p z^q).
struct ChartMatrix {
    long k = 1, l = 0, p = 0, q = 1;

    long det() const { return k * q - l * p; }
    ChartMatrix inverse() const;
    friend ChartMatrix operator*(const ChartMatrix& a, const ChartMatrix& b);
    friend bool operator==(const ChartMatrix&, const ChartMatrix&) = default;
};

inline const ChartMatrix kFarStep{1, -1, 0, 1};   // (w/z, z)
inline const ChartMatrix kNearStep{1, 0, -1, 1};  // (w, z/w)

struct GapCharts {
    int left = 2;
    int right = 2;
    // Chart of C_i at C_i and its right neighbour, relative to the chart at
    // the point where C_right was born on C_left.
    std::map<int, ChartMatrix> chart;
};

std::vector<GapCharts> chart_matrices(const Presentation& p);

// Exponents (p_i, q_i) such that the torus element (a, b) scales the
// coordinate along C_i by a^{p_i} b^{q_i}.
std::map<int, std::pair<long, long>> torus_characters(const Presentation& p);

}  // namespace giz
