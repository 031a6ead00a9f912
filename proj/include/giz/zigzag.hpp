#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace giz {

// Weights [w_0, ..., w_n] of the boundary chain C_0..C_n.
struct Zigzag {
    std::vector<int> w;

    Zigzag() = default;
    explicit Zigzag(std::vector<int> weights) : w(std::move(weights)) {}

    int n() const { return static_cast<int>(w.size()) - 1; }
    int operator[](int i) const { return w.at(i); }
    std::string str() const;

    friend bool operator==(const Zigzag&, const Zigzag&) = default;
};

bool is_standard(const Zigzag& z);
bool is_m_standard(const Zigzag& z, int m);
// The m for which z is m-standard, if any.
std::optional<int> standard_m(const Zigzag& z);

enum class Direction { Left, Right };

// One blow-up at an intersection point followed by one contraction, around
// the 0-curve C_pivot: right sends (a, 0, b) to (a-1, 0, b+1), left undoes it.
// Without a pivot the first applicable position is used.
Zigzag elementary_zero_move(const Zigzag& z, Direction dir, std::optional<int> pivot = std::nullopt);

struct ZeroMove {
    int pivot;
    Direction dir;
    Zigzag result;
};

// Moves the leading zero pair so it sits right of w_{t-1}.
std::pair<Zigzag, std::vector<ZeroMove>> zero_pair_shift(const Zigzag& z, int t);

Zigzag reverse_zigzag(const Zigzag& z);
Zigzag semistandard_to_standard(const Zigzag& z);

// Weighted tree of rational curves; anchors are never blown down.
struct WeightedTree {
    std::map<int, int> weight;
    std::map<int, std::set<int>> adj;
    std::set<int> anchors;

    void add_vertex(int v, int w);
    void add_edge(int a, int b);
    void remove_vertex(int v);
    bool empty() const { return weight.empty(); }
    std::size_t size() const { return weight.size(); }
    int degree(int v) const;

    friend bool operator==(const WeightedTree&, const WeightedTree&) = default;
};

// Non-anchor (-1)-vertices of degree at most two, ascending.
std::vector<int> contractible_vertices(const WeightedTree& t);

// Smooth blow-down of one (-1)-vertex.
void blow_down(WeightedTree& t, int v);

std::pair<WeightedTree, std::vector<int>> contract_tree(const WeightedTree& t);
bool is_contractible(const WeightedTree& t);

// Chain with vertex labels 0..k-1.
WeightedTree chain_tree(const std::vector<int>& weights);

}  // namespace giz
