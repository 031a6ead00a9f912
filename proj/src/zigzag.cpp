#include "giz/zigzag.hpp"

#include <algorithm>
#include <sstream>

#include "giz/errors.hpp"

namespace giz {

std::string Zigzag::str() const {
    std::ostringstream os;
    os << "[[";
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
    os << "]]";
    return os.str();
}

bool is_standard(const Zigzag& z) {
    int n = z.n();
    if (n < 1) return false;
    if (z.w[0] != 0 || z.w[1] != 0) return false;
    if (n <= 3 && std::all_of(z.w.begin(), z.w.end(), [](int x) { return x == 0; })) return true;
    for (int i = 2; i <= n; ++i)
        if (z.w[i] > -2) return false;
    return true;
}

bool is_m_standard(const Zigzag& z, int m) {
    if (z.n() < 1 || z.w[0] != 0 || z.w[1] != -m) return false;
    for (int i = 2; i <= z.n(); ++i)
        if (z.w[i] > -2) return false;
    return true;
}

std::optional<int> standard_m(const Zigzag& z) {
    if (z.n() < 1) return std::nullopt;
    if (is_m_standard(z, -z.w[1])) return -z.w[1];
    return std::nullopt;
}

Zigzag elementary_zero_move(const Zigzag& z, Direction dir, std::optional<int> pivot) {
    int n = z.n();
    auto ok = [&](int p) {
        if (p < 1 || p + 1 > n || z.w[p] != 0) return false;
        return dir == Direction::Right ? z.w[p + 1] <= -1 : z.w[p - 1] <= -1;
    };
    int p = -1;
    if (pivot) {
        if (!ok(*pivot))
            throw InputError("zero move not applicable at position " + std::to_string(*pivot) + " of " + z.str());
        p = *pivot;
    } else if (dir == Direction::Right) {
        for (int i = 1; i < n && p < 0; ++i)
            if (ok(i)) p = i;
    } else {
        for (int i = n - 1; i >= 1 && p < 0; --i)
            if (ok(i)) p = i;
    }
    if (p < 0) throw InputError("zero move not applicable to " + z.str());
    Zigzag r = z;
    int s = dir == Direction::Right ? 1 : -1;
    r.w[p - 1] -= s;
    r.w[p + 1] += s;
    return r;
}

std::pair<Zigzag, std::vector<ZeroMove>> zero_pair_shift(const Zigzag& z, int t) {
    if (!is_standard(z)) throw InputError("zero_pair_shift needs a standard zigzag, got " + z.str());
    if (t < 2 || t > z.n() + 1) throw InputError("shift target out of range");
    Zigzag cur = z;
    std::vector<ZeroMove> trace;
    for (int p = 1; p <= t - 2; ++p) {
        while (cur.w[p + 1] != 0) {
            cur = elementary_zero_move(cur, Direction::Right, p);
            trace.push_back({p, Direction::Right, cur});
        }
    }
    return {cur, trace};
}

Zigzag semistandard_to_standard(const Zigzag& z) {
    if (!standard_m(z)) throw InputError("not m-standard: " + z.str());
    Zigzag r = z;
    r.w[1] = 0;
    return r;
}

Zigzag reverse_zigzag(const Zigzag& z) {
    bool std_form = is_standard(z);
    if (!std_form && !standard_m(z)) throw InputError("reversion needs a standard or m-standard zigzag, got " + z.str());
    Zigzag direct = z;
    std::reverse(direct.w.begin() + 2, direct.w.end());

    Zigzag base = std_form ? z : semistandard_to_standard(z);
    Zigzag shifted = zero_pair_shift(base, base.n() + 1).first;
    Zigzag via(std::vector<int>(shifted.w.rbegin(), shifted.w.rend()));
    via.w[1] = z.w[1];
    if (!(via == direct))
        throw InvariantError("reversion by zero-pair shift disagrees with direct reversion on " + z.str());
    return direct;
}

void WeightedTree::add_vertex(int v, int w) {
    weight[v] = w;
    adj[v];
}

void WeightedTree::add_edge(int a, int b) {
    adj[a].insert(b);
    adj[b].insert(a);
}

void WeightedTree::remove_vertex(int v) {
    for (int u : adj[v]) adj[u].erase(v);
    adj.erase(v);
    weight.erase(v);
    anchors.erase(v);
}

int WeightedTree::degree(int v) const {
    auto it = adj.find(v);
    return it == adj.end() ? 0 : static_cast<int>(it->second.size());
}

std::vector<int> contractible_vertices(const WeightedTree& t) {
    std::vector<int> out;
    for (const auto& [v, w] : t.weight)
        if (w == -1 && !t.anchors.count(v) && t.degree(v) <= 2) out.push_back(v);
    return out;
}

void blow_down(WeightedTree& t, int v) {
    std::vector<int> nb(t.adj[v].begin(), t.adj[v].end());
    for (int u : nb) t.weight[u] += 1;
    t.remove_vertex(v);
    if (nb.size() == 2) t.add_edge(nb[0], nb[1]);
}

std::pair<WeightedTree, std::vector<int>> contract_tree(const WeightedTree& t) {
    WeightedTree cur = t;
    std::vector<int> trace;
    for (;;) {
        auto c = contractible_vertices(cur);
        if (c.empty()) break;
        blow_down(cur, c.front());
        trace.push_back(c.front());
    }
    return {cur, trace};
}

bool is_contractible(const WeightedTree& t) { return contract_tree(t).first.empty(); }

WeightedTree chain_tree(const std::vector<int>& weights) {
    WeightedTree t;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        t.add_vertex(static_cast<int>(i), weights[i]);
        if (i) t.add_edge(static_cast<int>(i) - 1, static_cast<int>(i));
    }
    return t;
}

}  // namespace giz
