#include "giz/extdiv.hpp"

#include <algorithm>
#include <functional>

#include "giz/errors.hpp"

namespace giz {

namespace {

constexpr int kFeatherLabel = 1000;

struct GapNode {
    char letter = '.';
    int left = -1;
    int right = -1;
    int index = 0;
};

std::vector<GapNode> parse_gap_word(const std::string& word, int first_index) {
    std::vector<GapNode> nodes;
    std::size_t pos = 0;
    std::function<int()> node = [&]() -> int {
        if (pos >= word.size()) throw InputError("gap word \"" + word + "\" ends early");
        char c = word[pos++];
        if (c != 'N' && c != 'F' && c != 'B' && c != '.')
            throw InputError("gap word \"" + word + "\" has invalid letter '" + std::string(1, c) + "'");
        int id = static_cast<int>(nodes.size());
        nodes.push_back({c, -1, -1, 0});
        if (c == 'N' || c == 'B') {
            int l = node();
            nodes[id].left = l;
        }
        if (c == 'F' || c == 'B') {
            int r = node();
            nodes[id].right = r;
        }
        return id;
    };
    if (!word.empty()) {
        node();
        if (pos != word.size()) throw InputError("gap word \"" + word + "\" has trailing letters");
    }
    int next = first_index;
    std::function<void(int)> inorder = [&](int id) {
        if (id < 0) return;
        inorder(nodes[id].left);
        nodes[id].index = next++;
        inorder(nodes[id].right);
    };
    if (!nodes.empty()) inorder(0);
    return nodes;
}

struct GapSim {
    std::vector<int> curves;           // left to right, L first, R last
    std::vector<ChartMatrix> points;   // chart at curves[m] and curves[m+1]
    std::map<int, int> weight;         // inner components and R
    int left_hits = 0;
};

GapSim simulate_gap(const std::string& word, int left, int right) {
    auto nodes = parse_gap_word(word, left + 1);
    if (static_cast<int>(nodes.size()) != right - left - 1)
        throw InputError("gap word \"" + word + "\" must have length " + std::to_string(right - left - 1));
    GapSim g;
    g.curves = {left, right};
    g.points = {ChartMatrix{}};
    g.weight[right] = -1;
    std::function<void(int, int, int)> visit = [&](int id, int x, int y) {
        if (id < 0) return;
        int e = nodes[id].index;
        auto it = std::find(g.curves.begin(), g.curves.end(), x);
        auto m = static_cast<std::size_t>(it - g.curves.begin());
        ChartMatrix a = g.points[m];
        g.curves.insert(g.curves.begin() + m + 1, e);
        g.points[m] = kNearStep * a;
        g.points.insert(g.points.begin() + m + 1, kFarStep * a);
        g.weight[e] = -1;
        if (x == left)
            ++g.left_hits;
        else
            --g.weight[x];
        --g.weight[y];
        visit(nodes[id].left, x, e);
        visit(nodes[id].right, e, y);
    };
    if (!nodes.empty()) visit(0, left, right);
    return g;
}

bool contains(const std::vector<CycNumber>& v, const CycNumber& x) {
    return std::find(v.begin(), v.end(), x) != v.end();
}

using Char = std::pair<long, long>;

Char lin(long a, const Char& u, long b, const Char& v) {
    return {a * u.first + b * v.first, a * u.second + b * v.second};
}

}  // namespace

int ExtendedDivisor::r(int i) const {
    return static_cast<int>(std::count_if(feathers.begin(), feathers.end(), [&](const Feather& f) { return f.attach == i; }));
}

std::vector<CycNumber> ExtendedDivisor::bases_with_mother(int i) const {
    std::vector<CycNumber> out;
    for (const auto& f : feathers)
        if (f.mother == i) out.push_back(f.base);
    std::sort(out.begin(), out.end());
    return out;
}

const Feather& ExtendedDivisor::feather(int i, int j) const {
    for (const auto& f : feathers)
        if (f.attach == i && f.j == j) return f;
    throw InputError("no feather F_{" + std::to_string(i) + "," + std::to_string(j) + "}");
}

void canonicalize(ExtendedDivisor& e) {
    std::sort(e.feathers.begin(), e.feathers.end(), [](const Feather& a, const Feather& b) {
        if (a.attach != b.attach) return a.attach < b.attach;
        if (a.mother != b.mother) return a.mother < b.mother;
        return a.base < b.base;
    });
    int prev = -1, j = 0;
    for (auto& f : e.feathers) {
        j = f.attach == prev ? j + 1 : 1;
        prev = f.attach;
        f.j = j;
    }
}

void validate(const ExtendedDivisor& e) {
    if (!is_standard(e.zigzag)) throw InvariantError("zigzag " + e.zigzag.str() + " is not standard");
    int n = e.n();
    for (const auto& f : e.feathers) {
        if (f.attach < 2 || f.attach > n) throw InvariantError("feather attached outside C_2..C_n");
        if (f.self > -1) throw InvariantError("feather self-intersection must be at most -1");
        if (f.mother > f.attach || f.mother < 2) throw InvariantError("feather mother index out of range");
    }
    for (std::size_t a = 0; a < e.feathers.size(); ++a)
        for (std::size_t b = a + 1; b < e.feathers.size(); ++b)
            if (e.feathers[a].mother == e.feathers[b].mother && e.feathers[a].base == e.feathers[b].base)
                throw InvariantError("duplicate base point " + e.feathers[a].base.str() + " on C_" +
                                     std::to_string(e.feathers[a].mother));
    if (!is_realizable(e))
        throw InvariantError("fiber C_2..C_n with feathers does not contract to a 0-curve");
}

std::vector<CycNumber> Presentation::set(int i) const {
    auto it = sets.find(i);
    return it == sets.end() ? std::vector<CycNumber>{} : it->second;
}

bool Presentation::is_outer(int i) const { return std::find(outer.begin(), outer.end(), i) != outer.end(); }

void canonicalize(Presentation& p) {
    for (auto it = p.sets.begin(); it != p.sets.end();) {
        std::sort(it->second.begin(), it->second.end());
        if (it->second.empty())
            it = p.sets.erase(it);
        else
            ++it;
    }
}

void validate(const Presentation& p) {
    if (p.outer.empty() || p.outer.front() != 2) throw InputError("outer indices must start with 2");
    for (std::size_t s = 1; s < p.outer.size(); ++s)
        if (p.outer[s] <= p.outer[s - 1]) throw InputError("outer indices must increase");
    if (p.gap_words.size() + 1 != p.outer.size())
        throw InputError("expected " + std::to_string(p.outer.size() - 1) + " gap words");
    for (std::size_t s = 0; s + 1 < p.outer.size(); ++s) {
        int len = p.outer[s + 1] - p.outer[s] - 1;
        if (static_cast<int>(p.gap_words[s].size()) != len)
            throw InputError("gap word \"" + p.gap_words[s] + "\" must have length " + std::to_string(len));
        parse_gap_word(p.gap_words[s], p.outer[s] + 1);
    }
    for (std::size_t s = 1; s < p.outer.size(); ++s)
        if (!p.births.count(p.outer[s])) throw InputError("missing birth point c_" + std::to_string(p.outer[s]));
    for (const auto& [k, c] : p.births)
        if (!p.is_outer(k) || k == 2) throw InputError("birth point given for non-outer index " + std::to_string(k));
    for (const auto& [i, m] : p.sets) {
        if (i < 2 || i > p.n()) throw InputError("base-point set M_" + std::to_string(i) + " out of range");
        for (std::size_t a = 0; a < m.size(); ++a) {
            if (!p.is_outer(i) && m[a].is_zero()) throw InputError("inner base point must be nonzero");
            for (std::size_t b = a + 1; b < m.size(); ++b)
                if (m[a] == m[b]) throw InputError("duplicate base point " + m[a].str() + " in M_" + std::to_string(i));
        }
    }
}

ExtendedDivisor build_from_presentation(const Presentation& p) {
    validate(p);
    const int n = p.n();
    std::vector<int> w(n + 1, 0);
    ExtendedDivisor e;
    e.conductor = p.conductor;
    struct Pending {
        CycNumber base;
        int mother;
        int self;
    };
    std::optional<Pending> pending;  // feather sitting at coordinate 0 of the current outer component
    const int r = p.levels();
    for (int s = 0; s < r; ++s) {
        const int left = p.outer[s];
        auto m = p.set(left);
        if (pending && contains(m, CycNumber(0, p.conductor)))
            throw InputError("base point 0 on C_" + std::to_string(left) + " is occupied by a feather born on C_" +
                             std::to_string(pending->mother));
        w[left] -= static_cast<int>(m.size());
        if (s == r - 1) {
            for (const auto& a : m) e.feathers.push_back({left, a, -1, left, 0});
            if (pending) e.feathers.push_back({left, pending->base, pending->self, pending->mother, 0});
            break;
        }
        const int right = p.outer[s + 1];
        const CycNumber& c = p.births.at(right);
        w[left] -= 1;
        std::optional<Pending> next;
        if (pending) {
            if (c.is_zero())
                next = Pending{pending->base, pending->mother, pending->self - 1};
            else
                e.feathers.push_back({left, pending->base, pending->self, pending->mother, 0});
        }
        for (const auto& a : m) {
            if (a == c)
                next = Pending{a, left, -2};
            else
                e.feathers.push_back({left, a, -1, left, 0});
        }
        pending = next;
        GapSim g = simulate_gap(p.gap_words[s], left, right);
        w[left] -= g.left_hits;
        for (const auto& [i, wi] : g.weight) w[i] = wi;
        for (int i = left + 1; i < right; ++i) {
            for (const auto& a : p.set(i)) {
                e.feathers.push_back({i, a, -1, i, 0});
                --w[i];
            }
        }
    }
    e.zigzag = Zigzag(w);
    canonicalize(e);
    if (!is_standard(e.zigzag))
        throw InvariantError("presentation yields non-standard zigzag " + e.zigzag.str());
    if (!is_realizable(e)) throw InvariantError("presentation yields a non-realizable divisor");
    return e;
}

WeightedTree fiber_tree(const ExtendedDivisor& e) {
    WeightedTree t;
    for (int i = 2; i <= e.n(); ++i) {
        t.add_vertex(i, e.zigzag[i]);
        if (i > 2) t.add_edge(i - 1, i);
    }
    for (const auto& f : e.feathers) {
        int v = kFeatherLabel * f.attach + f.j;
        t.add_vertex(v, f.self);
        t.add_edge(v, f.attach);
    }
    return t;
}

bool is_realizable(const ExtendedDivisor& e) {
    auto rest = contract_tree(fiber_tree(e)).first;
    return rest.size() == 1 && rest.weight.begin()->second == 0;
}

namespace {

WeightedTree tail_tree(const ExtendedDivisor& e, int from) {
    WeightedTree t;
    for (int i = from; i <= e.n(); ++i) {
        t.add_vertex(i, e.zigzag[i]);
        if (i > from) t.add_edge(i - 1, i);
    }
    for (const auto& f : e.feathers) {
        if (f.attach < from) continue;
        int v = kFeatherLabel * f.attach + f.j;
        t.add_vertex(v, f.self);
        t.add_edge(v, f.attach);
    }
    return t;
}

}  // namespace

std::vector<ComponentType> classify_components(const ExtendedDivisor& e) {
    const int n = e.n();
    std::vector<ComponentType> out;
    for (int i = 2; i <= n; ++i) {
        if (i == 2 || i == n) {
            out.push_back(ComponentType::Plus);
            continue;
        }
        WeightedTree t = tail_tree(e, i + 1);
        bool star = !is_contractible(t);
        for (const auto& f : e.feathers) {
            if (!star) break;
            if (f.attach <= i || f.mother >= i) continue;
            WeightedTree u = t;
            u.remove_vertex(kFeatherLabel * f.attach + f.j);
            star = !is_contractible(u);
        }
        out.push_back(star ? ComponentType::Star : ComponentType::Plus);
    }
    return out;
}

std::vector<int> outer_indices(const ExtendedDivisor& e) {
    auto types = classify_components(e);
    std::vector<int> out;
    for (std::size_t k = 0; k < types.size(); ++k)
        if (types[k] == ComponentType::Plus) out.push_back(static_cast<int>(k) + 2);
    return out;
}

namespace {

// Largest chain of inner gap components that survives as [-2,...,-2,-1]
// once every gap feather is blown down.
std::set<int> gap_exceptional(const ExtendedDivisor& e, int left, int right) {
    WeightedTree t;
    for (int i = left; i <= right; ++i) {
        t.add_vertex(i, e.zigzag[i]);
        if (i > left) t.add_edge(i - 1, i);
    }
    t.anchors = {left, right};
    for (const auto& f : e.feathers) {
        if (f.attach <= left || f.attach >= right) continue;
        int v = kFeatherLabel * f.attach + f.j;
        t.add_vertex(v, f.self);
        t.add_edge(v, f.attach);
    }
    std::set<std::vector<std::pair<int, int>>> seen;
    std::size_t best = 0;
    std::set<std::set<int>> best_sets;
    std::function<void(const WeightedTree&)> dfs = [&](const WeightedTree& cur) {
        std::vector<std::pair<int, int>> key(cur.weight.begin(), cur.weight.end());
        if (!seen.insert(key).second) return;
        bool feathers_left = std::any_of(cur.weight.begin(), cur.weight.end(),
                                         [](const auto& kv) { return kv.first >= kFeatherLabel; });
        if (!feathers_left) {
            std::vector<int> chain;
            for (const auto& [v, w] : cur.weight)
                if (v != left && v != right) chain.push_back(v);
            bool ok = !chain.empty();
            for (std::size_t k = 0; ok && k < chain.size(); ++k)
                ok = cur.weight.at(chain[k]) == (k + 1 == chain.size() ? -1 : -2);
            if (ok) {
                if (chain.size() > best) {
                    best = chain.size();
                    best_sets.clear();
                }
                if (chain.size() == best) best_sets.insert(std::set<int>(chain.begin(), chain.end()));
            }
        }
        for (int v : contractible_vertices(cur)) {
            WeightedTree next = cur;
            blow_down(next, v);
            dfs(next);
        }
    };
    dfs(t);
    if (best_sets.size() > 1)
        throw InvariantError("exceptional chain between C_" + std::to_string(left) + " and C_" +
                             std::to_string(right) + " is not unique");
    return best_sets.empty() ? std::set<int>{} : *best_sets.begin();
}

}  // namespace

std::set<int> exceptional_components(const ExtendedDivisor& e) {
    auto outer = outer_indices(e);
    std::set<int> out;
    for (std::size_t s = 0; s + 1 < outer.size(); ++s) {
        if (outer[s + 1] - outer[s] < 2) continue;
        auto g = gap_exceptional(e, outer[s], outer[s + 1]);
        out.insert(g.begin(), g.end());
    }
    return out;
}

bool is_minus_one_completion(const ExtendedDivisor& e) {
    return std::all_of(e.feathers.begin(), e.feathers.end(),
                       [](const Feather& f) { return f.self == -1 && f.mother == f.attach; });
}

bool is_minus_one_completion(const Presentation& p) {
    for (std::size_t s = 1; s < p.outer.size(); ++s) {
        auto it = p.births.find(p.outer[s]);
        if (it != p.births.end() && contains(p.set(p.outer[s - 1]), it->second)) return false;
    }
    return true;
}

ExtendedDivisor reverse_extdiv(const ExtendedDivisor& e) {
    if (!is_minus_one_completion(e)) throw PreconditionError("reversion needs a (-1)-completion");
    const int n = e.n();
    ExtendedDivisor r;
    r.conductor = e.conductor;
    r.zigzag = reverse_zigzag(e.zigzag);
    r.bases_up_to_scalar = true;
    for (const auto& f : e.feathers) r.feathers.push_back({n + 2 - f.attach, f.base, -1, n + 2 - f.attach, f.j});
    canonicalize(r);
    return r;
}

std::set<int> dual_exceptional(const ExtendedDivisor& e) {
    const int n = e.n();
    std::set<int> out;
    if (static_cast<int>(outer_indices(e).size()) == n - 1) return out;
    for (int t : exceptional_components(reverse_extdiv(e))) out.insert(n + 2 - t);
    return out;
}

std::pair<int, int> matching(const ExtendedDivisor& e, std::pair<int, int> label) {
    if (!is_minus_one_completion(e)) throw PreconditionError("matching needs a (-1)-completion");
    e.feather(label.first, label.second);
    return {e.n() + 2 - label.first, label.second};
}

ChartMatrix ChartMatrix::inverse() const {
    if (det() != 1) throw InvariantError("chart matrix is not unimodular");
    return {q, -l, -p, k};
}

ChartMatrix operator*(const ChartMatrix& a, const ChartMatrix& b) {
    return {a.k * b.k + a.l * b.p, a.k * b.l + a.l * b.q, a.p * b.k + a.q * b.p, a.p * b.l + a.q * b.q};
}

std::vector<GapCharts> chart_matrices(const Presentation& p) {
    validate(p);
    std::vector<GapCharts> out;
    for (std::size_t s = 0; s + 1 < p.outer.size(); ++s) {
        const int left = p.outer[s], right = p.outer[s + 1];
        GapSim g = simulate_gap(p.gap_words[s], left, right);
        GapCharts gc;
        gc.left = left;
        gc.right = right;
        for (std::size_t m = 0; m + 1 < g.curves.size(); ++m) gc.chart[g.curves[m]] = g.points[m];
        ChartMatrix step{0, -1, 1, -g.weight.at(right)};
        gc.chart[right] = step * g.points.back();
        for (auto i = gc.chart.begin(); i != gc.chart.end(); ++i) {
            if (i->second.det() != 1) throw InvariantError("chart of C_" + std::to_string(i->first) + " has determinant != 1");
            for (auto j = std::next(i); j != gc.chart.end(); ++j) {
                ChartMatrix t = j->second * i->second.inverse();
                bool adjacent = j->first == i->first + 1;
                if (t.det() != 1 || t.q <= 0 || t.l >= 0 || ((t.k == 0 && t.l == -1) != adjacent))
                    throw InvariantError("transition C_" + std::to_string(i->first) + " -> C_" +
                                         std::to_string(j->first) + " violates the chart relations");
            }
        }
        out.push_back(std::move(gc));
    }
    return out;
}

std::map<int, std::pair<long, long>> torus_characters(const Presentation& p) {
    auto gaps = chart_matrices(p);
    std::map<int, Char> out;
    Char x{1, 0}, y{0, 1};
    for (std::size_t s = 0; s < p.outer.size(); ++s) {
        const int left = p.outer[s];
        out[left] = x;
        if (s + 1 == p.outer.size()) break;
        const GapCharts& gc = gaps[s];
        long rl = static_cast<long>(p.set(left).size());
        Char w0 = x, z0 = lin(1, y, -(rl + 1), x);
        const ChartMatrix& al = gc.chart.at(left);
        Char cx = lin(al.k, w0, al.l, z0), cy = lin(al.p, w0, al.q, z0);
        for (int i = left + 1; i <= gc.right; ++i) {
            ChartMatrix t = gc.chart.at(i) * gc.chart.at(i - 1).inverse();
            Char cw = lin(t.k, cx, t.l, cy), cz = lin(t.p, cx, t.q, cy);
            if (i == gc.right) {
                x = cw;
                y = cz;
                break;
            }
            out[i] = cw;
            cx = cw;
            cy = lin(1, cz, -static_cast<long>(p.set(i).size()), cw);
        }
    }
    return out;
}

}  // namespace giz
