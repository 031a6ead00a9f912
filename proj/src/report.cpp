#include "giz/report.hpp"

#include <sstream>

#include "giz/autgraph.hpp"
#include "giz/errors.hpp"
#include "giz/homogeneity.hpp"
#include "giz/invariants.hpp"

namespace giz {

using nlohmann::json;

namespace {

json int_array(const std::vector<int>& v) { return json(v); }

json int_array(const std::set<int>& v) { return json(std::vector<int>(v.begin(), v.end())); }

json label_array(const std::vector<FeatherLabel>& v) {
    json a = json::array();
    for (const auto& [i, j] : v) a.push_back(label_str(i, j));
    return a;
}

const char* type_str(ComponentType t) { return t == ComponentType::Star ? "*" : "+"; }

std::string join(const std::vector<int>& v) {
    std::string s = "{";
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + std::to_string(v[k]);
    return s + "}";
}

std::string join(const std::set<int>& v) { return join(std::vector<int>(v.begin(), v.end())); }

}  // namespace

std::string label_str(int i, int j) { return "F_{" + std::to_string(i) + "," + std::to_string(j) + "}"; }

json divisor_json(const ExtendedDivisor& e) {
    json j;
    j["weights"] = e.zigzag.w;
    json fs = json::array();
    for (const auto& f : e.feathers)
        fs.push_back({{"label", label_str(f.attach, f.j)}, {"at", f.attach}, {"base", f.base.str()},
                      {"self", f.self}, {"mother", f.mother}});
    j["feathers"] = fs;
    j["conductor"] = e.conductor;
    j["up_to_scalar"] = e.bases_up_to_scalar;
    return j;
}

json orbits_json(const ExtendedDivisor& e) {
    OrbitReport rep = orbit_decomposition(e);
    json j;
    json sets = json::array();
    for (const auto& s : rep.invariant_sets)
        sets.push_back({{"index", s.index}, {"orbit", s.orbit}, {"members", label_array(s.members)}});
    j["invariant_sets"] = sets;
    j["o0"] = rep.o0;
    j["verdict"] = verdict_name(rep.verdict.kind);
    j["witness"] = rep.verdict.witness ? json(*rep.verdict.witness) : json(nullptr);
    j["big_orbit_feathers"] = label_array(rep.big_orbit_feathers);
    Criterion c = nonhomogeneity_criterion(e);
    j["criterion"] = {{"holds", c.holds}, {"witness", c.witness ? json(*c.witness) : json(nullptr)}};
    return j;
}

json autgraph_json(const ExtendedDivisor& e) {
    json j;
    auto prof = check_condition_star(e);
    if (!prof) {
        j["star"] = nullptr;
        j["fibration_classes"] = nullptr;
        j["fv"] = nullptr;
        j["hugeness"] = nullptr;
        return j;
    }
    j["star"] = {{"support", prof->support},
                 {"s", prof->s ? json(*prof->s) : json(nullptr)},
                 {"t", prof->t ? json(*prof->t) : json(nullptr)},
                 {"outer", prof->outer},
                 {"r", prof->r}};
    j["fibration_classes"] = fibration_classes(e);
    FvShape shape = fv_shape(e);
    j["fv"] = {{"vertices", shape.vertex_count}, {"arrows", arrow_class_name(shape.arrows)}};
    Hugeness h = hugeness_verdict(e);
    j["hugeness"] = {{"not_countably_generated", h.not_countably_generated},
                     {"contains_uncountable_free", h.contains_uncountable_free}};
    return j;
}

json analyze_json(const ExtendedDivisor& e) {
    json j;
    j["weights"] = e.zigzag.w;
    auto types = classify_components(e);
    json ts = json::array();
    json rs = json::array();
    for (int i = 2; i <= e.n(); ++i) {
        ts.push_back(type_str(types[i - 2]));
        rs.push_back(e.r(i));
    }
    j["types"] = ts;
    j["r"] = rs;
    j["outer"] = int_array(outer_indices(e));
    j["exceptional"] = int_array(exceptional_components(e));
    j["minus_one"] = is_minus_one_completion(e);
    ConfigInvariant q = config_invariant(e);
    json cfg = json::array();
    for (const auto& c : q.entries) {
        json pts = json::array();
        for (const auto& p : c.rep.points) pts.push_back(p.str());
        cfg.push_back({{"index", c.index}, {"type", type_str(c.type)}, {"points", pts}});
    }
    j["config"] = cfg;
    if (orbit_analysis_applies(e)) {
        j["dual_exceptional"] = int_array(dual_exceptional(e));
        j["symmetric"] = nullptr;
        j["symmetric_literal"] = nullptr;
        if (is_minus_one_completion(e)) {
            SymmetryReport s = is_symmetric(e);
            j["symmetric"] = s.symmetric;
            j["symmetric_literal"] = s.literal;
        }
        json o = orbits_json(e);
        for (auto it = o.begin(); it != o.end(); ++it) j[it.key()] = it.value();
    } else {
        for (const char* k : {"dual_exceptional", "symmetric", "symmetric_literal", "invariant_sets", "o0", "verdict",
                              "witness", "big_orbit_feathers", "criterion"})
            j[k] = nullptr;
    }
    json a = autgraph_json(e);
    for (auto it = a.begin(); it != a.end(); ++it) j[it.key()] = it.value();
    return j;
}

std::string analyze_text(const ExtendedDivisor& e) {
    std::ostringstream os;
    os << "zigzag        " << e.zigzag.str() << "\n";
    auto types = classify_components(e);
    os << "types         ";
    for (int i = 2; i <= e.n(); ++i) os << "C_" << i << type_str(types[i - 2]) << (i < e.n() ? " " : "\n");
    os << "outer         " << join(outer_indices(e)) << "\n";
    os << "exceptional   " << join(exceptional_components(e)) << "\n";
    os << "(-1)-type     " << (is_minus_one_completion(e) ? "yes" : "no") << "\n";
    if (orbit_analysis_applies(e)) {
        os << "dual exc.     " << join(dual_exceptional(e)) << "\n";
        if (is_minus_one_completion(e)) {
            SymmetryReport s = is_symmetric(e);
            os << "symmetric     " << (s.symmetric ? "yes" : "no") << " (Q-only: " << (s.literal ? "yes" : "no")
               << ")\n";
        }
    }
    ConfigInvariant q = config_invariant(e);
    for (const auto& c : q.entries) {
        if (c.rep.points.empty()) continue;
        os << "Q_" << c.index << " (" << type_str(c.type) << ")      {";
        for (std::size_t k = 0; k < c.rep.points.size(); ++k) os << (k ? ", " : "") << c.rep.points[k].str();
        os << "}\n";
    }
    return os.str();
}

std::string orbits_text(const ExtendedDivisor& e) {
    OrbitReport rep = orbit_decomposition(e);
    std::ostringstream os;
    os << "symmetric     " << (rep.symmetric ? "yes" : "no") << "\n";
    for (const auto& s : rep.invariant_sets) {
        os << "O_{" << s.index << "," << s.orbit << "}       {";
        for (std::size_t k = 0; k < s.members.size(); ++k)
            os << (k ? ", " : "") << label_str(s.members[k].first, s.members[k].second) << " cap dual";
        os << "}\n";
    }
    os << "O_0           " << rep.o0 << "\n";
    os << "verdict       " << verdict_name(rep.verdict.kind);
    if (rep.verdict.witness) os << " (witness C_" << *rep.verdict.witness << ")";
    os << "\n";
    os << "big orbit     {";
    for (std::size_t k = 0; k < rep.big_orbit_feathers.size(); ++k)
        os << (k ? ", " : "") << label_str(rep.big_orbit_feathers[k].first, rep.big_orbit_feathers[k].second);
    os << "}\n";
    return os.str();
}

std::string autgraph_text(const ExtendedDivisor& e) {
    std::ostringstream os;
    auto prof = check_condition_star(e);
    if (!prof) {
        os << "condition (*) fails\n";
        return os.str();
    }
    os << "condition (*) holds: support " << join(prof->support) << ", r = " << prof->r << "\n";
    FvShape shape = fv_shape(e);
    os << "fibrations    " << shape.vertex_count << " class" << (shape.vertex_count == 1 ? "" : "es") << "\n";
    os << "F_V           " << shape.vertex_count << (shape.vertex_count == 1 ? " vertex, " : " vertices, ")
       << arrow_class_name(shape.arrows) << "\n";
    Hugeness h = hugeness_verdict(e);
    os << "hugeness      not countably generated: " << (h.not_countably_generated ? "yes" : "not established")
       << "; uncountable free subgroup: " << (h.contains_uncountable_free ? "yes" : "not established") << "\n";
    return os.str();
}

std::string dext_dot(const ExtendedDivisor& e) {
    std::ostringstream os;
    os << "graph dext {\n  rankdir=LR;\n  node [shape=box];\n";
    for (int i = 0; i <= e.n(); ++i) os << "  C" << i << " [label=\"C_" << i << " (" << e.zigzag[i] << ")\"];\n";
    for (int i = 1; i <= e.n(); ++i) os << "  C" << i - 1 << " -- C" << i << ";\n";
    for (const auto& f : e.feathers) {
        os << "  F" << f.attach << "_" << f.j << " [shape=ellipse, label=\"" << label_str(f.attach, f.j) << " ("
           << f.self << ")\"];\n";
        os << "  F" << f.attach << "_" << f.j << " -- C" << f.attach << ";\n";
    }
    os << "}\n";
    return os.str();
}

std::string fv_dot(const ExtendedDivisor& e) {
    std::ostringstream os;
    os << "digraph fv {\n";
    auto prof = check_condition_star(e);
    if (!prof) {
        os << "  note [shape=plaintext, label=\"condition (*) fails\"];\n}\n";
        return os.str();
    }
    FvShape shape = fv_shape(e);
    os << "  V1 [label=\"[(X,D)]\"];\n";
    if (shape.vertex_count == 2) os << "  V2 [label=\"[(X',D')]\"];\n";
    switch (shape.arrows) {
        case ArrowClass::Loop: os << "  V1 -> V1 [label=\"reversion\"];\n"; break;
        case ArrowClass::SingleArrowPair:
            os << "  V1 -> V2 [label=\"reversion\"];\n  V2 -> V1 [label=\"reversion\"];\n";
            break;
        case ArrowClass::UncountableFamily:
            if (shape.vertex_count == 2)
                os << "  V1 -> V2 [label=\"uncountable family\", color=\"black:black:black\"];\n"
                   << "  V2 -> V1 [label=\"uncountable family\", color=\"black:black:black\"];\n";
            else
                os << "  V1 -> V1 [label=\"uncountable family\", color=\"black:black:black\"];\n";
            break;
    }
    os << "}\n";
    return os.str();
}

}  // namespace giz
