// Command line front end: analyze, reverse, orbits, autgraph, shift, torus, dot.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "giz/autgraph.hpp"
#include "giz/document.hpp"
#include "giz/errors.hpp"
#include "giz/report.hpp"

namespace {

enum Exit { kOk = 0, kUsage = 1, kInvariant = 2, kPrecondition = 3 };

std::string read_input(const std::string& path) {
    std::ostringstream ss;
    if (path.empty() || path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw giz::InputError("cannot open " + path);
        ss << in.rdbuf();
    }
    return ss.str();
}

void emit(bool as_json, const nlohmann::json& j, const std::string& text) {
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

const giz::Presentation& need_exact(const giz::SurfaceDocument& doc, const std::string& cmd) {
    if (doc.kind != giz::SurfaceDocument::Kind::Presentation)
        throw giz::InputError(cmd + " needs a presentation document");
    return doc.presentation.p;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Invariants and automorphism-group verdicts for smooth Gizatullin surfaces"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string input;
    bool as_json = false;
    app.add_option("--input", input, "document file (default: stdin)");
    app.add_flag("--json", as_json, "emit JSON");

    auto* analyze = app.add_subcommand("analyze", "classification, exceptional sets, configuration invariant");
    auto* reverse = app.add_subcommand("reverse", "reversed extended divisor");
    auto* orbits = app.add_subcommand("orbits", "invariant subsets and homogeneity verdict");
    auto* autgraph = app.add_subcommand("autgraph", "condition (*), fibration classes, F_V shape, hugeness");
    auto* shift = app.add_subcommand("shift", "elementary shift on a presentation");
    std::string shift_a;
    int level = 2;
    shift->add_option("--a", shift_a, "shift amount")->required();
    shift->add_option("--level", level, "outer level t")->required();
    auto* torus = app.add_subcommand("torus", "torus element (a, b) on a presentation");
    std::string ta, tb;
    torus->add_option("--a", ta)->required();
    torus->add_option("--b", tb)->required();
    auto* dot = app.add_subcommand("dot", "write dext.dot and fv.dot");
    std::string outdir = ".";
    dot->add_option("--out", outdir, "output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e);
        return kOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        giz::SurfaceDocument doc = giz::parse_document(read_input(input));
        if (*analyze) {
            auto e = giz::document_divisor(doc);
            emit(as_json, giz::analyze_json(e), giz::analyze_text(e));
        } else if (*reverse) {
            auto e = giz::reverse_extdiv(giz::document_divisor(doc));
            emit(as_json, giz::divisor_json(e), giz::print_document(giz::divisor_document(e)));
        } else if (*orbits) {
            auto e = giz::document_divisor(doc);
            emit(as_json, giz::orbits_json(e), giz::orbits_text(e));
        } else if (*autgraph) {
            auto e = giz::document_divisor(doc);
            emit(as_json, giz::autgraph_json(e), giz::autgraph_text(e));
            if (!giz::check_condition_star(e)) return kPrecondition;
        } else if (*shift) {
            need_exact(doc, "shift");
            auto a = giz::cyc_parse(shift_a, doc.conductor);
            auto out = giz::jon_shift_action(doc.presentation, a, level);
            std::string text = giz::print_document(giz::presentation_document(out));
            emit(as_json, nlohmann::json{{"document", text}, {"exact", out.exact()}}, text);
        } else if (*torus) {
            const auto& p = need_exact(doc, "torus");
            if (!doc.presentation.exact()) throw giz::InputError("torus needs a presentation without unknown entries");
            auto out = giz::torus_action(p, giz::cyc_parse(ta, doc.conductor), giz::cyc_parse(tb, doc.conductor));
            std::string text = giz::print_document(giz::presentation_document({out, {}, {}}));
            emit(as_json, nlohmann::json{{"document", text}}, text);
        } else if (*dot) {
            auto e = giz::document_divisor(doc);
            std::filesystem::create_directories(outdir);
            std::ofstream(std::filesystem::path(outdir) / "dext.dot") << giz::dext_dot(e);
            std::ofstream(std::filesystem::path(outdir) / "fv.dot") << giz::fv_dot(e);
            if (as_json)
                std::cout << nlohmann::json{{"dext", "dext.dot"}, {"fv", "fv.dot"}}.dump(2) << "\n";
        }
    } catch (const giz::PreconditionError& e) {
        std::cerr << "precondition failure: " << e.what() << "\n";
        return kPrecondition;
    } catch (const giz::InvariantError& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return kInvariant;
    } catch (const giz::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kOk;
}
