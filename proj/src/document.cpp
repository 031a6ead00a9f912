#include "giz/document.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "giz/errors.hpp"

namespace giz {

namespace {

struct RawScalar {
    std::string text;
    SourceLoc loc;
    bool unknown = false;
};

struct RawFeather {
    SourceLoc loc;
    std::optional<int> at, self, mother;
    std::optional<RawScalar> base;
};

struct RawOuter {
    SourceLoc loc;
    int k = 0;
    std::optional<RawScalar> c;
    std::optional<std::vector<RawScalar>> m;
    bool m_unknown = false;
};

struct RawGap {
    SourceLoc loc;
    SourceLoc word_loc;
    std::string word;
    std::vector<std::vector<RawScalar>> feathers;
    bool has_feathers = false;
};

class DocParser {
public:
    explicit DocParser(const std::string& s) : s_(s) {}

    SurfaceDocument run() {
        skip();
        SourceLoc top = here();
        std::string kind = ident();
        SurfaceDocument doc;
        if (kind == "surface")
            parse_surface(doc, top);
        else if (kind == "presentation")
            parse_presentation(doc, top);
        else
            fail_at(top, "expected 'surface' or 'presentation', got '" + kind + "'");
        skip();
        if (pos_ != s_.size()) fail("unexpected text after document");
        return doc;
    }

private:
    [[noreturn]] void fail_at(SourceLoc l, const std::string& msg) const { throw ParseError(msg, l.line, l.col); }
    [[noreturn]] void fail(const std::string& msg) const { fail_at(here(), msg); }
    [[noreturn]] void invariant_at(SourceLoc l, const std::string& msg) const {
        throw LocatedInvariantError(msg, l.line, l.col);
    }

    SourceLoc here() const { return loc_of(pos_); }

    SourceLoc loc_of(std::size_t p) const {
        SourceLoc l;
        for (std::size_t k = 0; k < p && k < s_.size(); ++k) {
            if (s_[k] == '\n') {
                ++l.line;
                l.col = 1;
            } else {
                ++l.col;
            }
        }
        return l;
    }

    void skip() {
        while (pos_ < s_.size()) {
            char c = s_[pos_];
            if (c == '#') {
                while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    void expect(char c) {
        skip();
        if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    std::string ident() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        if (start == pos_) fail("expected a name");
        return s_.substr(start, pos_ - start);
    }

    int integer() {
        skip();
        std::size_t start = pos_;
        if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
        std::size_t digits = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (digits == pos_) {
            pos_ = start;
            fail("expected an integer");
        }
        try {
            return std::stoi(s_.substr(start, pos_ - start));
        } catch (const std::out_of_range&) {
            pos_ = start;
            fail("integer out of range");
        }
    }

    bool boolean() {
        SourceLoc l = here();
        std::string v = ident();
        if (v == "true") return true;
        if (v == "false") return false;
        fail_at(l, "expected true or false");
    }

    std::string string_lit() {
        expect('"');
        std::size_t start = pos_;
        while (pos_ < s_.size() && s_[pos_] != '"' && s_[pos_] != '\n') ++pos_;
        if (pos_ >= s_.size() || s_[pos_] != '"') fail("unterminated string");
        std::string v = s_.substr(start, pos_ - start);
        ++pos_;
        return v;
    }

    RawScalar scalar() {
        skip();
        RawScalar r;
        r.loc = here();
        if (pos_ < s_.size() && s_[pos_] == '?') {
            ++pos_;
            r.unknown = true;
            return r;
        }
        std::size_t start = pos_;
        int depth = 0;
        while (pos_ < s_.size()) {
            char c = s_[pos_];
            if (c == '(') ++depth;
            if (c == ')') {
                if (depth == 0) break;
                --depth;
            }
            if (depth == 0 && (c == ',' || c == ']' || c == '}' || c == '\n' || c == '#')) break;
            ++pos_;
        }
        std::string t = s_.substr(start, pos_ - start);
        while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
        if (t.empty()) fail_at(r.loc, "expected an expression");
        r.text = t;
        return r;
    }

    std::vector<int> int_list() {
        std::vector<int> out;
        expect('[');
        if (accept(']')) return out;
        do out.push_back(integer());
        while (accept(','));
        expect(']');
        return out;
    }

    std::vector<RawScalar> scalar_list() {
        std::vector<RawScalar> out;
        expect('[');
        if (accept(']')) return out;
        do {
            out.push_back(scalar());
            if (out.back().unknown) fail_at(out.back().loc, "'?' is only allowed for a whole entry");
        } while (accept(','));
        expect(']');
        return out;
    }

    // Entries separated by commas or whitespace, up to the closing brace.
    template <class F>
    void block(F&& entry) {
        expect('{');
        std::set<std::string> seen;
        for (;;) {
            if (accept('}')) return;
            SourceLoc l = here();
            std::string key = ident();
            if (key != "feather" && key != "outer" && key != "gap" && !seen.insert(key).second)
                fail_at(l, "duplicate key '" + key + "'");
            entry(key, l);
            accept(',');
        }
    }

    void parse_surface(SurfaceDocument& doc, SourceLoc top) {
        doc.kind = SurfaceDocument::Kind::Divisor;
        doc.where["document"] = top;
        std::optional<std::vector<int>> weights;
        std::vector<RawFeather> feathers;
        bool up_to_scalar = false;
        block([&](const std::string& key, SourceLoc l) {
            if (key == "conductor") {
                expect('=');
                doc.conductor = integer();
                if (doc.conductor <= 0) fail_at(l, "conductor must be positive");
                doc.where["conductor"] = l;
            } else if (key == "weights") {
                expect('=');
                weights = int_list();
                doc.where["weights"] = l;
            } else if (key == "outer") {
                expect('=');
                doc.outer = int_list();
                doc.where["outer"] = l;
            } else if (key == "up_to_scalar") {
                expect('=');
                up_to_scalar = boolean();
            } else if (key == "feather") {
                RawFeather f;
                f.loc = l;
                block([&](const std::string& fk, SourceLoc fl) {
                    expect('=');
                    if (fk == "at")
                        f.at = integer();
                    else if (fk == "self")
                        f.self = integer();
                    else if (fk == "mother")
                        f.mother = integer();
                    else if (fk == "base") {
                        f.base = scalar();
                        if (f.base->unknown) fail_at(f.base->loc, "divisor base points must be known");
                    } else
                        fail_at(fl, "unknown key '" + fk + "'");
                });
                if (!f.at) fail_at(l, "feather needs 'at'");
                if (!f.base) fail_at(l, "feather needs 'base'");
                feathers.push_back(f);
            } else {
                fail_at(l, "unknown key '" + key + "'");
            }
        });
        if (!weights) fail_at(top, "surface needs 'weights'");
        SourceLoc wl = doc.where["weights"];
        ExtendedDivisor& e = doc.divisor;
        e.conductor = doc.conductor;
        e.zigzag = Zigzag(*weights);
        e.bases_up_to_scalar = up_to_scalar;
        if (!is_standard(e.zigzag)) invariant_at(wl, "weights " + e.zigzag.str() + " are not standard");
        const int n = e.n();
        std::vector<SourceLoc> floc;
        for (const auto& rf : feathers) {
            Feather f;
            f.attach = *rf.at;
            if (f.attach < 2 || f.attach > n) invariant_at(rf.loc, "feather index out of range 2.." + std::to_string(n));
            f.self = rf.self.value_or(-1);
            if (f.self > -1) invariant_at(rf.loc, "feather self-intersection must be at most -1");
            if (f.self != -1 && !rf.mother) invariant_at(rf.loc, "mother data missing for a non-(-1) feather");
            f.mother = rf.mother.value_or(f.attach);
            if (f.mother < 2 || f.mother > f.attach) invariant_at(rf.loc, "mother index out of range");
            f.base = eval(*rf.base, doc.conductor);
            for (std::size_t k = 0; k < e.feathers.size(); ++k)
                if (e.feathers[k].mother == f.mother && e.feathers[k].base == f.base)
                    invariant_at(rf.loc, "duplicate base point " + f.base.str() + " on C_" + std::to_string(f.mother));
            e.feathers.push_back(f);
            floc.push_back(rf.loc);
        }
        canonicalize(e);
        if (!is_realizable(e)) invariant_at(wl, "fiber does not contract to a 0-curve; not a realizable extended divisor");
        auto types = classify_components(e);
        for (std::size_t k = 0; k < feathers.size(); ++k) {
            int mother = feathers[k].mother.value_or(*feathers[k].at);
            if (types[mother - 2] == ComponentType::Star && eval(*feathers[k].base, doc.conductor).is_zero())
                invariant_at(floc[k], "inner base point must be nonzero");
        }
        if (doc.outer) {
            auto computed = outer_indices(e);
            if (computed != *doc.outer) {
                std::ostringstream os;
                os << "declared outer components do not match computed [";
                for (std::size_t k = 0; k < computed.size(); ++k) os << (k ? ", " : "") << computed[k];
                os << "]";
                invariant_at(doc.where["outer"], os.str());
            }
        }
    }

    CycNumber eval(const RawScalar& r, int conductor) const {
        try {
            return cyc_parse(r.text, conductor);
        } catch (const ParseError& e) {
            throw ParseError(e.message(), r.loc.line, r.loc.col + e.column() - 1);
        }
    }

    void parse_presentation(SurfaceDocument& doc, SourceLoc top) {
        doc.kind = SurfaceDocument::Kind::Presentation;
        doc.where["document"] = top;
        std::vector<RawOuter> outers;
        std::vector<RawGap> gaps;
        std::string last;
        block([&](const std::string& key, SourceLoc l) {
            if (key == "conductor") {
                expect('=');
                doc.conductor = integer();
                if (doc.conductor <= 0) fail_at(l, "conductor must be positive");
            } else if (key == "outer") {
                if (last == "outer") fail_at(l, "expected a gap between outer blocks");
                RawOuter o;
                o.loc = l;
                SourceLoc kl = here();
                if (ident() != "k") fail_at(kl, "expected 'k='");
                expect('=');
                o.k = integer();
                block([&](const std::string& ok, SourceLoc ol) {
                    expect('=');
                    if (ok == "c") {
                        o.c = scalar();
                    } else if (ok == "M") {
                        if (accept('?'))
                            o.m_unknown = true;
                        else
                            o.m = scalar_list();
                    } else {
                        fail_at(ol, "unknown key '" + ok + "'");
                    }
                });
                outers.push_back(std::move(o));
                last = "outer";
            } else if (key == "gap") {
                if (last != "outer") fail_at(l, "a gap must follow an outer block");
                RawGap g;
                g.loc = l;
                g.word_loc = l;
                block([&](const std::string& gk, SourceLoc gl) {
                    expect('=');
                    if (gk == "word") {
                        g.word_loc = here();
                        g.word = string_lit();
                    } else if (gk == "feathers") {
                        g.has_feathers = true;
                        expect('[');
                        if (!accept(']')) {
                            do g.feathers.push_back(scalar_list());
                            while (accept(','));
                            expect(']');
                        }
                    } else {
                        fail_at(gl, "unknown key '" + gk + "'");
                    }
                });
                gaps.push_back(std::move(g));
                last = "gap";
            } else {
                fail_at(l, "unknown key '" + key + "'");
            }
        });
        if (outers.empty()) fail_at(top, "presentation needs at least 'outer k=2'");
        if (last != "outer") fail_at(gaps.back().loc, "a presentation must end with an outer block");
        FlaggedPresentation& fp = doc.presentation;
        Presentation& p = fp.p;
        p.conductor = doc.conductor;
        const int n = doc.conductor;
        for (std::size_t s = 0; s < outers.size(); ++s) {
            const RawOuter& o = outers[s];
            if (s == 0 && o.k != 2) fail_at(o.loc, "the first outer component is k=2");
            if (s > 0 && o.k <= outers[s - 1].k) fail_at(o.loc, "outer indices must increase");
            if (s == 0 && o.c) fail_at(o.c->loc, "C_2 has no birth point");
            if (s > 0 && !o.c) fail_at(o.loc, "outer block needs 'c'");
            p.outer.push_back(o.k);
            if (o.c) {
                if (o.c->unknown)
                    fp.unknown_births.insert(o.k);
                else
                    p.births[o.k] = eval(*o.c, n);
            }
            if (o.m_unknown) {
                fp.unknown_sets.insert(o.k);
            } else if (o.m) {
                add_set(p, o.k, *o.m, n, false);
            }
        }
        for (std::size_t s = 0; s < gaps.size(); ++s) {
            const RawGap& g = gaps[s];
            int len = outers[s + 1].k - outers[s].k - 1;
            if (static_cast<int>(g.word.size()) != len)
                fail_at(g.word_loc, "gap word length must be " + std::to_string(len) + " (k_{s+1} - k_s - 1)");
            if (g.has_feathers && g.feathers.size() != g.word.size())
                fail_at(g.loc, "gap needs one feather list per inner component");
            p.gap_words.push_back(g.word);
            for (std::size_t k = 0; k < g.feathers.size(); ++k)
                add_set(p, outers[s].k + 1 + static_cast<int>(k), g.feathers[k], n, true);
        }
        canonicalize(p);
        if (fp.exact()) {
            try {
                build_from_presentation(p);
            } catch (const InvariantError& e) {
                invariant_at(top, e.what());
            } catch (const InputError& e) {
                fail_at(top, e.what());
            }
        } else {
            try {
                check_shape(p);
            } catch (const InputError& e) {
                fail_at(top, e.what());
            }
        }
    }

    // Structural checks that do not need unknown entries.
    static void check_shape(const Presentation& p) {
        Presentation q = p;
        for (std::size_t s = 1; s < q.outer.size(); ++s)
            if (!q.births.count(q.outer[s])) q.births.emplace(q.outer[s], CycNumber(0, q.conductor));
        chart_matrices(q);
    }

    void add_set(Presentation& p, int i, const std::vector<RawScalar>& raw, int n, bool inner) {
        std::vector<CycNumber> vals;
        for (const auto& r : raw) {
            CycNumber v = eval(r, n);
            if (inner && v.is_zero()) invariant_at(r.loc, "inner base point must be nonzero");
            if (std::find(vals.begin(), vals.end(), v) != vals.end())
                invariant_at(r.loc, "duplicate base point " + v.str() + " in M_" + std::to_string(i));
            vals.push_back(v);
        }
        if (!vals.empty()) p.sets[i] = vals;
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

std::string join_scalars(const std::vector<CycNumber>& v) {
    std::string out = "[";
    for (std::size_t k = 0; k < v.size(); ++k) out += (k ? ", " : "") + v[k].str();
    return out + "]";
}

}  // namespace

SurfaceDocument parse_document(const std::string& text) { return DocParser(text).run(); }

std::string print_document(const SurfaceDocument& doc) {
    std::ostringstream os;
    if (doc.kind == SurfaceDocument::Kind::Divisor) {
        const ExtendedDivisor& e = doc.divisor;
        os << "surface {\n";
        os << "  conductor = " << doc.conductor << "\n";
        os << "  weights = [";
        for (std::size_t k = 0; k < e.zigzag.w.size(); ++k) os << (k ? ", " : "") << e.zigzag.w[k];
        os << "]\n";
        for (const auto& f : e.feathers) {
            os << "  feather { at = " << f.attach << ", base = " << f.base.str() << ", self = " << f.self;
            if (f.mother != f.attach) os << ", mother = " << f.mother;
            os << " }\n";
        }
        if (doc.outer) {
            os << "  outer = [";
            for (std::size_t k = 0; k < doc.outer->size(); ++k) os << (k ? ", " : "") << (*doc.outer)[k];
            os << "]\n";
        }
        if (e.bases_up_to_scalar) os << "  up_to_scalar = true\n";
        os << "}\n";
        return os.str();
    }
    const FlaggedPresentation& fp = doc.presentation;
    const Presentation& p = fp.p;
    os << "presentation {\n";
    os << "  conductor = " << doc.conductor << "\n";
    for (std::size_t s = 0; s < p.outer.size(); ++s) {
        int k = p.outer[s];
        os << "  outer k=" << k << " { ";
        if (s > 0) os << "c = " << (fp.unknown_births.count(k) ? "?" : p.births.at(k).str()) << ", ";
        os << "M = " << (fp.unknown_sets.count(k) ? "?" : join_scalars(p.set(k))) << " }\n";
        if (s + 1 == p.outer.size()) break;
        const std::string& word = p.gap_words[s];
        os << "  gap { word = \"" << word << "\", feathers = [";
        for (std::size_t j = 0; j < word.size(); ++j) os << (j ? ", " : "") << join_scalars(p.set(k + 1 + static_cast<int>(j)));
        os << "] }\n";
    }
    os << "}\n";
    return os.str();
}

SurfaceDocument divisor_document(const ExtendedDivisor& e) {
    SurfaceDocument d;
    d.kind = SurfaceDocument::Kind::Divisor;
    d.conductor = e.conductor;
    d.divisor = e;
    return d;
}

SurfaceDocument presentation_document(const FlaggedPresentation& p) {
    SurfaceDocument d;
    d.kind = SurfaceDocument::Kind::Presentation;
    d.conductor = p.p.conductor;
    d.presentation = p;
    return d;
}

ExtendedDivisor document_divisor(const SurfaceDocument& doc) {
    if (doc.kind == SurfaceDocument::Kind::Divisor) return doc.divisor;
    if (!doc.presentation.exact()) throw InputError("presentation has indeterminate entries");
    return build_from_presentation(doc.presentation.p);
}

}  // namespace giz
