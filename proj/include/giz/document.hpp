#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "giz/autgraph.hpp"
#include "giz/extdiv.hpp"

namespace giz {

struct SourceLoc {
    int line = 1;
    int col = 1;
};

struct SurfaceDocument {
    enum class Kind { Divisor, Presentation };
    Kind kind = Kind::Divisor;
    int conductor = 1;
    ExtendedDivisor divisor;                 // Divisor kind
    std::optional<std::vector<int>> outer;   // advisory, Divisor kind
    FlaggedPresentation presentation;        // Presentation kind
    std::map<std::string, SourceLoc> where;  // not part of the value

    bool operator==(const SurfaceDocument& o) const {
        return kind == o.kind && conductor == o.conductor && divisor == o.divisor && outer == o.outer &&
               presentation == o.presentation;
    }
};

SurfaceDocument parse_document(const std::string& text);
std::string print_document(const SurfaceDocument& doc);

SurfaceDocument divisor_document(const ExtendedDivisor& e);
SurfaceDocument presentation_document(const FlaggedPresentation& p);

// The divisor a document describes, building it when needed.
ExtendedDivisor document_divisor(const SurfaceDocument& doc);

}  // namespace giz
