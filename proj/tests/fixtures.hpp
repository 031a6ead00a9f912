#pragma once

#include <map>
#include <string>
#include <vector>

#include "giz/extdiv.hpp"

namespace fixtures {

inline giz::Presentation presentation(std::vector<int> outer, std::vector<std::string> words,
                                      std::map<int, std::vector<long>> sets, std::map<int, long> births = {},
                                      int conductor = 1) {
    giz::Presentation p;
    p.conductor = conductor;
    p.outer = std::move(outer);
    p.gap_words = std::move(words);
    for (auto& [i, m] : sets)
        for (long x : m) p.sets[i].push_back(giz::CycNumber(x, conductor));
    for (std::size_t s = 1; s < p.outer.size(); ++s) {
        long c = births.count(p.outer[s]) ? births[p.outer[s]] : 0;
        p.births[p.outer[s]] = giz::CycNumber(c, conductor);
    }
    giz::canonicalize(p);
    return p;
}

// [[0,0,-3,-2f,-3,-2f,-3]]: outer {2,6}, exceptional set {4,5}.
inline giz::Presentation exceptional_example() { return presentation({2, 6}, {"B.."}, {{3, {1}}, {5, {1}}}); }

// [[0,0,-3,-2,-2f,-3,-5,-2,-2f,-3,-2]]: outer {2,6,10}.
inline giz::Presentation final_example() {
    return presentation({2, 6, 10}, {"NF.", "NF."}, {{4, {1}}, {8, {1}}});
}

inline giz::ExtendedDivisor divisor(std::vector<int> weights, std::vector<std::pair<int, long>> feathers,
                                    int conductor = 1) {
    giz::ExtendedDivisor e;
    e.conductor = conductor;
    e.zigzag = giz::Zigzag(std::move(weights));
    for (auto [i, b] : feathers) {
        giz::Feather f;
        f.attach = i;
        f.mother = i;
        f.base = giz::CycNumber(b, conductor);
        e.feathers.push_back(f);
    }
    giz::canonicalize(e);
    return e;
}

}  // namespace fixtures
