#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <complex>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "giz/cyc.hpp"
#include "giz/errors.hpp"
#include "giz/extdiv.hpp"

namespace support {

// Numeric value of a field element at zeta_N = exp(2 pi i / N).
inline std::complex<double> numeric(const giz::CycNumber& a) {
    const double pi = std::acos(-1.0);
    std::complex<double> s = 0;
    for (int k = 0; k < a.degree(); ++k)
        s += a.coefficients()[k].get_d() * std::polar(1.0, 2 * pi * k / a.conductor());
    return s;
}

inline giz::CycNumber random_cyc(std::mt19937& rng, int n, int range = 5) {
    std::uniform_int_distribution<int> c(-range, range), d(1, 3);
    giz::CycNumber a(n);
    for (long k = 0; k < giz::euler_phi(n); ++k)
        a += giz::CycNumber(mpq_class(c(rng), d(rng)), n) * giz::CycNumber::zeta(n, k);
    return a;
}

// Preorder gap word of a random binary tree with the given node count.
inline std::string random_word(std::mt19937& rng, int nodes) {
    if (nodes == 0) return "";
    int left = std::uniform_int_distribution<int>(0, nodes - 1)(rng);
    int right = nodes - 1 - left;
    char c = left && right ? 'B' : left ? 'N' : right ? 'F' : '.';
    return c + random_word(rng, left) + random_word(rng, right);
}

struct Generated {
    giz::Presentation p;
    giz::ExtendedDivisor e;
};

struct GenOptions {
    int conductor = 1;
    bool minus_one = true;
    int max_levels = 3;
    int max_gap = 3;
    int max_feathers = 2;
};

// Random presentation whose history yields a standard zigzag.
inline Generated random_presentation(std::mt19937& rng, GenOptions opt = {}) {
    std::uniform_int_distribution<int> levels(1, opt.max_levels), gap(0, opt.max_gap), nf(0, opt.max_feathers),
        val(-3, 3), coin(0, 3);
    auto point = [&](bool nonzero) {
        for (;;) {
            giz::CycNumber x(val(rng), opt.conductor);
            if (opt.conductor > 1 && coin(rng) == 0)
                x *= giz::CycNumber::zeta(opt.conductor, std::uniform_int_distribution<int>(0, opt.conductor - 1)(rng));
            if (!nonzero || !x.is_zero()) return x;
        }
    };
    for (int attempt = 0; attempt < 100000; ++attempt) {
        giz::Presentation p;
        p.conductor = opt.conductor;
        int r = levels(rng);
        p.outer = {2};
        for (int s = 1; s < r; ++s) {
            int len = gap(rng);
            p.outer.push_back(p.outer.back() + len + 1);
            p.gap_words.push_back(random_word(rng, len));
        }
        auto fill = [&](int i, bool inner) {
            std::vector<giz::CycNumber> m;
            int cnt = nf(rng);
            for (int k = 0; k < cnt; ++k) {
                giz::CycNumber x = point(inner);
                if (std::find(m.begin(), m.end(), x) == m.end()) m.push_back(x);
            }
            if (!m.empty()) p.sets[i] = m;
        };
        for (int i = 2; i <= p.n(); ++i) fill(i, !p.is_outer(i));
        for (std::size_t s = 1; s < p.outer.size(); ++s) {
            giz::CycNumber c = point(false);
            if (opt.minus_one) {
                auto prev = p.set(p.outer[s - 1]);
                while (std::find(prev.begin(), prev.end(), c) != prev.end()) c = point(false);
            }
            p.births[p.outer[s]] = c;
        }
        giz::canonicalize(p);
        try {
            auto e = giz::build_from_presentation(p);
            return {p, e};
        } catch (const giz::InvariantError&) {
        } catch (const giz::InputError&) {
        }
    }
    throw std::runtime_error("no valid presentation generated");
}

}  // namespace support
