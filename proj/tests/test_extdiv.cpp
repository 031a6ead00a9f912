#include <doctest.h>

#include "fixtures.hpp"
#include "giz/errors.hpp"
#include "giz/extdiv.hpp"
#include "support.hpp"

using giz::ComponentType;
using giz::Zigzag;

namespace {

std::vector<int> weights_of(const giz::ExtendedDivisor& e) { return e.zigzag.w; }

int count_on(const giz::ExtendedDivisor& e, int i) { return e.r(i); }

// Weight C_i had just before its feathers were blown up, read off the gap word.
std::map<int, int> pre_feather_inner_weights(const giz::Presentation& p, const giz::ExtendedDivisor& e) {
    std::map<int, int> out;
    for (int i = 2; i <= p.n(); ++i)
        if (!p.is_outer(i)) out[i] = e.zigzag[i] + static_cast<int>(p.set(i).size());
    return out;
}

}  // namespace

TEST_CASE("build the worked examples") {
    auto e = giz::build_from_presentation(fixtures::exceptional_example());
    CHECK(weights_of(e) == std::vector<int>{0, 0, -3, -2, -3, -2, -3});
    CHECK(e.feathers.size() == 2);
    CHECK(count_on(e, 3) == 1);
    CHECK(count_on(e, 5) == 1);
    auto f = giz::build_from_presentation(fixtures::final_example());
    CHECK(weights_of(f) == std::vector<int>{0, 0, -3, -2, -2, -3, -5, -2, -2, -3, -2});
    CHECK(count_on(f, 4) == 1);
    CHECK(count_on(f, 8) == 1);
    for (auto& ft : f.feathers) CHECK(ft.self == -1);
}

TEST_CASE("degenerate presentations") {
    auto empty = giz::build_from_presentation(fixtures::presentation({2}, {}, {}));
    CHECK(weights_of(empty) == std::vector<int>{0, 0, 0});
    CHECK(empty.feathers.empty());
    for (int k = 2; k <= 5; ++k) {
        std::vector<long> m;
        for (int a = 1; a <= k; ++a) m.push_back(a);
        auto d = giz::build_from_presentation(fixtures::presentation({2}, {}, {{2, m}}));
        CHECK(weights_of(d) == std::vector<int>{0, 0, -k});
        CHECK(count_on(d, 2) == k);
    }
    // One feather leaves [[0,0,-1]], which is not standard.
    CHECK_THROWS_AS(giz::build_from_presentation(fixtures::presentation({2}, {}, {{2, {1}}})), giz::InvariantError);
    CHECK_THROWS_AS(giz::build_from_presentation(fixtures::presentation({2, 4}, {"."}, {{3, {0}}})), giz::InputError);
    CHECK_THROWS_AS(giz::build_from_presentation(fixtures::presentation({2, 4}, {".."}, {})), giz::InputError);
}

TEST_CASE("classification") {
    auto e = giz::build_from_presentation(fixtures::exceptional_example());
    auto t = giz::classify_components(e);
    std::vector<ComponentType> expect{ComponentType::Plus, ComponentType::Star, ComponentType::Star,
                                      ComponentType::Star, ComponentType::Plus};
    CHECK(t == expect);
    CHECK(giz::outer_indices(giz::build_from_presentation(fixtures::final_example())) == std::vector<int>{2, 6, 10});
    auto z = fixtures::divisor({0, 0, 0}, {});
    CHECK(giz::classify_components(z) == std::vector<ComponentType>{ComponentType::Plus});
}

TEST_CASE("exceptional sets") {
    auto e = giz::build_from_presentation(fixtures::exceptional_example());
    CHECK(giz::exceptional_components(e) == std::set<int>{4, 5});
    auto f = giz::build_from_presentation(fixtures::final_example());
    CHECK(giz::exceptional_components(f) == std::set<int>{5, 9});
    CHECK(giz::exceptional_components(giz::reverse_extdiv(f)) == std::set<int>{3, 5, 7, 9});
    CHECK(giz::dual_exceptional(f) == std::set<int>{3, 5, 7, 9});
    auto flat = giz::build_from_presentation(fixtures::presentation({2, 3, 4}, {"", ""}, {{2, {1}}, {4, {1, 2}}}, {{3, 2}, {4, 1}}));
    CHECK(giz::exceptional_components(flat).empty());
    CHECK(giz::dual_exceptional(flat).empty());
    std::set<int> expect;
    auto rev = giz::reverse_extdiv(e);
    for (int tau : giz::exceptional_components(rev)) expect.insert(e.n() + 2 - tau);
    CHECK(giz::dual_exceptional(e) == expect);
}

TEST_CASE("reversal of divisors") {
    auto f = giz::build_from_presentation(fixtures::final_example());
    auto r = giz::reverse_extdiv(f);
    CHECK(weights_of(r) == std::vector<int>{0, 0, -2, -3, -2, -2, -5, -3, -2, -2, -3});
    CHECK(count_on(r, 4) == 1);
    CHECK(count_on(r, 8) == 1);
    CHECK(r.bases_up_to_scalar);
    auto rr = giz::reverse_extdiv(r);
    CHECK(rr.zigzag == f.zigzag);
    for (int i = 2; i <= f.n(); ++i) CHECK(rr.r(i) == f.r(i));
    auto pal = fixtures::divisor({0, 0, -2, -2, -4, -2, -2}, {{3, 1}, {5, 1}});
    REQUIRE(giz::is_realizable(pal));
    auto pr = giz::reverse_extdiv(pal);
    CHECK(pr.zigzag == pal.zigzag);
    for (int i = 2; i <= pal.n(); ++i) CHECK(pr.r(i) == pal.r(i));
    auto minus2 = f;
    minus2.feathers[0].self = -2;
    CHECK_THROWS_AS(giz::reverse_extdiv(minus2), giz::PreconditionError);
}

TEST_CASE("minus one completions") {
    CHECK(giz::is_minus_one_completion(giz::build_from_presentation(fixtures::final_example())));
    auto bad = fixtures::presentation({2, 4}, {"."}, {{2, {0, 1}}, {3, {1}}}, {{4, 0}});
    CHECK_FALSE(giz::is_minus_one_completion(bad));
    auto e = giz::build_from_presentation(bad);
    CHECK_FALSE(giz::is_minus_one_completion(e));
    bool has_minus2 = false;
    for (auto& f : e.feathers) has_minus2 |= f.self == -2 && f.mother == 2 && f.attach == 4;
    CHECK(has_minus2);
    auto good = fixtures::presentation({2, 4}, {"."}, {{2, {1}}, {3, {1}}}, {{4, 0}});
    CHECK(giz::is_minus_one_completion(good));
    CHECK(giz::is_minus_one_completion(giz::build_from_presentation(good)));
}

TEST_CASE("matching") {
    auto f = giz::build_from_presentation(fixtures::final_example());
    CHECK(giz::matching(f, {4, 1}) == std::pair{8, 1});
    CHECK(giz::matching(f, {8, 1}) == std::pair{4, 1});
    auto six = fixtures::divisor({0, 0, -2, -2, -4, -2, -2}, {{3, 1}, {3, 2}, {5, 1}, {5, 2}});
    CHECK(six.n() == 6);
    CHECK(giz::matching(six, {5, 2}) == std::pair{3, 2});
    CHECK_THROWS(giz::matching(f, {4, 2}));
}

TEST_CASE("chart matrices") {
    auto one = fixtures::presentation({2, 4}, {"."}, {{3, {1}}});
    auto g = giz::chart_matrices(one);
    REQUIRE(g.size() == 1);
    CHECK(g[0].chart.at(2) == giz::kNearStep);
    auto bare = giz::chart_matrices(fixtures::presentation({2, 3}, {""}, {{2, {1}}, {3, {1, 2}}}, {{3, 2}}));
    CHECK(bare[0].chart.at(2) == giz::ChartMatrix{});
    CHECK(g[0].chart.at(3) == giz::ChartMatrix{1, -1, 0, 1});
    CHECK(g[0].chart.at(3) == giz::kFarStep);
    for (auto& gap : giz::chart_matrices(fixtures::final_example())) {
        for (auto i = gap.chart.begin(); i != gap.chart.end(); ++i) {
            CHECK(i->second.det() == 1);
            auto nx = std::next(i);
            if (nx == gap.chart.end()) continue;
            auto t = nx->second * i->second.inverse();
            CHECK(t.k == 0);
            CHECK(t.l == -1);
        }
    }
}

TEST_CASE("random presentations") {
    std::mt19937 rng(2024);
    for (int rep = 0; rep < 150; ++rep) {
        support::GenOptions opt;
        opt.minus_one = rep % 3 != 0;
        auto [p, e] = support::random_presentation(rng, opt);
        CAPTURE(e.zigzag.str());
        CHECK(giz::is_realizable(e));
        CHECK(giz::outer_indices(e) == p.outer);
        CHECK(giz::is_minus_one_completion(p) == giz::is_minus_one_completion(e));
        auto ex = giz::exceptional_components(e);
        for (int i : ex) CHECK_FALSE(p.is_outer(i));
        auto pre = pre_feather_inner_weights(p, e);
        for (auto& gap : giz::chart_matrices(p)) {
            for (auto i = gap.chart.begin(); i != gap.chart.end(); ++i) {
                CHECK(i->second.det() == 1);
                for (auto j = std::next(i); j != gap.chart.end(); ++j) {
                    auto t = j->second * i->second.inverse();
                    CHECK(t.det() == 1);
                    CHECK(t.q > 0);
                    CHECK(t.l < 0);
                    bool adjacent = j == std::next(i);
                    CHECK(((t.k == 0 && t.l == -1) == adjacent));
                    // Toric chains: the transition to the next curve reads its weight.
                    if (adjacent && pre.count(j->first)) CHECK(t.q == -pre.at(j->first));
                }
            }
        }
        if (!giz::is_minus_one_completion(e)) continue;
        auto r = giz::reverse_extdiv(e);
        auto ta = giz::classify_components(e), tb = giz::classify_components(r);
        for (int i = 2; i <= e.n(); ++i) {
            int iv = e.n() + 2 - i;
            CHECK(ta[i - 2] == tb[iv - 2]);
            CHECK(e.r(i) == r.r(iv));
        }
    }
}
