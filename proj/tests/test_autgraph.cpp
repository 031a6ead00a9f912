#include <doctest.h>

#include "fixtures.hpp"
#include "giz/autgraph.hpp"
#include "giz/errors.hpp"
#include "support.hpp"

using giz::ArrowClass;
using giz::CycNumber;
using giz::Move;

namespace {

giz::ExtendedDivisor build(const giz::Presentation& p) { return giz::build_from_presentation(p); }

// Palindromic, feathers on C_3 and C_5, outer {2,4,6}.
giz::Presentation mirrored_middle_outer() {
    return fixtures::presentation({2, 4, 6}, {".", "."}, {{3, {1}}, {5, {2}}}, {{4, 1}, {6, 1}});
}

}  // namespace

TEST_CASE("condition star") {
    auto f = build(fixtures::final_example());
    auto prof = giz::check_condition_star(f);
    REQUIRE(prof);
    CHECK(prof->s == 4);
    CHECK(prof->t == 8);
    CHECK(prof->r == 4);
    CHECK(prof->outer == std::vector<int>{2, 6, 10});
    auto on_c2 = build(fixtures::presentation({2}, {}, {{2, {1, 2}}}));
    CHECK_FALSE(giz::check_condition_star(on_c2));
    auto three = build(fixtures::presentation({2, 6}, {"NF."}, {{3, {1}}, {4, {1}}, {5, {1}}}));
    CHECK_FALSE(giz::check_condition_star(three));
    CHECK_THROWS_AS(giz::fibration_classes(on_c2), giz::PreconditionError);
}

TEST_CASE("more than three outer components under condition star") {
    auto p = fixtures::presentation({2, 4, 5, 6, 8}, {".", "", "", "."}, {{3, {1}}, {7, {1}}},
                                    {{4, 1}, {5, 1}, {6, 1}, {8, 1}});
    auto e = build(p);
    CHECK(e.zigzag == giz::Zigzag({0, 0, -2, -2, -3, -2, -3, -2, -2}));
    CHECK(giz::outer_indices(e) == std::vector<int>{2, 4, 5, 6, 8});
    auto prof = giz::check_condition_star(e);
    REQUIRE(prof);
    CHECK(prof->r == 6);
    auto h = giz::hugeness_verdict(e);
    CHECK(h.not_countably_generated);
    CHECK_FALSE(h.contains_uncountable_free);
}

TEST_CASE("fibration classes") {
    CHECK(giz::fibration_classes(build(fixtures::final_example())) == 2);
    for (long b : {1, 3, -7}) {
        auto self = build(fixtures::presentation({2, 4}, {"."}, {{3, {1, b + 10}}}));
        CHECK(self.zigzag == giz::Zigzag({0, 0, -2, -3, -2}));
        CHECK(giz::fibration_classes(self) == 1);
    }
    auto counts = build(fixtures::presentation({2, 4, 6}, {".", "."}, {{3, {1}}, {5, {1, 2}}}, {{4, 1}, {6, 1}}));
    CHECK(giz::fibration_classes(counts) == 2);
    CHECK(giz::fibration_classes(build(mirrored_middle_outer())) == 1);
}

TEST_CASE("shape of the fibration graph") {
    auto f = build(fixtures::final_example());
    auto s = giz::fv_shape(f);
    CHECK(s.vertex_count == 2);
    CHECK(s.arrows == ArrowClass::UncountableFamily);
    auto inner = build(fixtures::presentation({2, 6}, {"NF."}, {{4, {1}}}));
    CHECK(inner.zigzag == giz::Zigzag({0, 0, -3, -2, -2, -3, -2}));
    auto si = giz::fv_shape(inner);
    CHECK(si.vertex_count == 2);
    CHECK(si.arrows == ArrowClass::SingleArrowPair);
    auto loop = giz::fv_shape(build(fixtures::presentation({2, 4}, {"."}, {{3, {1, 2}}})));
    CHECK(loop.vertex_count == 1);
    CHECK(loop.arrows == ArrowClass::Loop);
    CHECK(giz::arrow_class_name(ArrowClass::UncountableFamily) == "uncountable-family");
}

TEST_CASE("hugeness") {
    auto h = giz::hugeness_verdict(build(fixtures::final_example()));
    CHECK(h.not_countably_generated);
    CHECK(h.contains_uncountable_free);
    auto inner = giz::hugeness_verdict(build(fixtures::presentation({2, 6}, {"NF."}, {{4, {1}}})));
    CHECK_FALSE(inner.not_countably_generated);
    CHECK_FALSE(inner.contains_uncountable_free);
    // A middle outer component with a single fibration class.
    auto one = giz::hugeness_verdict(build(mirrored_middle_outer()));
    CHECK(one.not_countably_generated);
    CHECK_FALSE(one.contains_uncountable_free);
}

TEST_CASE("shape agrees with class count") {
    std::mt19937 rng(41);
    int seen = 0;
    for (int rep = 0; rep < 300; ++rep) {
        support::GenOptions opt;
        opt.max_feathers = 2;
        auto [p, e] = support::random_presentation(rng, opt);
        if (!giz::check_condition_star(e)) continue;
        ++seen;
        CHECK(giz::fv_shape(e).vertex_count == giz::fibration_classes(e));
    }
    CHECK(seen > 10);
}

TEST_CASE("de jonquieres shifts") {
    auto p = fixtures::final_example();
    p.sets[2] = {CycNumber(5, 1)};
    p.sets[6] = {CycNumber(3, 1)};
    giz::canonicalize(p);
    auto a = CycNumber(2, 1);
    auto s2 = giz::jon_shift_action(p, a, 2);
    CHECK(s2.p.set(2) == std::vector<CycNumber>{CycNumber(7, 1)});
    CHECK(s2.p.births.at(6) == CycNumber(2, 1));
    CHECK(s2.unknown_sets == std::set<int>{6, 10});
    CHECK(s2.unknown_births == std::set<int>{10});
    CHECK(s2.p.set(4) == p.set(4));
    CHECK(s2.p.set(8) == p.set(8));
    auto id = giz::jon_shift_action(p, CycNumber(0, 1), 3);
    CHECK(id.exact());
    CHECK(id.p == p);
    auto last = giz::jon_shift_action(p, a, 4);
    CHECK(last.exact());
    CHECK(last.p.births == p.births);
    CHECK(last.p.set(6) == p.set(6));
    CHECK_THROWS_AS(giz::jon_shift_action(p, a, 5), giz::InputError);
    CHECK_THROWS_AS(giz::jon_shift_action(p, a, 1), giz::InputError);
}

TEST_CASE("shift by a then by -a") {
    std::mt19937 rng(43);
    for (int rep = 0; rep < 100; ++rep) {
        auto [p, e] = support::random_presentation(rng);
        int t = std::uniform_int_distribution<int>(2, p.levels() + 1)(rng);
        auto a = CycNumber(std::uniform_int_distribution<int>(1, 5)(rng), 1);
        auto there = giz::jon_shift_action(p, a, t);
        auto back = giz::jon_shift_action(there, -a, t);
        CHECK(back.unknown_sets == there.unknown_sets);
        CHECK(back.unknown_births == there.unknown_births);
        for (int i = 2; i <= p.n(); ++i)
            if (!back.unknown_sets.count(i)) CHECK(back.p.set(i) == p.set(i));
        for (auto& [k, c] : p.births)
            if (!back.unknown_births.count(k)) CHECK(back.p.births.at(k) == c);
    }
}

TEST_CASE("torus action") {
    auto p = fixtures::final_example();
    CHECK(giz::torus_action(p, CycNumber(1, 1), CycNumber(1, 1)) == p);
    CHECK_THROWS_AS(giz::torus_action(p, CycNumber(0, 1), CycNumber(1, 1)), giz::InputError);
    // Inner C_3 of the gap "." is reached through the far step (w/z, z).
    auto one = fixtures::presentation({2, 4}, {"."}, {{3, {1}}});
    auto chars = giz::torus_characters(one);
    auto g = giz::chart_matrices(one)[0];
    CHECK(g.chart.at(3) == giz::kFarStep);
    auto a = CycNumber(2, 1), b = CycNumber(3, 1);
    auto moved = giz::torus_action(one, a, b);
    auto [pe, qe] = chars.at(3);
    CHECK(moved.set(3) == std::vector<CycNumber>{a.pow(pe) * b.pow(qe)});
    std::mt19937 rng(47);
    for (int rep = 0; rep < 50; ++rep) {
        auto [pr, e] = support::random_presentation(rng);
        auto a1 = CycNumber(std::uniform_int_distribution<int>(1, 4)(rng), 1);
        auto b1 = CycNumber(std::uniform_int_distribution<int>(-3, -1)(rng), 1);
        auto a2 = CycNumber(std::uniform_int_distribution<int>(2, 5)(rng), 1);
        auto b2 = CycNumber(std::uniform_int_distribution<int>(1, 3)(rng), 1);
        auto lhs = giz::torus_action(giz::torus_action(pr, a1, b1), a2, b2);
        CHECK(lhs == giz::torus_action(pr, a1 * a2, b1 * b2));
    }
}

TEST_CASE("torus characters of distinct inner components in one gap") {
    std::mt19937 rng(53);
    int pairs = 0;
    for (int rep = 0; rep < 100; ++rep) {
        auto [p, e] = support::random_presentation(rng);
        auto chars = giz::torus_characters(p);
        for (auto& gap : giz::chart_matrices(p))
            for (auto& [i, ai] : gap.chart)
                for (auto& [j, aj] : gap.chart) {
                    if (i >= j || p.is_outer(i) || p.is_outer(j)) continue;
                    auto [pi, qi] = chars.at(i);
                    auto [pj, qj] = chars.at(j);
                    CHECK(pi * qj - pj * qi != 0);
                    ++pairs;
                }
    }
    CHECK(pairs > 20);
}

TEST_CASE("word reduction") {
    auto l = CycNumber(3, 1);
    CHECK(giz::reduce_word({Move::reversion(l), Move::reversion(l, true)}).empty());
    auto merged = giz::reduce_word({Move::fibered("h1"), Move::fibered("h2")});
    REQUIRE(merged.size() == 1);
    CHECK(merged[0].tag == "h2∘h1");
    giz::MoveWord alt{Move::reversion(l), Move::fibered("a"), Move::reversion(CycNumber(1, 1)), Move::fibered("b"),
                      Move::reversion(l, true)};
    CHECK(giz::reduce_word(alt) == alt);
    CHECK(giz::alternates_kinds(alt));
    giz::MoveWord nested{Move::reversion(l), Move::fibered("x"), Move::fibered("y"), Move::reversion(l, true)};
    auto red = giz::reduce_word(nested);
    CHECK(red.size() == 3);
    CHECK(giz::reduce_word(red) == red);
    giz::MoveWord two{Move::reversion(l), Move::reversion(CycNumber(5, 1))};
    CHECK(giz::reduce_word(two) == two);
    CHECK_FALSE(giz::alternates_kinds(two));
}
