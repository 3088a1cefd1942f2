#include <doctest.h>

#include <algorithm>

#include "palf/construct.hpp"
#include "palf/verify.hpp"

using namespace palf;

namespace {
GridDiagram fixture(const std::string& name) { return load_grid(std::string(FIXTURE_DIR) + "/" + name); }
using W = std::vector<int>;
}  // namespace

TEST_CASE("strategy names") {
    for (auto s : {Strategy::Comb, Strategy::Flex, Strategy::Rtl}) CHECK(parse_strategy(strategy_name(s)) == s);
    CHECK_THROWS(parse_strategy("zigzag"));
    CHECK(direction_of(Strategy::Rtl) == Direction::RightToLeft);
}

TEST_CASE("basic lifts on the trefoil") {
    std::vector<std::string> log;
    auto L = basic_lifts(fixture("trefoil5.grid"), Direction::LeftToRight, &log);
    CHECK(L == std::vector<char>{1, 1, 1, 1, 0});
    CHECK(log.size() == 4);
    CHECK(log[0] == "column 1: NW corner");
    CHECK(log[2] == "column 3: crosses row 2");
}

TEST_CASE("flex words on the twist family") {
    const std::vector<W> words = {
        {1, 2, 3, 1, 4, 2, 3, 4},
        {1, 3, 2, 4, 5, 3, 1, 4, 2, 5},
        {1, 2, 5, 3, 4, 1, 6, 3, 5, 2, 4, 6},
        {1, 4, 2, 1, 7, 6, 5, 3, 2, 4, 3, 5, 6, 7},
        {1, 2, 4, 5, 6, 7, 8, 3, 1, 8, 7, 6, 5, 4, 2, 3},
        {1, 2, 4, 5, 3, 6, 7, 8, 9, 4, 2, 1, 5, 9, 8, 7, 6, 3},
        {1, 2, 10, 9, 8, 7, 6, 5, 4, 3, 1, 4, 5, 6, 7, 8, 9, 10, 2, 3},
        {1, 5, 2, 3, 6, 1, 11, 10, 9, 8, 7, 4, 3, 2, 5, 6, 4, 7, 8, 9, 10, 11},
    };
    for (int s = 1; s <= 8; ++s) {
        PALF p = construct_palf(twist_grid(s), {Strategy::Flex, false});
        CHECK(p.fiber.word == words[s - 1]);
        CHECK(boundary_components(p.fiber) == s + 2);
        CHECK(genus(p.fiber) == 1);
    }
}

TEST_CASE("comb words") {
    CHECK(construct_palf(fixture("trefoil5.grid"), {Strategy::Comb, false}).fiber.word == W{3, 2, 4, 3, 4, 1, 2, 1});
    auto w2 = construct_palf(twist_grid(2), {Strategy::Comb, false});
    CHECK(w2.fiber.word == W{1, 5, 3, 2, 4, 5, 3, 4, 1, 2});
    CHECK(genus(w2.fiber) == 2);
    auto w3 = construct_palf(twist_grid(3), {Strategy::Comb, false});
    CHECK(boundary_components(w3.fiber) == 1);
    CHECK(genus(w3.fiber) == 3);
}

TEST_CASE("comb lifts a column that blocks a lane") {
    auto g = make_grid({0, 6, 5, 1, 2, 4, 3}, {4, 0, 6, 2, 5, 3, 1});
    PALF p = construct_palf(g, {Strategy::Comb, true});
    CHECK(std::find(p.lift_log.begin(), p.lift_log.end(), "column 3: lane blocked") != p.lift_log.end());
    CHECK(std::find(p.lifted.begin(), p.lifted.end(), 2) != p.lifted.end());
    auto basic = basic_lifts(g, Direction::LeftToRight);
    CHECK(!basic[2]);
}

TEST_CASE("an impossible notch depth names the blocking foot") {
    try {
        construct_palf(fixture("trefoil5.grid"), {Strategy::Flex, true, 0});
        FAIL("expected a construction error");
    } catch (const ConstructError& e) {
        CHECK(e.column == 1);
    }
}

TEST_CASE("the outermost column is never lifted") {
    for (auto name : {"trefoil5.grid", "figure8.grid", "torus_2_5.grid", "annulus9.grid"}) {
        auto g = fixture(name);
        for (auto st : {Strategy::Flex, Strategy::Comb}) {
            auto l = construct_palf(g, {st, true}).lifted;
            CHECK(std::find(l.begin(), l.end(), g.n - 1) == l.end());
        }
        auto r = construct_palf(g, {Strategy::Rtl, true}).lifted;
        CHECK(std::find(r.begin(), r.end(), 0) == r.end());
    }
}

TEST_CASE("factorization layout and framings") {
    PALF p = construct_palf(fixture("trefoil5.grid"));
    REQUIRE(p.factorization.size() == 5);
    CHECK(p.c0_count == 1);
    CHECK(p.factorization[0].name == "C0");
    CHECK(*p.factorization[0].framing == 0);
    std::vector<std::string> names;
    for (auto& c : p.factorization) names.push_back(c.name);
    CHECK(names == std::vector<std::string>{"C0", "C4", "C3", "C2", "C1"});
    for (size_t i = 1; i < p.factorization.size(); ++i) CHECK(*p.factorization[i].framing == -2);

    PALF r = construct_palf(fixture("trefoil5.grid"), {Strategy::Rtl, true});
    CHECK(r.factorization[1].name == "C2");
    CHECK(r.factorization.back().name == "C5");
}

TEST_CASE("every vanishing cycle is homologically essential") {
    for (auto name : {"trefoil5.grid", "figure8.grid", "unknot2.grid", "torus_2_5.grid", "annulus9.grid"})
        for (auto st : {Strategy::Flex, Strategy::Comb, Strategy::Rtl}) {
            PALF p = construct_palf(fixture(name), {st, true});
            for (auto& c : p.factorization) CHECK(!c.homology.isZero());
        }
}

TEST_CASE("annulus construction") {
    PALF p = construct_palf(fixture("annulus9.grid"));
    CHECK(p.base == Base::Annulus);
    CHECK(p.fiber.word == W{1, 5, 8, 3, 3, 7, 4, 6, 2, 5, 1, 6, 4, 7, 8, 2, kHoleLabel, kHoleLabel});
    CHECK(p.c0_count == 2);
    CHECK(p.windings == std::vector<int>{1, 0});
    const Curve& c01 = p.factorization[0];
    CHECK(c01.name == "C01");
    CHECK(std::count_if(c01.traversals.begin(), c01.traversals.end(), [](auto t) { return t.first == kHoleLabel; }) == 1);
    CHECK(*c01.framing == -2);
    CHECK(*p.factorization[1].framing == 0);
}

TEST_CASE("rotated labels undo the rotation") {
    CHECK(rotated_labels({1, 2, 1, 2}, 5) == W{5, 4, 5, 4});
    CHECK(rotated_labels({kHoleLabel, 3, 3, kHoleLabel}, 5) == W{kHoleLabel, 3, 3, kHoleLabel});
    for (auto name : {"trefoil5.grid", "figure8.grid", "unknot2.grid", "annulus9.grid"}) CHECK(rtl_equivalence_check(fixture(name)));
}
