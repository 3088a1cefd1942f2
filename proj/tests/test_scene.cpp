#include <doctest.h>

#include <algorithm>

#include "palf/construct.hpp"
#include "palf/scene.hpp"

using namespace palf;

namespace {
GridDiagram fixture(const std::string& name) { return load_grid(std::string(FIXTURE_DIR) + "/" + name); }

Scene rooted(const GridDiagram& g, Direction dir = Direction::LeftToRight) {
    auto lifted = basic_lifts(g, dir);
    Base base = g.hole ? Base::Annulus : Base::Disk;
    return with_root(build_scene(g, lifted, dir, base), 0);
}

std::vector<int> word_from_first_paths(const Scene& s) {
    std::vector<Notch> chosen;
    std::vector<int> feet;
    for (int f = 0; f < (int)s.feet.size(); ++f) {
        auto ps = foot_paths(s, f, 6);
        REQUIRE(!ps.empty());
        chosen.push_back(ps.front());
        feet.push_back(f);
    }
    std::vector<const Notch*> ptr;
    for (auto& n : chosen) ptr.push_back(&n);
    return boundary_word(s, order_feet(s, feet, ptr));
}
}  // namespace

TEST_CASE("lattice embedding") {
    CHECK(lattice(0, 0) == Point{2, -2});
    CHECK(lattice(3, 1) == Point{8, -4});
}

TEST_CASE("unknot scene gives a single band") {
    auto s = rooted(fixture("unknot2.grid"));
    CHECK(s.feet.size() == 2);
    CHECK(s.lifted[0]);
    CHECK(!s.lifted[1]);
    CHECK(word_from_first_paths(s) == std::vector<int>{1, 1});
}

TEST_CASE("trefoil scene") {
    auto g = fixture("trefoil5.grid");
    auto s = rooted(g);
    int lifted = (int)std::count(s.lifted.begin(), s.lifted.end(), 1);
    CHECK(lifted == 4);
    CHECK(!s.lifted[g.n - 1]);
    CHECK(s.feet.size() == 8);
    CHECK(s.outer_port_count() > 0);
    for (int f = 0; f < (int)s.feet.size(); ++f) {
        CHECK(reachable(s, f, 6));
        for (auto& n : foot_paths(s, f, 6)) CHECK(self_ok(s, n));
    }
}

TEST_CASE("notch order is antisymmetric") {
    auto s = rooted(fixture("trefoil5.grid"));
    std::vector<Notch> first;
    for (int f = 0; f < (int)s.feet.size(); ++f) first.push_back(foot_paths(s, f, 6).front());
    for (size_t a = 0; a < first.size(); ++a)
        for (size_t b = 0; b < first.size(); ++b) {
            if (a == b) continue;
            auto ab = notch_order(s, first[a], first[b]);
            auto ba = notch_order(s, first[b], first[a]);
            CHECK(ab.has_value() == ba.has_value());
            if (ab && ba) CHECK(*ab == -*ba);
        }
}

TEST_CASE("attach_handle") {
    auto g = fixture("trefoil5.grid");
    auto s = rooted(g);
    std::string note;
    int c = int(std::find(s.lifted.begin(), s.lifted.end(), 0) - s.lifted.begin());
    REQUIRE(c < g.n);
    auto t = attach_handle(s, c, &note);
    CHECK(t.feet.size() == s.feet.size() + 2);
    CHECK(t.root_gap == s.root_gap);
    if (c != g.n - 1) CHECK(note.empty());
    attach_handle(s, g.n - 1, &note);
    CHECK(note.find("never") != std::string::npos);
    CHECK_THROWS_AS(attach_handle(s, g.n, &note), std::out_of_range);
}

TEST_CASE("root placement") {
    auto s = build_scene(fixture("trefoil5.grid"), basic_lifts(fixture("trefoil5.grid"), Direction::LeftToRight),
                         Direction::LeftToRight, Base::Disk);
    CHECK_THROWS_AS(with_root(s, -1), std::out_of_range);
    CHECK_THROWS_AS(with_root(s, s.outer_port_count() + 1), std::out_of_range);
    CHECK(with_root(s, s.outer_port_count()).root_gap == s.outer_port_count());
}

TEST_CASE("annulus scene") {
    auto a = fixture("annulus9.grid");
    CHECK_THROWS_AS(build_scene(fixture("trefoil5.grid"), std::vector<char>(5, 0), Direction::LeftToRight, Base::Annulus), InputError);
    auto s = rooted(a);
    CHECK(s.base == Base::Annulus);
    bool hole = false, cut = false;
    for (auto& seg : s.segments) {
        hole |= seg.e.kind == EdgeKind::Hole;
        cut |= seg.e.kind == EdgeKind::Cut;
    }
    CHECK(hole);
    CHECK(cut);
}

TEST_CASE("hole ray goes to the nearer border and mirrors under rotation") {
    auto a = fixture("annulus9.grid");  // hole in row 2 of 9
    CHECK(hole_ray(a, Direction::LeftToRight).up);
    CHECK(hole_ray(a, Direction::LeftToRight).right);
    auto r = rotate180(a);
    CHECK(!hole_ray(r, Direction::RightToLeft).up);
    CHECK(!hole_ray(r, Direction::RightToLeft).right);
    auto cs = components(a);
    for (size_t k = 0; k < cs.size(); ++k) {
        int wa = 0, wr = 0;
        for (int row : cs[k])
            if (auto w = hole_crossing(a, row, Direction::LeftToRight)) wa += *w;
        for (int row : cs[k])
            if (auto w = hole_crossing(r, a.n - 1 - row, Direction::RightToLeft)) wr += *w;
        CHECK(wa == wr);
    }
}
