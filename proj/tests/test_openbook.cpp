#include <doctest.h>

#include "palf/construct.hpp"
#include "palf/monodromy.hpp"
#include "palf/openbook.hpp"

using namespace palf;

namespace {
std::string path(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }
PALF trefoil_sf() { return construct_palf(load_grid(path("trefoil5.grid")), {Strategy::Flex, false}); }
}  // namespace

TEST_CASE("fixture parsing") {
    auto fx = load_openbook(path("trefoil_openbook.txt"));
    CHECK(fx.page_word == std::vector<int>{1, 2, 3, 1, 4, 2, 3, 4});
    CHECK(fx.names.size() == 4);
    CHECK(fx.convention == "right-to-left");
    // "order d c b a" read right to left applies a first
    CHECK(fx.order == std::vector<int>{0, 1, 2, 3});
    CHECK(genus(fx.page()) == 1);
    CHECK(boundary_components(fx.page()) == 3);

    CHECK_THROWS_AS(parse_openbook("page 1 1\n"), InputError);
    CHECK_THROWS_AS(parse_openbook("page 1 1\nconvention sideways\n"), InputError);
    CHECK_THROWS_AS(parse_openbook("page 1 2 1\nconvention left-to-right\n"), InputError);
    CHECK_THROWS_AS(parse_openbook("page 1 1\ncurve a 1 0\nconvention left-to-right\n"), InputError);
    CHECK_THROWS_AS(parse_openbook("page 1 1\ncurve a 1\norder b\nconvention left-to-right\n"), InputError);
    CHECK_THROWS_AS(parse_openbook("page 1 1\nshelf\nconvention left-to-right\n"), InputError);
}

TEST_CASE("the trefoil fibration matches the open book at homology level") {
    auto fx = load_openbook(path("trefoil_openbook.txt"));
    Identification id;
    auto r = compare(trefoil_sf(), fx, 6, &id);
    for (auto& f : r.failures()) INFO(f);
    CHECK(r.pass());
    REQUIRE(id.found);
    CHECK(id.factorwise);
    CHECK(id.word.size() == 3);

    // the witness conjugates the total monodromies exactly
    auto ours = slide_moves(trefoil_sf());
    IMatrix N = IMatrix::Identity(4, 4);
    auto page = fx.page();
    for (int i : fx.order) N = transvection(page, fx.classes[i]) * N;
    CHECK(IMatrix(id.map * total_monodromy(ours)) == IMatrix(N * id.map));
}

TEST_CASE("a search that is too short fails honestly") {
    auto fx = load_openbook(path("trefoil_openbook.txt"));
    Identification id;
    auto r = compare(trefoil_sf(), fx, 1, &id);
    CHECK(!r.pass());
    CHECK(!id.found);
}

TEST_CASE("mismatched fixtures are rejected") {
    CHECK_THROWS_AS(compare(trefoil_sf(), load_openbook(path("openbook_wrong_page.txt"))), InputError);
    auto fx = load_openbook(path("trefoil_openbook.txt"));
    fx.order.pop_back();
    CHECK_THROWS_AS(compare(trefoil_sf(), fx), InputError);
}

TEST_CASE("slide sequence on the torus family") {
    for (int n = 1; n <= 4; ++n) {
        std::vector<int> xs, os;
        int N = 2 * n + 3;
        for (int r = 0; r < N; ++r) {
            xs.push_back(r);
            os.push_back((r + 2) % N);
        }
        PALF sf = construct_palf(make_grid(xs, os), {Strategy::Flex, false});
        std::vector<SlideStep> steps;
        auto r = slide_sequence(sf, &steps);
        INFO("n = " << n);
        CHECK(r.checks.size() > 3);
        CHECK(steps.size() >= 2);
        CHECK(steps[0].invariant);
        CHECK(steps[1].invariant);
        // the chord word makes C4 and C3 cross, so the swap is refused
        CHECK(!steps.back().error.empty());
    }
}
