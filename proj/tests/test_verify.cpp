#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "palf/verify.hpp"

using namespace oracle;
using namespace palf;

namespace {
GridDiagram fixture(const std::string& name) { return load_grid(std::string(FIXTURE_DIR) + "/" + name); }
}  // namespace

TEST_CASE("smith normal form matches determinantal divisors exhaustively") {
    struct Box {
        int r, c, lo, hi;
    };
    long long count = 0;
    for (Box b : {Box{1, 3, -4, 4}, Box{2, 2, -3, 3}, Box{2, 3, -3, 3}, Box{3, 2, -2, 2}, Box{3, 3, -1, 1}})
        each_matrix(b.r, b.c, b.lo, b.hi, [&](const IMatrix& m) {
            ++count;
            if (smith_normal_form(m) != minors_oracle(m)) FAIL("mismatch on\n" << m);
        });
    CHECK(count == 729 + 2401 + 117649 + 15625 + 19683);
}

TEST_CASE("smith normal form on random larger matrices") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> e(-6, 6);
    for (int t = 0; t < 300; ++t) {
        int r = 3 + t % 3, c = 3 + (t / 3) % 3;
        IMatrix m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) m(i, j) = e(rng);
        auto d = smith_normal_form(m);
        CHECK(d == minors_oracle(m));
        for (size_t i = 1; i < d.size(); ++i) CHECK(d[i] % d[i - 1] == 0);
    }
}

TEST_CASE("cokernels") {
    IMatrix a(2, 2);
    a << 2, 0, 0, 3;
    CHECK(cokernel(a).torsion == std::vector<long long>{6});
    CHECK(cokernel(a).free_rank == 0);
    IMatrix b(2, 1);
    b << 2, 4;
    CHECK(cokernel(b).torsion == std::vector<long long>{2});
    CHECK(cokernel(b).free_rank == 1);
    CHECK(cokernel(IMatrix::Zero(3, 0)).free_rank == 3);
    CHECK(cokernel(IMatrix::Identity(2, 2)).str() == "0");
}

TEST_CASE("handlebody expectations") {
    auto t = expectation_for(fixture("trefoil5.grid"), true);
    CHECK(t.ell == 0);
    CHECK(t.m == 1);
    CHECK(t.chi() == 2);
    CHECK(t.framings == std::vector<int>{0});
    auto a = expectation_for(fixture("annulus9.grid"), true);
    CHECK(a.ell == 1);
    CHECK(a.m == 2);
    CHECK(cokernel(a.h1_presentation).free_rank == 0);
    auto sf = expectation_for(fixture("annulus9.grid"), false);
    CHECK(sf.chi() == 0);
    CHECK(cokernel(sf.h1_presentation).free_rank == 1);
}

TEST_CASE("fixture grids verify") {
    for (auto name : {"trefoil5.grid", "figure8.grid", "unknot2.grid", "torus_2_5.grid", "annulus9.grid"})
        for (auto st : {Strategy::Flex, Strategy::Comb, Strategy::Rtl}) {
            auto r = verify_grid(fixture(name), st);
            INFO(name << " " << strategy_name(st));
            for (auto& f : r.failures()) INFO(f);
            CHECK(r.pass());
        }
}

TEST_CASE("a wrong framing request is caught by name") {
    auto r = verify_grid(fixture("trefoil_badframing.grid"), Strategy::Flex);
    CHECK(!r.pass());
    CHECK(r.failures() == std::vector<std::string>{"framing C0"});
}

TEST_CASE("families") {
    CHECK(check_twist_family(1, 8).pass());
    CHECK(check_torus_family(1, 8).pass());
    CHECK_THROWS_AS(twist_grid(9), std::out_of_range);
    CHECK(torus_grid(2).n == 7);
}

TEST_CASE("report bookkeeping") {
    VerificationReport r;
    r.add("a", 1, 1);
    r.add("b", "x", "y");
    r.add_flag("c", true);
    CHECK(!r.pass());
    CHECK(r.failures() == std::vector<std::string>{"b"});
    VerificationReport s;
    s.merge(r, "p ");
    CHECK(s.checks[1].name == "p b");
}
