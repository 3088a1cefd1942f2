// One line per acceptance criterion; exits 1 if any criterion fails.
#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "oracles.hpp"
#include "palf/construct.hpp"
#include "palf/monodromy.hpp"
#include "palf/openbook.hpp"
#include "palf/verify.hpp"

using namespace palf;

namespace {

GridDiagram fixture(const std::string& name) { return load_grid(std::string(FIXTURE_DIR) + "/" + name); }

int failures = 0;

void line(int id, bool ok, const std::string& what) {
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << id << ": " << what << std::endl;
    failures += !ok;
}

std::string first_failure(const VerificationReport& r) {
    for (auto& c : r.checks)
        if (!c.pass) return c.name + " (expected " + c.expected + ", got " + c.actual + ")";
    return "";
}

std::string run(const std::string& cmd) {
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return out;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    pclose(p);
    return out;
}

void criterion1() {
    PALF p = construct_palf(fixture("trefoil5.grid"), {Strategy::Flex, false});
    auto got = canonical_word(p.fiber.word, true);
    bool ok = got == canonical_word({2, 3, 1, 4, 2, 3, 4, 1}, true);
    line(1, ok, "trefoil flex word " + word_string(p.fiber.word) + ", canonical " + word_string(got));
}

void criterion2() {
    auto g = fixture("trefoil5.grid");
    auto li = legendrian_invariants(g, 0);
    PALF p = construct_palf(g);
    bool ci = true;
    for (size_t i = p.c0_count; i < p.factorization.size(); ++i) ci &= p.factorization[i].framing == -2;
    bool ok = li.writhe == 3 && li.nw_corners == 2 && li.tb == 1 && p.factorization[0].framing == 0 && ci;
    std::ostringstream o;
    o << "writhe " << li.writhe << ", NW " << li.nw_corners << ", tb " << li.tb << ", C0 framing " << *p.factorization[0].framing
      << ", C_i framing -2: " << (ci ? "yes" : "no");
    line(2, ok, o.str());
}

void criterion3() {
    auto r = check_twist_family(1, 8);
    line(3, r.pass(), r.pass() ? "W1..W8 flex (s+2,s+3,1), W2 comb (2,5,2), W3 comb (1,6,3)" : first_failure(r));
}

void criterion4() {
    auto r = check_torus_family(1, 8);
    line(4, r.pass(), r.pass() ? "T(2,3)..T(2,17) flex (2n+1,2n+2,1), tb 2n-1" : first_failure(r));
}

const char* kFixtures[] = {"trefoil5.grid", "figure8.grid", "unknot2.grid", "torus_2_5.grid", "annulus9.grid"};

void criterion5() {
    VerificationReport all;
    for (auto name : kFixtures) {
        auto g = fixture(name);
        all.merge(check_total_space(construct_palf(g), expectation_for(g, true)), std::string(name) + " ");
    }
    line(5, all.pass(), all.pass() ? "chi and H1 match the handlebody on all 5 fixtures" : first_failure(all));
}

void criterion6() {
    VerificationReport all;
    for (auto name : kFixtures) {
        auto g = fixture(name);
        PALF sf = construct_palf(g, {Strategy::Flex, false});
        if (g.hole) {
            // the annulus base gives S1 x D3, not D4
            all.merge(check_total_space(sf, expectation_for(g, false)), std::string(name) + " ");
            continue;
        }
        all.add(std::string(name) + " chi", 1, euler_characteristic(sf.fiber) + (long long)sf.factorization.size());
        all.add(std::string(name) + " H1", "0", cokernel(class_matrix(sf)).str());
    }
    for (int s = 1; s <= 8; ++s) {
        PALF sf = construct_palf(twist_grid(s), {Strategy::Flex, false});
        all.add("W" + std::to_string(s) + " chi", 1, euler_characteristic(sf.fiber) + (long long)sf.factorization.size());
        all.add("W" + std::to_string(s) + " H1", "0", cokernel(class_matrix(sf)).str());
    }
    line(6, all.pass(),
         all.pass() ? "every disk SF has chi 1 and H1 0; the annulus SF has chi 0 and H1 Z (S1 x D3)" : first_failure(all));
}

void criterion7() {
    VerificationReport all;
    std::string detail;
    for (int n = 1; n <= 4; ++n) {
        PALF sf = construct_palf(torus_grid(n), {Strategy::Flex, false});
        std::vector<SlideStep> steps;
        auto r = slide_sequence(sf, &steps);
        all.merge(r, "T(2," + std::to_string(2 * n + 1) + ") ");
        if (n == 1)
            for (auto& s : steps) {
                detail += " " + s.move + (s.error.empty() ? (s.invariant ? " ok;" : " changed monodromy;") : " refused;");
            }
    }
    line(7, all.pass(), all.pass() ? "slide then swap for n = 1..4" : "trefoil:" + detail + " first failure " + first_failure(all));
}

void criterion8() {
    VerificationReport all;
    for (auto name : {"trefoil5.grid", "figure8.grid"}) all.merge(check_translation_principle(fixture(name)), std::string(name) + " ");
    line(8, all.pass(), all.pass() ? std::to_string(all.checks.size() / 2) + " translations agree in word and (b,k,g)" : first_failure(all));
}

void criterion9() {
    VerificationReport all;
    for (auto name : {"trefoil5.grid", "figure8.grid", "unknot2.grid"}) {
        auto g = fixture(name);
        all.merge(check_rtl(g), std::string(name) + " ");
        PALF a = construct_palf(g, {Strategy::Flex, false});
        PALF b = construct_palf(rotate180(g), {Strategy::Rtl, false});
        all.add(std::string(name) + " canonical", word_string(canonical_word(a.fiber.word, true)),
                word_string(canonical_word(b.fiber.word, true)));
    }
    line(9, all.pass(), all.pass() ? "rtl on the rotated grid gives the flex word after relabeling" : first_failure(all));
}

void criterion10() {
    using namespace oracle;
    std::string bad;
    long long words = 0;
    for (int k = 1; k <= 8 && bad.empty(); ++k)
        each_matching(k, [&](const std::vector<int>& w) {
            ++words;
            if (bad.empty() && boundary_components(w) != boundary_oracle(w)) bad = "boundary on " + word_string(w);
        });
    long long mats = 0;
    struct Box {
        int r, c, lo, hi;
    };
    for (Box b : {Box{2, 2, -3, 3}, Box{2, 3, -3, 3}, Box{3, 3, -1, 1}})
        each_matrix(b.r, b.c, b.lo, b.hi, [&](const IMatrix& m) {
            ++mats;
            if (bad.empty() && smith_normal_form(m) != minors_oracle(m)) bad = "smith normal form";
        });
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coef(-3, 3);
    int twists = 0, slides = 0;
    for (int t = 0; t < 300 && bad.empty(); ++t) {
        int k = 2 + t % 7;
        auto f = from_boundary_word(random_word(rng, k));
        IMatrix om = intersection_form(f);
        IVector c(k);
        for (int i = 0; i < k; ++i) c(i) = coef(rng);
        IMatrix tau = transvection(f, c);
        ++twists;
        if (IMatrix(tau.transpose() * om * tau) != om) bad = "transvection on " + word_string(f.word);
        const auto& w = f.word;
        for (size_t p = 0; p + 1 < w.size(); ++p) {
            if (w[p] == w[p + 1]) continue;
            auto r = slide_handle_foot(f, w[p], w[p + 1]);
            ++slides;
            if (euler_characteristic(r.fiber) != euler_characteristic(f) || boundary_components(r.fiber) != boundary_components(f) ||
                genus(r.fiber) != genus(f))
                bad = "slide on " + word_string(w);
        }
    }
    std::ostringstream o;
    o << words << " chord words, " << mats << " matrices, " << twists << " transvections, " << slides << " slides";
    line(10, bad.empty(), bad.empty() ? o.str() : bad);
}

void criterion11() {
    const std::string cli = CLI_PATH;
    const std::string fx = FIXTURE_DIR;
    std::vector<std::string> cmds = {
        cli + " construct " + fx + "/trefoil5.grid",
        cli + " construct " + fx + "/annulus9.grid --strategy comb",
        cli + " verify " + fx + "/trefoil5.grid",
        cli + " verify --families s=1..8,n=1..8",
    };
    bool ok = true;
    for (auto& c : cmds) {
        std::string a = run(c), b = run(c);
        ok &= !a.empty() && a == b;
    }
    line(11, ok, "repeated construct/verify runs are byte-identical (" + std::to_string(cmds.size()) + " commands)");
}

}  // namespace

int main() {
    auto t0 = std::chrono::steady_clock::now();
    for (auto fn : {criterion1, criterion2, criterion3, criterion4, criterion5, criterion6, criterion7, criterion8, criterion9,
                    criterion10, criterion11}) {
        try {
            fn();
        } catch (const std::exception& e) {
            std::cout << "FAIL  exception: " << e.what() << std::endl;
            ++failures;
        }
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << failures << " of 11 criteria failed, " << dt << " s" << std::endl;
    return failures ? 1 : 0;
}
