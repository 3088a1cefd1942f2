#pragma once
#include <string>
#include <vector>

#include "palf/construct.hpp"
#include "palf/fiber.hpp"
#include "palf/grid.hpp"

namespace palf {

struct Check {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct VerificationReport {
    std::vector<Check> checks;
    bool pass() const;
    void add(const std::string& name, const std::string& expected, const std::string& actual);
    void add(const std::string& name, long long expected, long long actual);
    void add_flag(const std::string& name, bool ok, const std::string& detail = "");
    void merge(const VerificationReport& other, const std::string& prefix = "");
    std::vector<std::string> failures() const;
};

// Nonzero diagonal entries d1 | d2 | ... of the Smith normal form.
std::vector<long long> smith_normal_form(const IMatrix& m);

// Z^rows / image(m) as torsion plus free rank.
struct Cokernel {
    std::vector<long long> torsion;  // factors > 1
    int free_rank = 0;
    bool operator==(const Cokernel&) const = default;
    std::string str() const;
};
Cokernel cokernel(const IMatrix& m);

struct HandlebodyExpectation {
    int ell = 0;                 // 1-handles
    int m = 0;                   // 2-handles
    std::vector<int> framings;   // per 2-handle
    IMatrix h1_presentation;     // ell x m, columns = 2-handle attaching words in H1 of the 1-handles
    int chi() const { return 1 - ell + m; }
};
// The Stein handlebody the grid describes: one 1-handle for the hole, one 2-handle per component.
HandlebodyExpectation expectation_for(const GridDiagram& g, bool with_two_handles);

// Columns = vanishing-cycle classes.
IMatrix class_matrix(const PALF& p);

VerificationReport check_total_space(const PALF& p, const HandlebodyExpectation& e);
VerificationReport check_framings(const PALF& p);
VerificationReport check_fiber(const PALF& p);

GridDiagram twist_grid(int s);  // s = 1..8
GridDiagram torus_grid(int n);  // T(2, 2n+1)
VerificationReport check_twist_family(int s_lo, int s_hi);
VerificationReport check_torus_family(int n_lo, int n_hi);
VerificationReport check_translation_principle(const GridDiagram& g);
VerificationReport check_rtl(const GridDiagram& g);

// Everything checkable for one grid and strategy.
VerificationReport verify_grid(const GridDiagram& g, Strategy strategy);

}  // namespace palf
