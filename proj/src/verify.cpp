#include "palf/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace palf {

bool VerificationReport::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

void VerificationReport::add(const std::string& name, const std::string& expected, const std::string& actual) {
    checks.push_back({name, expected, actual, expected == actual});
}

void VerificationReport::add(const std::string& name, long long expected, long long actual) {
    add(name, std::to_string(expected), std::to_string(actual));
}

void VerificationReport::add_flag(const std::string& name, bool ok, const std::string& detail) {
    checks.push_back({name, "true", ok ? "true" : (detail.empty() ? "false" : detail), ok});
}

void VerificationReport::merge(const VerificationReport& other, const std::string& prefix) {
    for (auto c : other.checks) {
        c.name = prefix + c.name;
        checks.push_back(c);
    }
}

std::vector<std::string> VerificationReport::failures() const {
    std::vector<std::string> out;
    for (auto& c : checks)
        if (!c.pass) out.push_back(c.name);
    return out;
}

std::vector<long long> smith_normal_form(const IMatrix& m) {
    IMatrix a = m;
    const int R = (int)a.rows(), C = (int)a.cols();
    std::vector<long long> diag;
    for (int t = 0; t < std::min(R, C); ++t) {
        // smallest nonzero entry of the remaining block becomes the pivot
        auto find_pivot = [&](int& pi, int& pj) {
            pi = pj = -1;
            for (int i = t; i < R; ++i)
                for (int j = t; j < C; ++j)
                    if (a(i, j) != 0 && (pi < 0 || std::llabs(a(i, j)) < std::llabs(a(pi, pj)))) pi = i, pj = j;
        };
        int pi, pj;
        find_pivot(pi, pj);
        if (pi < 0) break;
        while (true) {
            a.row(t).swap(a.row(pi));
            a.col(t).swap(a.col(pj));
            bool clean = true;
            for (int i = t + 1; i < R; ++i) {
                long long q = a(i, t) / a(t, t);
                if (q) a.row(i) -= q * a.row(t);
                if (a(i, t)) clean = false;
            }
            for (int j = t + 1; j < C; ++j) {
                long long q = a(t, j) / a(t, t);
                if (q) a.col(j) -= q * a.col(t);
                if (a(t, j)) clean = false;
            }
            if (clean) {
                int bi = -1;
                for (int i = t + 1; i < R && bi < 0; ++i)
                    for (int j = t + 1; j < C; ++j)
                        if (a(i, j) % a(t, t)) {
                            bi = i;
                            break;
                        }
                if (bi < 0) break;
                a.row(t) += a.row(bi);
                pi = t, pj = t;
                for (int j = t + 1; j < C; ++j)
                    if (a(t, j) != 0 && std::llabs(a(t, j)) < std::llabs(a(pi, pj))) pi = t, pj = j;
                continue;
            }
            // leftovers are smaller than the pivot; move the smallest into place
            pi = t, pj = t;
            for (int i = t + 1; i < R; ++i)
                if (a(i, t) != 0 && std::llabs(a(i, t)) < std::llabs(a(pi, pj))) pi = i, pj = t;
            for (int j = t + 1; j < C; ++j)
                if (a(t, j) != 0 && std::llabs(a(t, j)) < std::llabs(a(pi, pj))) pi = t, pj = j;
        }
        diag.push_back(std::llabs(a(t, t)));
    }
    return diag;
}

std::string Cokernel::str() const {
    std::string s;
    for (long long d : torsion) s += (s.empty() ? "" : " + ") + std::string("Z/") + std::to_string(d);
    for (int i = 0; i < free_rank; ++i) s += (s.empty() ? "" : " + ") + std::string("Z");
    return s.empty() ? "0" : s;
}

Cokernel cokernel(const IMatrix& m) {
    auto d = smith_normal_form(m);
    Cokernel c;
    for (long long x : d)
        if (x > 1) c.torsion.push_back(x);
    c.free_rank = (int)m.rows() - (int)d.size();
    return c;
}

HandlebodyExpectation expectation_for(const GridDiagram& g, bool with_two_handles) {
    HandlebodyExpectation e;
    e.ell = g.hole ? 1 : 0;
    int nc = (int)components(g).size();
    e.m = with_two_handles ? nc : 0;
    auto w = hole_windings(g);
    e.h1_presentation = IMatrix::Zero(e.ell, e.m);
    for (int k = 0; k < e.m; ++k) {
        e.framings.push_back(legendrian_invariants(g, k).framing);
        if (e.ell) e.h1_presentation(0, k) = w[k];
    }
    return e;
}

IMatrix class_matrix(const PALF& p) {
    IMatrix m(p.fiber.handle_count(), (int)p.factorization.size());
    for (int j = 0; j < (int)p.factorization.size(); ++j) m.col(j) = p.factorization[j].homology;
    return m;
}

VerificationReport check_total_space(const PALF& p, const HandlebodyExpectation& e) {
    VerificationReport r;
    int chi_x = euler_characteristic(p.fiber) + (int)p.factorization.size();
    r.add("euler characteristic", e.chi(), chi_x);
    r.add("first homology", cokernel(e.h1_presentation).str(), cokernel(class_matrix(p)).str());
    std::string zero;
    for (auto& c : p.factorization)
        if (c.homology.isZero()) zero += (zero.empty() ? "" : ",") + c.name;
    r.add_flag("allowability", zero.empty(), "null-homologous " + zero);
    return r;
}

VerificationReport check_framings(const PALF& p) {
    VerificationReport r;
    for (int i = 0; i < (int)p.factorization.size(); ++i) {
        const Curve& c = p.factorization[i];
        if (i < p.c0_count) {
            auto li = legendrian_invariants(p.grid, i);
            r.add("surface framing " + c.name, li.tb, c.surface_framing.value_or(0));
            r.add("framing " + c.name, li.framing, c.framing.value_or(0));
        } else {
            r.add("surface framing " + c.name, -1, c.surface_framing.value_or(0));
            r.add("framing " + c.name, -2, c.framing.value_or(0));
        }
    }
    return r;
}

VerificationReport check_fiber(const PALF& p) {
    VerificationReport r;
    int chi = euler_characteristic(p.fiber), b = boundary_components(p.fiber), g = genus(p.fiber);
    r.add("fiber euler characteristic", 1 - (int)p.fiber.labels.size(), chi);
    r.add("2 - 2g - b", chi, 2 - 2 * g - b);
    IMatrix om = intersection_form(p.fiber);
    r.add_flag("intersection form antisymmetric", om == IMatrix(-om.transpose()));
    return r;
}

namespace {
std::string bkg(const PALF& p) {
    std::ostringstream o;
    o << '(' << boundary_components(p.fiber) << ',' << p.fiber.handle_count() << ',' << genus(p.fiber) << ')';
    return o.str();
}
std::string bkg(int b, int k, int g) {
    std::ostringstream o;
    o << '(' << b << ',' << k << ',' << g << ')';
    return o.str();
}
}  // namespace

VerificationReport check_twist_family(int s_lo, int s_hi) {
    VerificationReport r;
    for (int s = s_lo; s <= s_hi; ++s) {
        GridDiagram g = twist_grid(s);
        std::string name = "W" + std::to_string(s);
        try {
            r.add(name + " flex (b,k,g)", bkg(s + 2, s + 3, 1), bkg(construct_palf(g, {Strategy::Flex, false})));
            if (s == 2) r.add(name + " comb (b,k,g)", bkg(2, 5, 2), bkg(construct_palf(g, {Strategy::Comb, false})));
            if (s == 3) r.add(name + " comb (b,k,g)", bkg(1, 6, 3), bkg(construct_palf(g, {Strategy::Comb, false})));
        } catch (const std::exception& ex) {
            r.add_flag(name + " construction", false, ex.what());
        }
    }
    return r;
}

VerificationReport check_torus_family(int n_lo, int n_hi) {
    VerificationReport r;
    for (int n = n_lo; n <= n_hi; ++n) {
        GridDiagram g = torus_grid(n);
        std::string name = "T(2," + std::to_string(2 * n + 1) + ")";
        try {
            r.add(name + " flex (b,k,g)", bkg(2 * n + 1, 2 * n + 2, 1), bkg(construct_palf(g, {Strategy::Flex, false})));
            r.add(name + " tb", 2 * n - 1, legendrian_invariants(g, 0).tb);
        } catch (const std::exception& ex) {
            r.add_flag(name + " construction", false, ex.what());
        }
    }
    return r;
}

VerificationReport check_translation_principle(const GridDiagram& g) {
    VerificationReport r;
    PALF ref = construct_palf(g, {Strategy::Flex, false});
    for (int k = 1; k < g.n; ++k) {
        GridDiagram t;
        try {
            t = vertical_translate(g, k);
        } catch (const std::invalid_argument&) {
            continue;  // the hole blocks this shift
        }
        std::string name = "translation " + std::to_string(k);
        try {
            PALF p = construct_palf(t, {Strategy::Flex, false});
            r.add(name + " word", word_string(min_rotation(ref.fiber.word)), word_string(min_rotation(p.fiber.word)));
            r.add(name + " (b,k,g)", bkg(ref), bkg(p));
        } catch (const std::exception& ex) {
            r.add_flag(name + " construction", false, ex.what());
        }
    }
    return r;
}

VerificationReport check_rtl(const GridDiagram& g) {
    VerificationReport r;
    try {
        PALF a = construct_palf(g, {Strategy::Flex, false});
        PALF b = construct_palf(rotate180(g), {Strategy::Rtl, false});
        r.add("rtl on rotated grid", word_string(min_rotation(a.fiber.word)),
              word_string(min_rotation(rotated_labels(b.fiber.word, g.n))));
    } catch (const std::exception& ex) {
        r.add_flag("rtl on rotated grid", false, ex.what());
    }
    return r;
}

VerificationReport verify_grid(const GridDiagram& g, Strategy strategy) {
    VerificationReport r;
    PALF p = construct_palf(g, {strategy, true});
    PALF sf = construct_palf(g, {strategy, false});
    r.merge(check_fiber(p));
    r.merge(check_total_space(p, expectation_for(g, true)), "P ");
    r.merge(check_total_space(sf, expectation_for(g, false)), "SF ");
    r.merge(check_framings(p));
    if (strategy == Strategy::Flex) {
        r.merge(check_translation_principle(g));
        r.merge(check_rtl(g));
    }
    return r;
}

}  // namespace palf
