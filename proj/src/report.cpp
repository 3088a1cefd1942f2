#include "palf/report.hpp"

namespace palf {

Json document(const std::string& command) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["tool"] = {{"name", "palf"}, {"version", kToolVersion}};
    j["command"] = command;
    return j;
}

Json grid_json(const GridDiagram& g) {
    Json j;
    j["n"] = g.n;
    Json xs = Json::array(), os = Json::array();
    for (int c : g.xs) xs.push_back(c + 1);
    for (int c : g.os) os.push_back(c + 1);
    j["X"] = xs;
    j["O"] = os;
    j["hole"] = g.hole ? Json::array({g.hole->first + 1, g.hole->second + 1}) : Json(nullptr);
    Json fr = Json::array();
    for (auto& [k, v] : g.framing) fr.push_back({{"component", k + 1}, {"framing", v ? Json(*v) : Json("tb-1")}});
    j["framing_requests"] = fr;
    return j;
}

Json invariants_json(const GridDiagram& g) {
    Json j;
    auto cc = corner_census(g);
    j["writhe"] = writhe(g);
    j["corners"] = {{"NW", cc.nw}, {"NE", cc.ne}, {"SW", cc.sw}, {"SE", cc.se}};
    Json cols = Json::array();
    for (int c = 0; c < g.n; ++c)
        cols.push_back({{"column", c + 1}, {"top", corner_name(cc.columns[c].first)}, {"bottom", corner_name(cc.columns[c].second)}});
    j["columns"] = cols;
    auto comps = components(g);
    Json cj = Json::array();
    for (int k = 0; k < (int)comps.size(); ++k) {
        auto li = legendrian_invariants(g, k);
        Json rows = Json::array();
        for (int r : comps[k]) rows.push_back(r + 1);
        cj.push_back({{"component", k + 1},
                      {"rows", rows},
                      {"writhe", li.writhe},
                      {"nw_corners", li.nw_corners},
                      {"tb", li.tb},
                      {"framing", li.framing}});
    }
    j["components"] = cj;
    Json lk = Json::array();
    for (int a = 0; a < (int)comps.size(); ++a)
        for (int b = a + 1; b < (int)comps.size(); ++b)
            lk.push_back({{"components", {a + 1, b + 1}}, {"linking", linking_number(g, a, b)}});
    j["linking"] = lk;
    if (g.hole) {
        Json w = Json::array();
        for (int x : hole_windings(g)) w.push_back(x);
        j["hole_windings"] = w;
    }
    return j;
}

Json fiber_json(const RibbonFiber& f) {
    Json j;
    j["base"] = f.base == Base::Disk ? "disk" : "annulus";
    Json w = Json::array();
    for (int l : f.word) w.push_back(l == kHoleLabel ? Json("h0") : Json(l));
    j["boundary_word"] = w;
    j["boundary_word_text"] = word_string(f.word);
    std::vector<int> cw = canonical_word(f.word, false);
    j["canonical_word"] = cw;
    j["handles"] = f.handle_count();
    j["euler_characteristic"] = euler_characteristic(f);
    j["boundary_components"] = boundary_components(f);
    j["genus"] = genus(f);
    Json basis = Json::array();
    for (int l : f.labels) basis.push_back(l == kHoleLabel ? "h0" : "e" + std::to_string(l));
    j["basis"] = basis;
    j["intersection_form"] = matrix_json(intersection_form(f));
    return j;
}

Json matrix_json(const IMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json r = Json::array();
        for (int k = 0; k < m.cols(); ++k) r.push_back(m(i, k));
        rows.push_back(r);
    }
    return rows;
}

Json curve_json(const Curve& c) {
    Json j;
    j["name"] = c.name;
    Json h = Json::array();
    for (int i = 0; i < c.homology.size(); ++i) h.push_back(c.homology(i));
    j["homology"] = h;
    j["embedded"] = c.embedded;
    Json t = Json::array();
    for (auto [l, s] : c.traversals) t.push_back({{"handle", l == kHoleLabel ? Json("h0") : Json(l)}, {"sign", s}});
    j["traversals"] = t;
    j["surface_framing"] = c.surface_framing ? Json(*c.surface_framing) : Json(nullptr);
    j["framing"] = c.framing ? Json(*c.framing) : Json(nullptr);
    return j;
}

Json palf_json(const PALF& p) {
    Json j;
    j["strategy"] = strategy_name(p.strategy);
    Json lifted = Json::array();
    for (int c : p.lifted) lifted.push_back(c + 1);
    j["lifted_columns"] = lifted;
    j["lift_log"] = p.lift_log;
    j["fiber"] = fiber_json(p.fiber);
    Json fac = Json::array();
    for (auto& c : p.factorization) fac.push_back(curve_json(c));
    Json names = Json::array();
    for (auto& c : p.factorization) names.push_back(c.name);
    j["factorization_order"] = names;
    j["factorization"] = fac;
    return j;
}

Json factorization_json(const MonodromyFactorization& fac) {
    Json j = Json::array();
    for (auto& c : fac.curves) j.push_back(curve_json(c));
    return j;
}

Json report_json(const VerificationReport& r) {
    Json j;
    j["pass"] = r.pass();
    Json cs = Json::array();
    for (auto& c : r.checks) cs.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
    j["checks"] = cs;
    return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace palf
