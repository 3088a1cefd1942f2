#include "palf/monodromy.hpp"

#include <sstream>

#include "palf/grid.hpp"

namespace palf {

MonodromyFactorization factorization_of(const PALF& p) { return {p.fiber, p.factorization}; }

IMatrix transvection(const RibbonFiber& f, const IVector& c, int power) {
    int k = f.handle_count();
    if (c.size() != k) throw std::invalid_argument("class does not live on this fiber");
    IMatrix om = intersection_form(f);
    IVector oc = om * c;
    return IMatrix::Identity(k, k) + power * c * oc.transpose();
}

IMatrix total_monodromy(const MonodromyFactorization& fac) {
    int k = fac.fiber.handle_count();
    IMatrix m = IMatrix::Identity(k, k);
    for (const auto& c : fac.curves) m = transvection(fac.fiber, c.homology) * m;
    return m;
}

namespace {
void check_slot(const MonodromyFactorization& fac, int i) {
    if (i < 0 || i + 1 >= (int)fac.curves.size())
        throw std::out_of_range("position " + std::to_string(i + 1) + " out of range");
}

Curve twisted(const RibbonFiber& f, const Curve& by, const Curve& c, int power) {
    if (disjoint(f, by, c)) return c;
    IVector h = transvection(f, by.homology, power) * c.homology;
    Curve out;
    out.name = c.name + "'";
    out.homology = h;
    out.embedded = false;
    out.surface_framing = c.surface_framing;
    out.framing = c.framing;
    return out;
}
}  // namespace

MonodromyFactorization hurwitz_left(const MonodromyFactorization& fac, int i) {
    check_slot(fac, i);
    MonodromyFactorization out = fac;
    out.curves[i] = twisted(fac.fiber, fac.curves[i], fac.curves[i + 1], -1);
    out.curves[i + 1] = fac.curves[i];
    return out;
}

MonodromyFactorization hurwitz_right(const MonodromyFactorization& fac, int i) {
    check_slot(fac, i);
    MonodromyFactorization out = fac;
    out.curves[i] = fac.curves[i + 1];
    out.curves[i + 1] = twisted(fac.fiber, fac.curves[i + 1], fac.curves[i], 1);
    return out;
}

MonodromyFactorization commute(const MonodromyFactorization& fac, int i) {
    check_slot(fac, i);
    const Curve& a = fac.curves[i];
    const Curve& b = fac.curves[i + 1];
    if (!disjoint(fac.fiber, a, b))
        throw MoveError(a.name + " and " + b.name + " are not certified disjoint (pairing " +
                        std::to_string(pairing(fac.fiber, a, b)) + ")");
    MonodromyFactorization out = fac;
    std::swap(out.curves[i], out.curves[i + 1]);
    return out;
}

std::vector<ScriptMove> parse_script(const std::string& text) {
    std::vector<ScriptMove> out;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        // several moves may share a line, separated by ';'
        std::istringstream parts(raw);
        std::string part;
        while (std::getline(parts, part, ';')) {
            std::istringstream ls(part);
            std::string op, extra;
            int idx;
            if (!(ls >> op)) continue;
            if ((op != "L" && op != "R" && op != "C") || !(ls >> idx) || (ls >> extra))
                throw InputError(lineno, "expected 'L i', 'R i' or 'C i'");
            out.push_back({op[0], idx, lineno});
        }
    }
    return out;
}

std::string script_text(const std::vector<ScriptMove>& moves) {
    std::string s;
    for (auto& m : moves) s += std::string(1, m.op) + " " + std::to_string(m.index) + "\n";
    return s;
}

MonodromyFactorization apply_move(const MonodromyFactorization& fac, const ScriptMove& m) {
    switch (m.op) {
        case 'L': return hurwitz_left(fac, m.index - 2);
        case 'R': return hurwitz_right(fac, m.index - 1);
        case 'C': return commute(fac, m.index - 1);
    }
    throw std::invalid_argument("unknown move");
}

std::vector<std::string> curve_names(const MonodromyFactorization& fac) {
    std::vector<std::string> out;
    for (auto& c : fac.curves) out.push_back(c.name);
    return out;
}

}  // namespace palf
