#include "palf/grid.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace palf {

InputError::InputError(int line, const std::string& msg)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg), line(line) {}

const char* corner_name(Corner c) {
    switch (c) {
        case Corner::NW: return "NW";
        case Corner::NE: return "NE";
        case Corner::SW: return "SW";
        case Corner::SE: return "SE";
    }
    return "?";
}

namespace {

void check_perm(const std::vector<int>& v, int n, const char* what, int line) {
    std::vector<int> seen(n, 0);
    for (int c : v) {
        if (c < 0 || c >= n) throw InputError(line, std::string(what) + " column out of range");
        if (seen[c]++) throw InputError(line, std::string(what) + " row is not a permutation");
    }
}

void check_hole(const GridDiagram& g, int line) {
    if (!g.hole) return;
    auto [hr, hc] = *g.hole;
    if (hr < 0 || hr >= g.n || hc < 0 || hc >= g.n) throw InputError(line, "hole cell out of range");
    Span h = horizontal_span(g, hr);
    Span v = vertical_span(g, hc);
    if (h.lo <= hc && hc <= h.hi) throw InputError(line, "hole cell meets the horizontal segment of row " + std::to_string(hr + 1));
    if (v.lo <= hr && hr <= v.hi) throw InputError(line, "hole cell meets the vertical segment of column " + std::to_string(hc + 1));
}

}  // namespace

void validate(const GridDiagram& g) {
    if (g.n < 2) throw InputError(0, "grid size must be at least 2");
    if ((int)g.xs.size() != g.n || (int)g.os.size() != g.n) throw InputError(0, "marker rows have wrong length");
    check_perm(g.xs, g.n, "X", 0);
    check_perm(g.os, g.n, "O", 0);
    for (int r = 0; r < g.n; ++r)
        if (g.xs[r] == g.os[r]) throw InputError(0, "X/O collision row " + std::to_string(r + 1));
    check_hole(g, 0);
}

GridDiagram make_grid(std::vector<int> xs, std::vector<int> os, std::optional<Cell> hole) {
    GridDiagram g;
    g.n = (int)xs.size();
    g.xs = std::move(xs);
    g.os = std::move(os);
    g.hole = hole;
    validate(g);
    return g;
}

GridDiagram parse_grid(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    GridDiagram g;
    bool have_n = false, have_x = false, have_o = false;
    int hole_line = 0;
    std::vector<std::pair<int, std::string>> framing_lines;

    auto read_row = [&](std::istringstream& ls, const char* what) {
        std::vector<int> v;
        std::string tok;
        while (ls >> tok) {
            try {
                size_t used = 0;
                int c = std::stoi(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
                v.push_back(c - 1);
            } catch (const std::logic_error&) {
                throw InputError(lineno, std::string("bad ") + what + " entry '" + tok + "'");
            }
        }
        if ((int)v.size() != g.n)
            throw InputError(lineno, std::string(what) + " row has " + std::to_string(v.size()) + " entries, expected " + std::to_string(g.n));
        check_perm(v, g.n, what, lineno);
        return v;
    };

    int o_line = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        auto first = raw.find_first_not_of(" \t");
        if (first == std::string::npos || raw[first] == '#') continue;
        std::istringstream ls(raw);
        std::string key;
        ls >> key;
        if (!have_n) {
            if (key != "grid") throw InputError(lineno, "expected header 'grid <n>'");
            std::string extra;
            if (!(ls >> g.n) || (ls >> extra)) throw InputError(lineno, "malformed header");
            if (g.n < 2) throw InputError(lineno, "grid size must be at least 2");
            have_n = true;
        } else if (key == "X") {
            if (have_x) throw InputError(lineno, "duplicate X row");
            g.xs = read_row(ls, "X");
            have_x = true;
        } else if (key == "O") {
            if (!have_x) throw InputError(lineno, "O row before X row");
            if (have_o) throw InputError(lineno, "duplicate O row");
            g.os = read_row(ls, "O");
            have_o = true;
            o_line = lineno;
        } else if (key == "hole") {
            int r, c;
            std::string extra;
            if (!(ls >> r >> c) || (ls >> extra)) throw InputError(lineno, "malformed hole line");
            if (g.hole) throw InputError(lineno, "duplicate hole");
            g.hole = Cell{r - 1, c - 1};
            hole_line = lineno;
        } else if (key == "framing") {
            int comp;
            std::string val, extra;
            if (!(ls >> comp >> val) || (ls >> extra)) throw InputError(lineno, "malformed framing line");
            if (comp < 1) throw InputError(lineno, "framing component must be positive");
            std::optional<int> f;
            if (val != "tb-1") {
                try {
                    size_t used = 0;
                    f = std::stoi(val, &used);
                    if (used != val.size()) throw std::invalid_argument(val);
                } catch (const std::logic_error&) {
                    throw InputError(lineno, "framing must be an integer or tb-1");
                }
            }
            if (g.framing.count(comp - 1)) throw InputError(lineno, "duplicate framing for component " + std::to_string(comp));
            g.framing[comp - 1] = f;
            framing_lines.emplace_back(lineno, std::to_string(comp));
        } else {
            throw InputError(lineno, "unknown directive '" + key + "'");
        }
    }
    if (!have_n) throw InputError(lineno, "missing header 'grid <n>'");
    if (!have_x || !have_o) throw InputError(lineno, "missing X or O row");
    for (int r = 0; r < g.n; ++r)
        if (g.xs[r] == g.os[r]) throw InputError(o_line, "X/O collision row " + std::to_string(r + 1));
    check_hole(g, hole_line);
    int ncomp = (int)components(g).size();
    for (auto& [ln, comp] : framing_lines)
        if (std::stoi(comp) > ncomp) throw InputError(ln, "framing for nonexistent component " + comp);
    return g;
}

GridDiagram load_grid(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw InputError(0, "cannot read " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_grid(ss.str());
}

std::string to_text(const GridDiagram& g) {
    std::ostringstream o;
    o << "grid " << g.n << "\nX";
    for (int c : g.xs) o << ' ' << c + 1;
    o << "\nO";
    for (int c : g.os) o << ' ' << c + 1;
    o << '\n';
    if (g.hole) o << "hole " << g.hole->first + 1 << ' ' << g.hole->second + 1 << '\n';
    for (auto& [k, v] : g.framing) o << "framing " << k + 1 << ' ' << (v ? std::to_string(*v) : "tb-1") << '\n';
    return o.str();
}

int x_row(const GridDiagram& g, int col) {
    return int(std::find(g.xs.begin(), g.xs.end(), col) - g.xs.begin());
}
int o_row(const GridDiagram& g, int col) {
    return int(std::find(g.os.begin(), g.os.end(), col) - g.os.begin());
}

Span vertical_span(const GridDiagram& g, int col) {
    int a = x_row(g, col), b = o_row(g, col);
    return {std::min(a, b), std::max(a, b)};
}
Span horizontal_span(const GridDiagram& g, int row) {
    return {std::min(g.xs[row], g.os[row]), std::max(g.xs[row], g.os[row])};
}

bool crosses(const GridDiagram& g, int col, int row) {
    Span v = vertical_span(g, col), h = horizontal_span(g, row);
    return v.lo < row && row < v.hi && h.lo < col && col < h.hi;
}

std::vector<std::vector<int>> components(const GridDiagram& g) {
    std::vector<int> seen(g.n, 0);
    std::vector<std::vector<int>> out;
    for (int r0 = 0; r0 < g.n; ++r0) {
        if (seen[r0]) continue;
        std::vector<int> cyc;
        for (int r = r0; !seen[r]; r = x_row(g, g.os[r])) {
            seen[r] = 1;
            cyc.push_back(r);
        }
        out.push_back(cyc);
    }
    return out;
}

std::vector<int> component_of_row(const GridDiagram& g) {
    std::vector<int> out(g.n, -1);
    auto cs = components(g);
    for (size_t k = 0; k < cs.size(); ++k)
        for (int r : cs[k]) out[r] = (int)k;
    return out;
}

std::vector<int> component_of_col(const GridDiagram& g) {
    auto rc = component_of_row(g);
    std::vector<int> out(g.n);
    for (int r = 0; r < g.n; ++r) out[g.os[r]] = rc[r];
    return out;
}

namespace {
CornerCensus census_impl(const GridDiagram& g, int component) {
    CornerCensus cc;
    auto cc_of = component_of_col(g);
    for (int c = 0; c < g.n; ++c) {
        Span v = vertical_span(g, c);
        auto other = [&](int r) { return g.xs[r] == c ? g.os[r] : g.xs[r]; };
        Corner top = other(v.lo) > c ? Corner::NW : Corner::NE;
        Corner bot = other(v.hi) > c ? Corner::SW : Corner::SE;
        cc.columns.emplace_back(top, bot);
        if (component >= 0 && cc_of[c] != component) continue;
        (top == Corner::NW ? cc.nw : cc.ne)++;
        (bot == Corner::SW ? cc.sw : cc.se)++;
    }
    return cc;
}
}  // namespace

CornerCensus corner_census(const GridDiagram& g) { return census_impl(g, -1); }
CornerCensus corner_census(const GridDiagram& g, int component) { return census_impl(g, component); }

int crossing_sign(const GridDiagram& g, int col, int row) {
    // y axis up: the vertical runs O -> X, the horizontal X -> O
    int vdir = x_row(g, col) < o_row(g, col) ? 1 : -1;
    int hdir = g.os[row] > g.xs[row] ? 1 : -1;
    return -vdir * hdir > 0 ? 1 : -1;
}

namespace {
int writhe_between(const GridDiagram& g, int over, int under) {
    auto cc = component_of_col(g);
    auto rc = component_of_row(g);
    int w = 0;
    for (int c = 0; c < g.n; ++c)
        for (int r = 0; r < g.n; ++r) {
            if (!crosses(g, c, r)) continue;
            if (over >= 0 && cc[c] != over) continue;
            if (under >= 0 && rc[r] != under) continue;
            w += crossing_sign(g, c, r);
        }
    return w;
}
}  // namespace

int writhe(const GridDiagram& g) { return writhe_between(g, -1, -1); }

int self_writhe(const GridDiagram& g, int component) { return writhe_between(g, component, component); }

int linking_number(const GridDiagram& g, int a, int b) {
    return (writhe_between(g, a, b) + writhe_between(g, b, a)) / 2;
}

LegendrianInvariants legendrian_invariants(const GridDiagram& g, int component) {
    int nc = (int)components(g).size();
    if (component < 0 || component >= nc) throw std::out_of_range("invalid component index " + std::to_string(component + 1));
    LegendrianInvariants li;
    li.writhe = self_writhe(g, component);
    li.nw_corners = corner_census(g, component).nw;
    li.tb = li.writhe - li.nw_corners;
    auto it = g.framing.find(component);
    li.framing = (it != g.framing.end() && it->second) ? *it->second : li.tb - 1;
    return li;
}

std::vector<std::vector<Cell>> corner_loops(const GridDiagram& g) {
    std::vector<std::vector<Cell>> out;
    for (auto& cyc : components(g)) {
        std::vector<Cell> pts;
        for (int r : cyc) {
            pts.emplace_back(r, g.xs[r]);
            pts.emplace_back(r, g.os[r]);
        }
        out.push_back(pts);
    }
    return out;
}

GridDiagram from_corner_loops(const std::vector<std::vector<Cell>>& loops, std::optional<Cell> hole) {
    std::set<int> rs, cs;
    for (auto& l : loops)
        for (auto& p : l) {
            rs.insert(p.first);
            cs.insert(p.second);
        }
    if (hole) {
        rs.insert(hole->first);
        cs.insert(hole->second);
    }
    auto idx = [](const std::set<int>& s, int v) { return (int)std::distance(s.begin(), s.find(v)); };
    int n = (int)rs.size();
    if ((int)cs.size() != n) throw InputError(0, "corner loops do not form a grid");
    std::vector<int> xs(n, -1), os(n, -1);
    for (auto& l : loops)
        for (size_t i = 0; i + 1 < l.size(); i += 2) {
            if (l[i].first != l[i + 1].first) throw InputError(0, "corner loop does not alternate");
            int r = idx(rs, l[i].first);
            xs[r] = idx(cs, l[i].second);
            os[r] = idx(cs, l[i + 1].second);
        }
    std::optional<Cell> h;
    if (hole) h = Cell{idx(rs, hole->first), idx(cs, hole->second)};
    return make_grid(xs, os, h);
}

GridDiagram sw_stabilize_ne(const GridDiagram& g, int col) {
    if (col < 0 || col >= g.n) throw std::out_of_range("column out of range");
    auto cc = corner_census(g);
    if (cc.columns[col].first != Corner::NE)
        throw std::invalid_argument("column " + std::to_string(col + 1) + " has no NE corner");
    Span v = vertical_span(g, col);
    Cell P{2 * v.lo, 2 * col};
    auto loops = corner_loops(g);
    for (auto& l : loops)
        for (auto& p : l) p = {2 * p.first, 2 * p.second};
    // the corner is replaced by an overshoot and a step back: a new NW and SE corner appear
    Cell a{P.first, P.second + 1}, b{P.first + 1, P.second + 1}, c{P.first + 1, P.second};
    for (auto& l : loops) {
        auto it = std::find(l.begin(), l.end(), P);
        if (it == l.end()) continue;
        size_t i = it - l.begin();
        std::vector<Cell> ins = (i % 2 == 1) ? std::vector<Cell>{a, b, c} : std::vector<Cell>{c, b, a};
        l.erase(l.begin() + i);
        l.insert(l.begin() + i, ins.begin(), ins.end());
    }
    std::optional<Cell> hole;
    if (g.hole) hole = Cell{2 * g.hole->first, 2 * g.hole->second};
    GridDiagram out = from_corner_loops(loops, hole);
    out.framing = g.framing;
    return out;
}

GridDiagram vertical_translate(const GridDiagram& g, int shift) {
    int k = ((shift % g.n) + g.n) % g.n;
    GridDiagram out = g;
    std::rotate(out.xs.begin(), out.xs.begin() + k, out.xs.end());
    std::rotate(out.os.begin(), out.os.begin() + k, out.os.end());
    try {
        validate(out);
    } catch (const InputError&) {
        throw std::invalid_argument("translation by " + std::to_string(shift) + " moves a segment across the hole");
    }
    // component numbering follows the first row, so it may change under translation
    if (!g.framing.empty()) {
        auto old_rc = component_of_row(g);
        auto new_rc = component_of_row(out);
        out.framing.clear();
        for (auto& [comp, f] : g.framing)
            for (int r = 0; r < g.n; ++r)
                if (old_rc[r] == comp) {
                    out.framing[new_rc[((r - k) % g.n + g.n) % g.n]] = f;
                    break;
                }
    }
    return out;
}

GridDiagram rotate180(const GridDiagram& g) {
    GridDiagram out = g;
    for (int r = 0; r < g.n; ++r) {
        out.xs[g.n - 1 - r] = g.n - 1 - g.xs[r];
        out.os[g.n - 1 - r] = g.n - 1 - g.os[r];
    }
    if (g.hole) out.hole = Cell{g.n - 1 - g.hole->first, g.n - 1 - g.hole->second};
    if (!g.framing.empty()) {
        auto old_rc = component_of_row(g);
        auto new_rc = component_of_row(out);
        out.framing.clear();
        for (auto& [comp, f] : g.framing)
            for (int r = 0; r < g.n; ++r)
                if (old_rc[r] == comp) {
                    out.framing[new_rc[g.n - 1 - r]] = f;
                    break;
                }
    }
    return out;
}

bool operator==(const GridDiagram& a, const GridDiagram& b) {
    return a.n == b.n && a.xs == b.xs && a.os == b.os && a.hole == b.hole && a.framing == b.framing;
}

}  // namespace palf
