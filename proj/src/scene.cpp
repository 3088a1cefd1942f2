#include "palf/scene.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>

namespace palf {

namespace {

constexpr std::array<Point, 4> kDirs{{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};  // E N W S

struct Lattice {
    int M;
    std::vector<std::array<Edge, 4>> e;
    explicit Lattice(int n) : M(2 * (n + 1)), e((M + 1) * (M + 1)) {}
    int id(Point p) const { return p.x * (M + 1) - p.y; }
    bool inside(Point p) const { return p.x >= 0 && p.x <= M && p.y <= 0 && p.y >= -M; }
    const Edge& at(Point p, int d) const { return e[id(p)][d]; }
};

int dir_of(Point a, Point b) {
    for (int d = 0; d < 4; ++d)
        if (a.x + kDirs[d].x == b.x && a.y + kDirs[d].y == b.y) return d;
    throw std::logic_error("points are not lattice neighbours");
}

Point step(Point p, int d) { return {p.x + kDirs[d].x, p.y + kDirs[d].y}; }

int next_dir(const Lattice& L, Point w, int d) {
    // face on the right: prefer right turn, then straight, left, back
    for (int turn : {-1, 0, 1, 2}) {
        int nd = (d + turn + 4) % 4;
        if (L.at(w, nd).kind != EdgeKind::None) return nd;
    }
    throw std::logic_error("isolated lattice point");
}

void index_ports(Scene& s) {
    int nd = (int)s.doors.size();
    s.exit_face.assign(nd, -1);
    s.exit_pos.assign(nd, -1);
    s.entry_face.assign(nd, -1);
    s.entry_pos.assign(nd, -1);
    s.foot_ports.assign(s.feet.size(), {});
    for (int fi = 0; fi < (int)s.faces.size(); ++fi) {
        const auto& ports = s.faces[fi].ports;
        for (int k = 0; k < (int)ports.size(); ++k) {
            const Port& p = ports[k];
            if (p.kind == Port::Exit) s.exit_face[p.id] = fi, s.exit_pos[p.id] = k;
            if (p.kind == Port::Entry) s.entry_face[p.id] = fi, s.entry_pos[p.id] = k;
            if (p.kind == Port::FootPort) s.foot_ports[p.id].emplace_back(fi, k);
        }
    }
}

bool interleave(int a1, int a2, int b1, int b2) {
    int x = std::min(a1, a2), y = std::max(a1, a2);
    auto in = [&](int z) { return x < z && z < y; };
    return in(b1) != in(b2);
}

// Is a met before b when walking the face boundary from just after ref?
bool before(const Scene& s, int face, int ref, int a, int b) {
    int m = (int)s.faces[face].ports.size();
    return ((a - ref - 1) % m + m) % m < ((b - ref - 1) % m + m) % m;
}

bool arcs_ok(const Arc& a, const Arc& b) {
    if (a.face != b.face) return true;
    std::set<int> d{a.in, a.out, b.in, b.out};
    return d.size() == 4 && !interleave(a.in, a.out, b.in, b.out);
}

}  // namespace

int Scene::foot_index(Foot f) const {
    auto it = std::find(feet.begin(), feet.end(), f);
    if (it == feet.end()) throw std::out_of_range("column " + std::to_string(f.col + 1) + " is not lifted");
    return int(it - feet.begin());
}

int Scene::outer_port_count() const {
    int c = 0;
    for (auto& p : faces[0].ports) c += p.kind != Port::Root;
    return c;
}

Scene build_scene(const GridDiagram& g, const std::vector<char>& lifted, Direction dir, Base base) {
    if (base == Base::Annulus && !g.hole) throw InputError(0, "annulus base needs a hole cell");
    Scene s;
    s.grid = g;
    s.base = base;
    s.dir = dir;
    s.lifted = lifted;
    s.lifted.resize(g.n, 0);
    const int n = g.n;
    Lattice L(n);
    auto add = [&](Point p, Point q, Edge e) {
        int d = dir_of(p, q);
        L.e[L.id(p)][d] = e;
        L.e[L.id(q)][(d + 2) % 4] = e;
        s.segments.push_back({p, q, e});
    };
    for (int r = 0; r < n; ++r) {
        Span h = horizontal_span(g, r);
        for (int X = 2 * (h.lo + 1); X < 2 * (h.hi + 1); ++X)
            add({X, -2 * (r + 1)}, {X + 1, -2 * (r + 1)}, {EdgeKind::Wall, r});
    }
    for (int c = 0; c < n; ++c) {
        Span v = vertical_span(g, c);
        std::vector<int> bounds{v.lo};
        for (int r = v.lo + 1; r < v.hi; ++r)
            if (crosses(g, c, r)) bounds.push_back(r);
        bounds.push_back(v.hi);
        int X = 2 * (c + 1);
        for (size_t k = 0; k + 1 < bounds.size(); ++k) {
            Edge e{EdgeKind::Wall, c};
            if (s.lifted[c]) {
                e = {EdgeKind::Door, (int)s.doors.size()};
                s.doors.push_back({c, bounds[k], bounds[k + 1]});
            }
            for (int Y = 2 * (bounds[k] + 1); Y < 2 * (bounds[k + 1] + 1); ++Y) add({X, -Y}, {X, -Y - 1}, e);
        }
    }
    const int M = L.M;
    for (int i = 0; i < M; ++i) {
        add({i, 0}, {i + 1, 0}, {EdgeKind::Border, -1});
        add({i, -M}, {i + 1, -M}, {EdgeKind::Border, -1});
        add({0, -i}, {0, -i - 1}, {EdgeKind::Border, -1});
        add({M, -i}, {M, -i - 1}, {EdgeKind::Border, -1});
    }
    if (base == Base::Annulus) {
        auto [hr, hc] = *g.hole;
        int x0 = 2 * hc + 1, x1 = 2 * hc + 3, y0 = -(2 * hr + 1), y1 = -(2 * hr + 3);
        for (int X = x0; X < x1; ++X) {
            add({X, y0}, {X + 1, y0}, {EdgeKind::Hole, -1});
            add({X, y1}, {X + 1, y1}, {EdgeKind::Hole, -1});
        }
        for (int Y = y1; Y < y0; ++Y) {
            add({x0, Y}, {x0, Y + 1}, {EdgeKind::Hole, -1});
            add({x1, Y}, {x1, Y + 1}, {EdgeKind::Hole, -1});
        }
        HoleRay ray = hole_ray(g, s.dir);
        int x = ray.right ? x1 : x0;
        if (ray.up)
            for (int Y = y0; Y < 0; ++Y) add({x, Y}, {x, Y + 1}, {EdgeKind::Cut, -1});
        else
            for (int Y = -M; Y < y1; ++Y) add({x, Y}, {x, Y + 1}, {EdgeKind::Cut, -1});
    }

    std::map<int, int> foot_at;  // lattice id -> foot index
    for (int c = 0; c < n; ++c)
        if (s.lifted[c]) {
            s.feet.push_back({c, 0});
            s.feet.push_back({c, 1});
        }
    for (int i = 0; i < (int)s.feet.size(); ++i) {
        Span v = vertical_span(g, s.feet[i].col);
        foot_at[L.id(lattice(s.feet[i].col, s.feet[i].end ? v.hi : v.lo))] = i;
    }

    // trace every face walk, starting with the outer one at the top-left corner of row 1
    std::vector<std::array<char, 4>> seen(L.e.size(), {0, 0, 0, 0});
    std::vector<std::vector<std::pair<Point, int>>> walks;
    auto trace = [&](Point p, int d) {
        std::vector<std::pair<Point, int>> walk;
        while (!seen[L.id(p)][d]) {
            seen[L.id(p)][d] = 1;
            walk.emplace_back(p, d);
            Point w = step(p, d);
            d = next_dir(L, w, d);
            p = w;
        }
        walks.push_back(std::move(walk));
    };
    trace(lattice(horizontal_span(g, 0).lo, 0), 3);
    for (int x = 0; x <= M; ++x)
        for (int y = 0; y >= -M; --y)
            for (int d = 0; d < 4; ++d)
                if (L.at({x, y}, d).kind != EdgeKind::None && !seen[L.id({x, y})][d]) trace({x, y}, d);

    std::vector<int> outer, bounded;
    for (int wi = 0; wi < (int)walks.size(); ++wi) {
        long long area = 0;
        bool border = false, other = false;
        for (auto [p, d] : walks[wi]) {
            Point w = step(p, d);
            area += (long long)p.x * w.y - (long long)w.x * p.y;
            (L.at(p, d).kind == EdgeKind::Border ? border : other) = true;
        }
        if (border) {
            if (area < 0 && other) outer.push_back(wi);
        } else if (area < 0) {
            bounded.push_back(wi);
        } else {
            outer.push_back(wi);
        }
    }
    if (outer.size() != 1) throw InputError(0, "the diagram and hole do not bound a single outer region");

    auto make_face = [&](int wi) {
        Face f;
        std::set<std::pair<int, int>> door_seen;
        const auto& walk = walks[wi];
        for (size_t i = 0; i < walk.size(); ++i) {
            auto [p, d] = walk[i];
            Point w = step(p, d);
            f.walk.emplace_back(p, w);
            const Edge& e = L.at(p, d);
            if (e.kind == EdgeKind::Wall && p.x == w.x && std::find(f.wall_cols.begin(), f.wall_cols.end(), e.id) == f.wall_cols.end())
                f.wall_cols.push_back(e.id);
            if (e.kind == EdgeKind::Door) {
                bool up = w.y > p.y;
                bool exit = (dir == Direction::LeftToRight) ? !up : up;
                Port::Kind k = exit ? Port::Exit : Port::Entry;
                if (door_seen.insert({k, e.id}).second) f.ports.push_back({k, e.id, false});
            }
            auto it = foot_at.find(L.id(w));
            if (it != foot_at.end()) {
                int d2 = walk[(i + 1) % walk.size()].second;
                Point a = kDirs[d], b = kDirs[d2];
                bool right = a.x * b.y - a.y * b.x < 0;
                f.ports.push_back({Port::FootPort, it->second, right});
            }
        }
        return f;
    };
    s.faces.push_back(make_face(outer[0]));
    for (int wi : bounded) s.faces.push_back(make_face(wi));
    index_ports(s);
    return s;
}

HoleRay hole_ray(const GridDiagram& g, Direction dir) {
    HoleRay ray;
    if (!g.hole) return ray;
    int above = g.hole->first, below = g.n - 1 - g.hole->first;
    bool ltr = dir == Direction::LeftToRight;
    ray.up = above < below || (above == below && ltr);
    ray.right = ltr;
    return ray;
}

std::optional<int> hole_crossing(const GridDiagram& g, int r, Direction dir) {
    if (!g.hole) return std::nullopt;
    auto [hr, hc] = *g.hole;
    HoleRay ray = hole_ray(g, dir);
    if (ray.up ? r >= hr : r <= hr) return std::nullopt;
    Span h = horizontal_span(g, r);
    int left = ray.right ? hc : hc - 1;
    if (h.lo > left || left + 1 > h.hi) return std::nullopt;
    bool rightward = g.os[r] > g.xs[r];
    return rightward == ray.up ? 1 : -1;
}

Scene init_scene(const GridDiagram& g, Base base) { return build_scene(g, std::vector<char>(g.n, 0), Direction::LeftToRight, base); }

Scene attach_handle(const Scene& s, int col, std::string* note) {
    if (col < 0 || col >= s.grid.n) throw std::out_of_range("column out of range");
    int never = s.dir == Direction::LeftToRight ? s.grid.n - 1 : 0;
    if (note) *note = col == never ? "column " + std::to_string(col + 1) + " is never lifted by construct" : "";
    auto lifted = s.lifted;
    lifted[col] = 1;
    Scene out = build_scene(s.grid, lifted, s.dir, s.base);
    if (s.root_gap >= 0) out = with_root(out, std::min(s.root_gap, out.outer_port_count()));
    return out;
}

Scene with_root(const Scene& s, int gap) {
    Scene out = s;
    auto& ports = out.faces[0].ports;
    ports.erase(std::remove_if(ports.begin(), ports.end(), [](const Port& p) { return p.kind == Port::Root; }), ports.end());
    if (gap < 0 || gap > (int)ports.size()) throw std::out_of_range("root gap out of range");
    ports.insert(ports.begin() + gap, Port{Port::Root, -1, false});
    out.root_gap = gap;
    index_ports(out);
    return out;
}

bool self_ok(const Scene&, const Notch& n) {
    for (size_t i = 0; i < n.size(); ++i)
        for (size_t j = i + 1; j < n.size(); ++j)
            if (!arcs_ok(n[i], n[j])) return false;
    return true;
}

std::vector<Notch> foot_paths(const Scene& s, int foot, int max_doors) {
    if (s.root_gap < 0) throw std::logic_error("scene has no root");
    std::vector<Notch> out;
    const int col = s.feet[foot].col;
    const bool ltr = s.dir == Direction::LeftToRight;
    Notch arcs;
    std::vector<int> used;
    auto fits = [&](const Arc& a) {
        for (auto& b : arcs)
            if (!arcs_ok(a, b)) return false;
        return true;
    };
    auto dfs = [&](auto&& self, int face, int in) -> void {
        for (auto [fc, fp] : s.foot_ports[foot]) {
            if (fc != face) continue;
            Arc a{face, in, fp};
            if (!fits(a)) continue;
            arcs.push_back(a);
            out.push_back(arcs);
            arcs.pop_back();
        }
        if ((int)used.size() >= max_doors) return;
        const auto& ports = s.faces[face].ports;
        for (int k = 0; k < (int)ports.size(); ++k) {
            const Port& p = ports[k];
            if (p.kind != Port::Exit) continue;
            int dc = s.doors[p.id].col;
            if (ltr ? dc >= col : dc <= col) continue;
            if (std::find(used.begin(), used.end(), p.id) != used.end()) continue;
            Arc a{face, in, k};
            if (!fits(a)) continue;
            arcs.push_back(a);
            used.push_back(p.id);
            self(self, s.entry_face[p.id], s.entry_pos[p.id]);
            used.pop_back();
            arcs.pop_back();
        }
    };
    dfs(dfs, 0, s.root_gap);
    return out;
}

bool reachable(const Scene& s, int foot, int max_doors) { return !foot_paths(s, foot, max_doors).empty(); }

std::optional<int> notch_order(const Scene& s, const Notch& A, const Notch& B) {
    std::optional<int> root;
    for (int i = 0; i < (int)A.size(); ++i)
        for (int j = 0; j < (int)B.size(); ++j) {
            const Arc& a = A[i];
            const Arc& b = B[j];
            if (a.face != b.face) continue;
            if (a == b) continue;
            if (a.in != b.in && a.out != b.out) {
                if (!arcs_ok(a, b)) return std::nullopt;
                continue;
            }
            if (a.in != b.in) continue;
            // shared in-port: the notches split here
            int d = before(s, a.face, a.in, a.out, b.out) ? 1 : -1;
            int k = i - 1, l = j - 1;
            while (k >= 0 && l >= 0 && A[k] == B[l]) --k, --l;
            if (k < 0 && l < 0) {
                root = d;
                continue;
            }
            if (k < 0 || l < 0) return std::nullopt;
            // they merged earlier through a shared door; the order there must agree
            const Arc& ak = A[k];
            const Arc& bl = B[l];
            if (ak.face != bl.face || ak.out != bl.out) return std::nullopt;
            int c = before(s, ak.face, ak.out, ak.in, bl.in) ? -1 : 1;
            if (c != d) return std::nullopt;
        }
    return root;
}

std::vector<int> order_feet(const Scene& s, const std::vector<int>& feet, const std::vector<const Notch*>& notches) {
    int m = (int)feet.size();
    std::vector<int> rank(m, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            auto o = notch_order(s, *notches[j], *notches[i]);
            if (!o) throw std::logic_error("notches cross");
            rank[i] += *o > 0;
        }
    std::vector<int> out(m, -1);
    for (int i = 0; i < m; ++i) {
        if (out[rank[i]] >= 0) throw std::logic_error("notch order is not a total order");
        out[rank[i]] = feet[i];
    }
    return out;
}

std::vector<int> boundary_word(const Scene& s, const std::vector<int>& ordered_feet) {
    std::vector<int> w;
    for (int f : ordered_feet) w.push_back(s.feet[f].col + 1);
    return w;
}

}  // namespace palf
