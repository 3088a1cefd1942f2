#include "palf/construct.hpp"

#include <algorithm>
#include <functional>

namespace palf {

ConstructError::ConstructError(int column, const std::string& msg) : std::runtime_error(msg), column(column) {}

const char* strategy_name(Strategy s) {
    switch (s) {
        case Strategy::Comb: return "comb";
        case Strategy::Flex: return "flex";
        case Strategy::Rtl: return "rtl";
    }
    return "?";
}

Strategy parse_strategy(const std::string& s) {
    if (s == "comb") return Strategy::Comb;
    if (s == "flex") return Strategy::Flex;
    if (s == "rtl") return Strategy::Rtl;
    throw std::invalid_argument("unknown strategy '" + s + "'");
}

Direction direction_of(Strategy s) { return s == Strategy::Rtl ? Direction::RightToLeft : Direction::LeftToRight; }

std::vector<char> basic_lifts(const GridDiagram& g, Direction dir, std::vector<std::string>* log) {
    auto cc = corner_census(g);
    std::vector<char> L(g.n, 0);
    for (int c = 0; c < g.n; ++c) {
        bool cusp = dir == Direction::LeftToRight ? cc.columns[c].first == Corner::NW : cc.columns[c].second == Corner::SE;
        if (cusp) {
            L[c] = 1;
            if (log) log->push_back("column " + std::to_string(c + 1) + ": " + (dir == Direction::LeftToRight ? "NW" : "SE") + " corner");
            continue;
        }
        for (int r = 0; r < g.n; ++r)
            if (crosses(g, c, r)) {
                L[c] = 1;
                if (log) log->push_back("column " + std::to_string(c + 1) + ": crosses row " + std::to_string(r + 1));
                break;
            }
    }
    return L;
}

namespace {

int rank_of(int col, int n, Direction dir) { return dir == Direction::LeftToRight ? col + 1 : n - col; }

// The unlifted column to lift so that a blocked foot can be reached.
int blocking_column(const Scene& s, int foot) {
    const int n = s.grid.n, col = s.feet[foot].col;
    const bool ltr = s.dir == Direction::LeftToRight;
    int best = -1;
    for (auto [face, pos] : s.foot_ports[foot])
        for (int c : s.faces[face].wall_cols) {
            if (s.lifted[c] || c == (ltr ? n - 1 : 0)) continue;
            if (ltr ? c >= col : c <= col) continue;
            if (best < 0 || (ltr ? c > best : c < best)) best = c;
        }
    return best;
}

struct SearchResult {
    int b = -1;
    std::vector<int> rank_word;
    int gap = 0;
    std::vector<int> choice;  // per foot, index into its path list
    std::vector<int> order;
    int blocked_foot = -1;
};

std::vector<int> least_rotation_index(const std::vector<int>& w, int& shift) {
    shift = 0;
    std::vector<int> best = w;
    for (size_t s = 1; s < w.size(); ++s) {
        std::vector<int> r(w.begin() + s, w.end());
        r.insert(r.end(), w.begin(), w.begin() + s);
        if (r < best) best = r, shift = (int)s;
    }
    return best;
}

// Exhaustive branch and bound over root positions and notch systems: maximise the boundary
// count, then take the least rotation of the word in processing ranks.
SearchResult flex_search(const Scene& base, int depth, std::vector<std::vector<Notch>>& paths_out) {
    SearchResult best;
    const int n = base.grid.n;
    const int nfeet = (int)base.feet.size();
    std::vector<int> cols;
    for (int c = 0; c < n; ++c)
        if (base.lifted[c]) cols.push_back(c);
    if (base.dir == Direction::RightToLeft) std::reverse(cols.begin(), cols.end());
    const int K = (int)cols.size();
    int deepest = 0;

    int gaps = std::max(base.outer_port_count(), 1);
    for (int gap = 0; gap < gaps; ++gap) {
        Scene s = with_root(base, gap);
        std::vector<std::vector<Notch>> P(nfeet);
        for (int f = 0; f < nfeet; ++f) {
            P[f] = foot_paths(s, f, depth);
            if (P[f].empty()) {
                best.blocked_foot = f;
                return best;
            }
        }
        std::vector<int> choice(nfeet, -1);
        std::vector<int> order;
        auto pos_for = [&](const Notch& a) {
            int p = 0;
            for (int g : order)
                if (*notch_order(s, P[g][choice[g]], a) > 0) ++p;
            return p;
        };
        auto compatible = [&](const Notch& a) {
            for (int g : order)
                if (!notch_order(s, a, P[g][choice[g]])) return false;
            return true;
        };
        std::function<void(int, int)> dfs = [&](int ci, int bcur) {
            deepest = std::max(deepest, ci);
            if (bcur + (K - ci) < best.b) return;
            if (ci == K) {
                std::vector<int> rw;
                for (int f : order) rw.push_back(rank_of(s.feet[f].col, n, s.dir));
                int shift;
                auto rot = least_rotation_index(rw, shift);
                if (bcur > best.b || (bcur == best.b && rot < best.rank_word)) {
                    best.b = bcur;
                    best.rank_word = rot;
                    best.gap = gap;
                    best.choice = choice;
                    best.order = order;
                    std::rotate(best.order.begin(), best.order.begin() + shift, best.order.end());
                    paths_out = P;
                }
                return;
            }
            int ft = s.foot_index({cols[ci], 0}), fb = s.foot_index({cols[ci], 1});
            for (int ia = 0; ia < (int)P[ft].size(); ++ia) {
                const Notch& a = P[ft][ia];
                if (!compatible(a)) continue;
                for (int ib = 0; ib < (int)P[fb].size(); ++ib) {
                    const Notch& b = P[fb][ib];
                    if (!notch_order(s, a, b) || !compatible(b)) continue;
                    auto saved = order;
                    int pa = pos_for(a);
                    choice[ft] = ia;
                    order.insert(order.begin() + pa, ft);
                    int pb = pos_for(b);
                    choice[fb] = ib;
                    order.insert(order.begin() + pb, fb);
                    std::vector<int> w;
                    for (int f : order) w.push_back(s.feet[f].col);
                    dfs(ci + 1, boundary_components(w));
                    order = saved;
                    choice[ft] = choice[fb] = -1;
                }
            }
        };
        dfs(0, 1);
    }
    if (best.b < 0 && K > 0) best.blocked_foot = base.foot_index({cols[std::min(deepest, K - 1)], 0});
    return best;
}

struct CombResult {
    std::vector<int> choice;
    std::vector<int> order;
    std::vector<int> need;
};

// One horizontal lane per foot, entered from the left edge.
CombResult comb_lanes(const Scene& s, std::vector<std::vector<Notch>>& paths_out) {
    const GridDiagram& g = s.grid;
    auto cc = corner_census(g);
    CombResult res;
    const int nfeet = (int)s.feet.size();
    res.choice.assign(nfeet, 0);
    paths_out.assign(nfeet, {});
    for (int f = 0; f < nfeet; ++f) {
        auto [c, end] = s.feet[f];
        Span v = vertical_span(g, c);
        Corner kind = end == 0 ? cc.columns[c].first : cc.columns[c].second;
        int r = end == 0 ? v.lo : v.hi;
        // lane height in half rows, and whether the lane meets the corner on its convex side
        int y2 = 2 * r;
        bool small = false;
        if (kind == Corner::NE) y2 = 2 * r + 1, small = true;
        if (kind == Corner::SE) y2 = 2 * r - 1, small = true;
        std::vector<int> doors;
        for (int c2 = 0; c2 < c; ++c2) {
            Span v2 = vertical_span(g, c2);
            if (!(2 * v2.lo < y2 && y2 < 2 * v2.hi)) continue;
            if (!s.lifted[c2]) {
                if (std::find(res.need.begin(), res.need.end(), c2) == res.need.end()) res.need.push_back(c2);
                continue;
            }
            for (int d = 0; d < (int)s.doors.size(); ++d)
                if (s.doors[d].col == c2 && 2 * s.doors[d].top < y2 && y2 < 2 * s.doors[d].bottom) doors.push_back(d);
        }
        if (!res.need.empty()) continue;
        for (auto& p : foot_paths(s, f, (int)doors.size())) {
            std::vector<int> seq;
            for (size_t k = 0; k + 1 < p.size(); ++k) seq.push_back(s.faces[p[k].face].ports[p[k].out].id);
            const Port& last = s.faces[p.back().face].ports[p.back().out];
            if (seq == doors && last.small == small) paths_out[f].push_back(p);
        }
        if (paths_out[f].size() != 1)
            throw ConstructError(c, "comb lane for column " + std::to_string(c + 1) + " is not unique");
    }
    if (!res.need.empty()) return res;
    std::vector<int> feet;
    std::vector<const Notch*> ns;
    for (int f = 0; f < nfeet; ++f) {
        feet.push_back(f);
        ns.push_back(&paths_out[f][0]);
    }
    try {
        res.order = order_feet(s, feet, ns);
    } catch (const std::logic_error&) {
        throw ConstructError(-1, "comb lanes cross");
    }
    return res;
}

}  // namespace

std::vector<int> hole_windings(const GridDiagram& g, Direction dir) {
    auto cs = components(g);
    std::vector<int> out(cs.size(), 0);
    for (size_t k = 0; k < cs.size(); ++k)
        for (int r : cs[k])
            if (auto w = hole_crossing(g, r, dir)) out[k] += *w;
    return out;
}

Curve embed_c0(const GridDiagram& g, const RibbonFiber& fiber, const std::vector<Foot>& word_feet, const std::vector<char>& lifted,
               Direction dir, int component) {
    auto cs = components(g);
    if (component < 0 || component >= (int)cs.size()) throw std::out_of_range("invalid component");
    auto cc = corner_census(g);
    auto pos = [&](Foot f) {
        auto it = std::find(word_feet.begin(), word_feet.end(), f);
        if (it == word_feet.end()) throw std::logic_error("foot missing from the boundary word");
        return int(it - word_feet.begin());
    };
    Curve c;
    c.name = cs.size() == 1 ? "C0" : "C0" + std::to_string(component + 1);
    int twists = 0;
    for (int r : cs[component]) {
        if (auto w = hole_crossing(g, r, dir)) c.traversals.emplace_back(kHoleLabel, *w);
        int col = g.os[r];
        if (!lifted[col]) continue;
        // the guide line runs over the band from its O end to its X end
        Span v = vertical_span(g, col);
        int from = r == v.lo ? 0 : 1;
        int sign = pos({col, from}) < pos({col, 1 - from}) ? 1 : -1;
        c.traversals.emplace_back(col + 1, sign);
        bool cusp = dir == Direction::LeftToRight ? cc.columns[col].first == Corner::NW : cc.columns[col].second == Corner::SE;
        twists += cusp;
    }
    c.homology = class_of(fiber, c.traversals);
    c.surface_framing = self_writhe(g, component) - twists;
    c.framing = *c.surface_framing - 1;
    return c;
}

PALF construct_palf(const GridDiagram& g, const ConstructOptions& opts) {
    const Direction dir = direction_of(opts.strategy);
    const Base base = g.hole ? Base::Annulus : Base::Disk;
    const int n = g.n;
    const int never = dir == Direction::LeftToRight ? n - 1 : 0;
    PALF p;
    p.grid = g;
    p.strategy = opts.strategy;
    p.base = base;
    std::vector<char> L = basic_lifts(g, dir, &p.lift_log);

    auto lift = [&](int c, const std::string& why) {
        if (c < 0 || c == never || L[c]) throw ConstructError(c, why);
        L[c] = 1;
        p.lift_log.push_back("column " + std::to_string(c + 1) + ": " + why);
    };

    std::vector<std::vector<Notch>> paths;
    std::vector<int> choice;
    bool done = false;
    for (int restart = 0; restart <= n && !done; ++restart) {
        Scene sc = build_scene(g, L, dir, base);
        if (opts.strategy == Strategy::Comb) {
            sc = with_root(sc, 0);
            CombResult cr = comb_lanes(sc, paths);
            if (!cr.need.empty()) {
                std::sort(cr.need.begin(), cr.need.end());
                for (int c : cr.need) lift(c, "lane blocked");
                continue;
            }
            p.scene = sc;
            p.foot_order = cr.order;
            choice.assign(sc.feet.size(), 0);
        } else {
            SearchResult r = flex_search(sc, opts.notch_depth, paths);
            if (r.b < 0) {
                int foot = r.blocked_foot;
                int c = foot >= 0 ? blocking_column(sc, foot) : -1;
                std::string where = foot >= 0 ? " of column " + std::to_string(sc.feet[foot].col + 1) : "";
                if (c < 0) throw ConstructError(foot >= 0 ? sc.feet[foot].col : -1, "no notch reaches the foot" + where);
                lift(c, "unblocks the foot" + where);
                continue;
            }
            p.scene = with_root(sc, r.gap);
            p.foot_order = r.order;
            choice = r.choice;
        }
        done = true;
    }
    if (!done) throw ConstructError(-1, "reachability restarts exceeded the grid size");

    for (int c = 0; c < n; ++c)
        if (L[c]) p.lifted.push_back(c);
    for (size_t f = 0; f < p.scene.feet.size(); ++f) p.notches.push_back(paths[f][choice[f]]);

    std::vector<int> word = boundary_word(p.scene, p.foot_order);
    std::vector<Foot> word_feet;
    for (int f : p.foot_order) word_feet.push_back(p.scene.feet[f]);
    if (base == Base::Annulus) {
        word.push_back(kHoleLabel);
        word.push_back(kHoleLabel);
    }
    p.fiber = from_boundary_word(word, base);
    p.windings = hole_windings(g, direction_of(p.strategy));

    if (opts.include_c0) {
        int nc = (int)components(g).size();
        for (int k = 0; k < nc; ++k) p.factorization.push_back(embed_c0(g, p.fiber, word_feet, L, dir, k));
        p.c0_count = nc;
    }
    std::vector<int> order = p.lifted;
    if (dir == Direction::LeftToRight) std::reverse(order.begin(), order.end());
    for (int c : order) {
        Curve ci = handle_curve(p.fiber, c + 1);
        ci.surface_framing = -1;
        ci.framing = -2;
        p.factorization.push_back(ci);
    }
    return p;
}

std::vector<int> decide_lifts(const GridDiagram& g, Strategy strategy) {
    return construct_palf(g, {strategy, false}).lifted;
}

std::vector<int> rotated_labels(const std::vector<int>& word, int n) {
    std::vector<int> out;
    for (int l : word) out.push_back(l == kHoleLabel ? l : n + 1 - l);
    return out;
}

bool rtl_equivalence_check(const GridDiagram& g) {
    PALF a = construct_palf(g, {Strategy::Flex, false});
    PALF b = construct_palf(rotate180(g), {Strategy::Rtl, false});
    return cyclic_equal(rotated_labels(b.fiber.word, g.n), a.fiber.word);
}

}  // namespace palf
