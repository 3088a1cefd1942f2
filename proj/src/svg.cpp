#include "palf/svg.hpp"

#include <cmath>
#include <sstream>

namespace palf {

namespace {

const char* kPalette[] = {"#1f77b4", "#2ca02c", "#9467bd", "#8c564b", "#17becf", "#bcbd22", "#7f7f7f", "#e377c2", "#ff7f0e"};

std::string fmt(double v) {
    std::ostringstream o;
    o.setf(std::ios::fixed);
    o.precision(1);
    o << v;
    return o.str();
}

struct XY {
    double x, y;
};

}  // namespace

std::string render_svg(const PALF& p) {
    const Scene& s = p.scene;
    const int n = p.grid.n;
    const int M = 2 * (n + 1);
    const double u = std::max(14.0, 320.0 / (2 * (n + 1)));  // pixels per half cell
    const double pad = 20.0;
    const double sceneW = M * u + 2 * pad;
    const double R = 160.0;
    const double chordW = 2 * R + 120;
    const double W = sceneW + chordW, H = std::max(sceneW, 2 * R + 120) + 30;
    auto px = [&](Point q) { return XY{pad + q.x * u, pad - q.y * u}; };

    std::ostringstream o;
    o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(W) << "\" height=\"" << fmt(H) << "\" viewBox=\"0 0 "
      << fmt(W) << ' ' << fmt(H) << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
    o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // scene panel
    o << "<g id=\"scene\">\n";
    for (int c : p.lifted) {
        Span v = vertical_span(p.grid, c);
        XY a = px(lattice(c, v.lo)), b = px(lattice(c, v.hi));
        o << "<rect class=\"handle\" x=\"" << fmt(a.x - 0.4 * u) << "\" y=\"" << fmt(a.y) << "\" width=\"" << fmt(0.8 * u)
          << "\" height=\"" << fmt(b.y - a.y) << "\" fill=\"#cfe3f7\" stroke=\"#6a9ccc\"/>\n";
    }
    for (auto& sg : s.segments) {
        XY a = px(sg.a), b = px(sg.b);
        std::string style;
        switch (sg.e.kind) {
            case EdgeKind::Wall: style = "stroke=\"black\" stroke-width=\"2\""; break;
            case EdgeKind::Door: style = "stroke=\"#6a9ccc\" stroke-width=\"1\" stroke-dasharray=\"3,2\""; break;
            case EdgeKind::Border: style = "stroke=\"#999\" stroke-width=\"1\""; break;
            case EdgeKind::Hole: style = "stroke=\"#d62728\" stroke-width=\"1.5\""; break;
            case EdgeKind::Cut: style = "stroke=\"#d62728\" stroke-width=\"1\" stroke-dasharray=\"2,2\""; break;
            default: continue;
        }
        o << "<line x1=\"" << fmt(a.x) << "\" y1=\"" << fmt(a.y) << "\" x2=\"" << fmt(b.x) << "\" y2=\"" << fmt(b.y) << "\" " << style << "/>\n";
    }
    // notches: root, then each door crossed, then the foot
    auto port_xy = [&](int face, int pos) -> XY {
        const Port& pt = s.faces[face].ports[pos];
        if (pt.kind == Port::FootPort) {
            Foot f = s.feet[pt.id];
            Span v = vertical_span(p.grid, f.col);
            return px(lattice(f.col, f.end ? v.hi : v.lo));
        }
        if (pt.kind == Port::Root) return px(s.faces[0].walk.front().first);
        const DoorPiece& d = s.doors[pt.id];
        XY a = px(lattice(d.col, d.top)), b = px(lattice(d.col, d.bottom));
        return {a.x, (a.y + b.y) / 2};
    };
    for (auto& notch : p.notches) {
        o << "<polyline class=\"notch\" fill=\"none\" stroke=\"#ff7f0e\" stroke-width=\"1.2\" points=\"";
        for (size_t i = 0; i < notch.size(); ++i) {
            if (i == 0) {
                XY a = port_xy(notch[i].face, notch[i].in);
                o << fmt(a.x) << ',' << fmt(a.y) << ' ';
            }
            XY b = port_xy(notch[i].face, notch[i].out);
            o << fmt(b.x) << ',' << fmt(b.y) << ' ';
        }
        o << "\"/>\n";
    }
    for (int c = 0; c < n; ++c) {
        XY a = px(lattice(c, n - 1));
        o << "<text class=\"col\" x=\"" << fmt(a.x) << "\" y=\"" << fmt(pad + M * u + 14) << "\" text-anchor=\"middle\">" << c + 1
          << "</text>\n";
    }
    o << "</g>\n";

    // chord panel
    const double cx = sceneW + chordW / 2, cy = H / 2;
    const auto& w = p.fiber.word;
    const int m = (int)w.size();
    auto at = [&](int i, double r) {
        double th = M_PI / 2 + 2 * M_PI * i / std::max(m, 1);
        return XY{cx + r * std::cos(th), cy - r * std::sin(th)};
    };
    o << "<g id=\"fiber\">\n";
    o << "<circle cx=\"" << fmt(cx) << "\" cy=\"" << fmt(cy) << "\" r=\"" << fmt(R) << "\" fill=\"#f4f4f4\" stroke=\"black\"/>\n";
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (w[i] == w[j]) {
                XY a = at(i, R), b = at(j, R);
                std::string color = "#555";
                for (size_t q = p.c0_count; q < p.factorization.size(); ++q)
                    if (p.factorization[q].traversals.size() == 1 && p.factorization[q].traversals[0].first == w[i])
                        color = kPalette[(q - p.c0_count) % 9];
                o << "<path class=\"band\" d=\"M " << fmt(a.x) << ' ' << fmt(a.y) << " Q " << fmt(cx) << ' ' << fmt(cy) << ' '
                  << fmt(b.x) << ' ' << fmt(b.y) << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"3\"/>\n";
            }
    for (int i = 0; i < m; ++i) {
        XY a = at(i, R + 14);
        o << "<text class=\"foot\" x=\"" << fmt(a.x) << "\" y=\"" << fmt(a.y + 4) << "\" text-anchor=\"middle\">"
          << (w[i] == kHoleLabel ? std::string("h0") : std::to_string(w[i])) << "</text>\n";
    }
    for (int q = 0; q < p.c0_count; ++q) {
        const Curve& c = p.factorization[q];
        o << "<polygon class=\"c0\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"1.5\" stroke-dasharray=\"5,3\" points=\"";
        for (auto [l, sg] : c.traversals) {
            int a = -1, b = -1;
            for (int i = 0; i < m; ++i)
                if (w[i] == l) (a < 0 ? a : b) = i;
            if (sg < 0) std::swap(a, b);
            XY pa = at(a, R - 8 - 4 * q), pb = at(b, R - 8 - 4 * q);
            o << fmt(pa.x) << ',' << fmt(pa.y) << ' ' << fmt(pb.x) << ',' << fmt(pb.y) << ' ';
        }
        o << "\"><title>" << c.name << "</title></polygon>\n";
    }
    o << "<text x=\"" << fmt(cx) << "\" y=\"" << fmt(H - 10) << "\" text-anchor=\"middle\">" << word_string(w) << "</text>\n";
    o << "</g>\n</svg>\n";
    return o.str();
}

}  // namespace palf
