#pragma once
#include <optional>
#include <string>
#include <vector>

#include "palf/fiber.hpp"
#include "palf/grid.hpp"

namespace palf {

// Which way notches may pass under lifted verticals.
enum class Direction { LeftToRight, RightToLeft };

struct Point {
    int x = 0, y = 0;
    bool operator==(const Point&) const = default;
};

// Lattice point (col, row) sits at (2(col+1), -2(row+1)); the square border is at 0 and 2(n+1).
inline Point lattice(int col, int row) { return {2 * (col + 1), -2 * (row + 1)}; }

enum class EdgeKind : unsigned char { None, Wall, Door, Border, Hole, Cut };

struct Edge {
    EdgeKind kind = EdgeKind::None;
    int id = -1;   // door piece for doors, column for vertical walls, row for horizontal walls
};

// Part of a lifted vertical between consecutive rows that cross it.
struct DoorPiece {
    int col, top, bottom;
};

struct Foot {
    int col;
    int end;  // 0 = top end of the vertical, 1 = bottom end
    bool operator==(const Foot&) const = default;
};

struct Port {
    enum Kind : unsigned char { Root, Exit, Entry, FootPort } kind;
    int id = -1;        // door piece or foot index
    bool small = false; // foot ports: the notch meets the corner on its convex side
    bool operator==(const Port&) const = default;
};

struct Face {
    std::vector<Port> ports;
    std::vector<std::pair<Point, Point>> walk;
    std::vector<int> wall_cols;  // unlifted verticals on this face's boundary
};

// One step of a notch: inside `face`, from the port at position `in` to the port at `out`.
struct Arc {
    int face, in, out;
    bool operator==(const Arc&) const = default;
};
using Notch = std::vector<Arc>;

// The 0-handle as a face graph on the doubled lattice. Horizontals and unlifted
// verticals are walls; lifted verticals are doors a notch may pass beneath.
struct Scene {
    GridDiagram grid;
    Base base = Base::Disk;
    Direction dir = Direction::LeftToRight;
    std::vector<char> lifted;
    std::vector<DoorPiece> doors;
    std::vector<Foot> feet;   // sorted by (col, end)
    std::vector<Face> faces;  // faces[0] is the outer region
    int root_gap = -1;        // position of the root port in faces[0], -1 before placement

    // derived lookups
    std::vector<int> exit_face, exit_pos, entry_face, entry_pos;
    std::vector<std::vector<std::pair<int, int>>> foot_ports;  // per foot: (face, position)

    // raw lattice edges, for rendering: (a, b, edge)
    struct Seg {
        Point a, b;
        Edge e;
    };
    std::vector<Seg> segments;

    int foot_index(Foot f) const;
    int outer_port_count() const;
};

// Notches may not cross a ray from the hole to the nearer of the top and bottom borders.
// It leaves the hole on its right side for ltr and its left side for rtl, so rtl on a
// grid is the rotated picture of ltr on the rotated grid.
struct HoleRay {
    bool up = true;
    bool right = true;
};
HoleRay hole_ray(const GridDiagram& g, Direction dir);
// Signed crossing of row r's horizontal with the hole ray, +1 when it passes clockwise.
std::optional<int> hole_crossing(const GridDiagram& g, int r, Direction dir);

// Unlifted scene with the full square region.
Scene init_scene(const GridDiagram& g, Base base);
Scene build_scene(const GridDiagram& g, const std::vector<char>& lifted, Direction dir, Base base);
// Lifts one more column and rebuilds; the never-lifted column is flagged in the returned note.
Scene attach_handle(const Scene& s, int col, std::string* note = nullptr);
Scene with_root(const Scene& s, int gap);

bool self_ok(const Scene& s, const Notch& n);
// Every route from the root to the foot through at most max_doors doors.
std::vector<Notch> foot_paths(const Scene& s, int foot, int max_doors);
bool reachable(const Scene& s, int foot, int max_doors);
// nullopt if the notches cross; otherwise +1 if a comes first along the boundary, -1 if b does.
std::optional<int> notch_order(const Scene& s, const Notch& a, const Notch& b);
// Foot indices in boundary order starting at the root. Throws if the notches are incompatible.
std::vector<int> order_feet(const Scene& s, const std::vector<int>& feet, const std::vector<const Notch*>& notches);
// Column labels (col + 1) of the ordered feet.
std::vector<int> boundary_word(const Scene& s, const std::vector<int>& ordered_feet);

}  // namespace palf
