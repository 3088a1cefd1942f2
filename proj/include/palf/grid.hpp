#pragma once
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace palf {

// Thrown for malformed or invalid inputs; line is 1-based, 0 when not tied to a file line.
struct InputError : std::runtime_error {
    int line;
    InputError(int line, const std::string& msg);
};

enum class Corner { NW, NE, SW, SE };
const char* corner_name(Corner c);

using Cell = std::pair<int, int>;  // (row, col), 0-based

// Rows top to bottom, columns left to right, all 0-based internally.
// xs[r] / os[r] are the columns of the X and O markers in row r.
struct GridDiagram {
    int n = 0;
    std::vector<int> xs, os;
    std::optional<Cell> hole;
    // component -> requested 2-handle framing; nullopt means tb - 1
    std::map<int, std::optional<int>> framing;
};

// Validates and builds. Throws InputError.
GridDiagram make_grid(std::vector<int> xs, std::vector<int> os, std::optional<Cell> hole = {});
void validate(const GridDiagram& g);

GridDiagram parse_grid(const std::string& text);
GridDiagram load_grid(const std::string& path);
std::string to_text(const GridDiagram& g);

// Column c's vertical segment spans rows [top, bottom].
struct Span {
    int lo, hi;
};
Span vertical_span(const GridDiagram& g, int col);
Span horizontal_span(const GridDiagram& g, int row);
int x_row(const GridDiagram& g, int col);
int o_row(const GridDiagram& g, int col);
// True if column col's vertical crosses row's horizontal.
bool crosses(const GridDiagram& g, int col, int row);

// Rows of each component in traversal order; components ordered by their first row.
std::vector<std::vector<int>> components(const GridDiagram& g);
std::vector<int> component_of_row(const GridDiagram& g);
std::vector<int> component_of_col(const GridDiagram& g);

struct CornerCensus {
    int nw = 0, ne = 0, sw = 0, se = 0;
    // (top corner, bottom corner) of each column's vertical
    std::vector<std::pair<Corner, Corner>> columns;
};
CornerCensus corner_census(const GridDiagram& g);
// Counts restricted to one component; columns still lists every column.
CornerCensus corner_census(const GridDiagram& g, int component);

// Crossing sign with the vertical strand over the horizontal one.
int crossing_sign(const GridDiagram& g, int col, int row);
int writhe(const GridDiagram& g);
int self_writhe(const GridDiagram& g, int component);
int linking_number(const GridDiagram& g, int a, int b);

struct LegendrianInvariants {
    int writhe = 0;
    int nw_corners = 0;
    int tb = 0;
    int framing = 0;
};
LegendrianInvariants legendrian_invariants(const GridDiagram& g, int component);

// Closed corner loops per component, alternating horizontal (X then O) and vertical steps.
std::vector<std::vector<Cell>> corner_loops(const GridDiagram& g);
GridDiagram from_corner_loops(const std::vector<std::vector<Cell>>& loops, std::optional<Cell> hole = {});

GridDiagram sw_stabilize_ne(const GridDiagram& g, int col);
// Moves the top `shift` rows (mod n) to the bottom.
GridDiagram vertical_translate(const GridDiagram& g, int shift);
GridDiagram rotate180(const GridDiagram& g);

bool operator==(const GridDiagram& a, const GridDiagram& b);

}  // namespace palf
