#pragma once
#include <stdexcept>
#include <string>
#include <vector>

#include "palf/fiber.hpp"
#include "palf/grid.hpp"
#include "palf/scene.hpp"

namespace palf {

enum class Strategy { Comb, Flex, Rtl };
const char* strategy_name(Strategy s);
Strategy parse_strategy(const std::string& s);
Direction direction_of(Strategy s);

struct ConstructError : std::runtime_error {
    int column;  // 0-based blocking column, -1 if none
    ConstructError(int column, const std::string& msg);
};

struct ConstructOptions {
    Strategy strategy = Strategy::Flex;
    bool include_c0 = true;
    int notch_depth = 6;  // doors one notch may pass under
};

struct PALF {
    GridDiagram grid;
    Strategy strategy = Strategy::Flex;
    Base base = Base::Disk;
    std::vector<int> lifted;  // 0-based columns, ascending
    std::vector<std::string> lift_log;
    Scene scene;                // root placed
    std::vector<Notch> notches; // per scene foot
    std::vector<int> foot_order;
    RibbonFiber fiber;
    std::vector<Curve> factorization;
    int c0_count = 0;
    std::vector<int> windings;  // per component, around the hole
};

// Rules (a) and (b) only: corner cusp or crossing.
std::vector<char> basic_lifts(const GridDiagram& g, Direction dir, std::vector<std::string>* log = nullptr);
// Full rule set including reachability restarts.
std::vector<int> decide_lifts(const GridDiagram& g, Strategy strategy);

PALF construct_palf(const GridDiagram& g, const ConstructOptions& opts = {});

// Signed number of times each component crosses the hole ray, clockwise positive.
std::vector<int> hole_windings(const GridDiagram& g, Direction dir = Direction::LeftToRight);

// C0 of one component on the finished fiber: its band traversals, class and surface framing.
// word_feet[i] is the foot at position i of fiber.word (hole feet excluded from the lookup).
Curve embed_c0(const GridDiagram& g, const RibbonFiber& fiber, const std::vector<Foot>& word_feet, const std::vector<char>& lifted,
               Direction dir, int component);

// Boundary word with every handle relabeled by its column in the unrotated diagram.
std::vector<int> rotated_labels(const std::vector<int>& word, int n);
bool rtl_equivalence_check(const GridDiagram& g);

}  // namespace palf
