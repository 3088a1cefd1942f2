#include <stdexcept>

#include "palf/verify.hpp"

namespace palf {

namespace {
GridDiagram from_one_based(const std::vector<int>& X, const std::vector<int>& O) {
    std::vector<int> xs, os;
    for (int c : X) xs.push_back(c - 1);
    for (int c : O) os.push_back(c - 1);
    return make_grid(xs, os);
}
}  // namespace

// Positive twist knots with s half twists, reduced to grid size s + 4.
GridDiagram twist_grid(int s) {
    switch (s) {
        case 1: return from_one_based({1, 2, 3, 4, 5}, {3, 4, 5, 1, 2});
        case 2: return from_one_based({2, 5, 6, 4, 3, 1}, {6, 1, 3, 2, 5, 4});
        case 3: return from_one_based({3, 4, 6, 5, 7, 1, 2}, {5, 1, 3, 2, 4, 6, 7});
        case 4: return from_one_based({7, 3, 2, 5, 4, 8, 1, 6}, {5, 6, 4, 3, 1, 2, 7, 8});
        case 5: return from_one_based({9, 1, 7, 8, 5, 6, 2, 3, 4}, {3, 8, 9, 6, 7, 4, 5, 1, 2});
        case 6: return from_one_based({5, 4, 9, 1, 10, 7, 8, 3, 6, 2}, {3, 10, 2, 5, 8, 9, 6, 7, 1, 4});
        case 7: return from_one_based({3, 10, 11, 8, 9, 6, 7, 4, 5, 1, 2}, {1, 2, 9, 10, 7, 8, 5, 6, 3, 4, 11});
        case 8: return from_one_based({7, 2, 6, 5, 12, 3, 1, 10, 11, 8, 9, 4}, {3, 5, 4, 1, 2, 6, 11, 12, 9, 10, 7, 8});
    }
    throw std::out_of_range("twist grids exist for s = 1..8");
}

GridDiagram torus_grid(int n) {
    if (n < 1) throw std::out_of_range("n must be positive");
    int N = 2 * n + 3;
    std::vector<int> xs, os;
    for (int r = 0; r < N; ++r) {
        xs.push_back(r);
        os.push_back((r + 2) % N);
    }
    return make_grid(xs, os);
}

}  // namespace palf
