#pragma once
#include <string>
#include <vector>

#include "palf/construct.hpp"
#include "palf/fiber.hpp"

namespace palf {

// V_1 acts first; the total monodromy is T(V_m) ... T(V_1).
struct MonodromyFactorization {
    RibbonFiber fiber;
    std::vector<Curve> curves;
};

MonodromyFactorization factorization_of(const PALF& p);

// x -> x + power <x,c> c
IMatrix transvection(const RibbonFiber& f, const IVector& c, int power = 1);
IMatrix total_monodromy(const MonodromyFactorization& fac);

// 0-based slot i: (V_i, V_i+1) -> (T(V_i)^-1 V_i+1, V_i)
MonodromyFactorization hurwitz_left(const MonodromyFactorization& fac, int i);
// 0-based slot i: (V_i, V_i+1) -> (V_i+1, T(V_i+1) V_i)
MonodromyFactorization hurwitz_right(const MonodromyFactorization& fac, int i);
// Swaps V_i and V_i+1; they must be certified disjoint.
MonodromyFactorization commute(const MonodromyFactorization& fac, int i);

struct MoveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ScriptMove {
    char op;   // 'L', 'R' or 'C'
    int index; // 1-based curve index as written
    int line;
};
std::vector<ScriptMove> parse_script(const std::string& text);
std::string script_text(const std::vector<ScriptMove>& moves);
// Applies one move with the script's meaning: L i moves V_i left, R i moves V_i right, C i swaps V_i, V_i+1.
MonodromyFactorization apply_move(const MonodromyFactorization& fac, const ScriptMove& m);

std::vector<std::string> curve_names(const MonodromyFactorization& fac);

}  // namespace palf
