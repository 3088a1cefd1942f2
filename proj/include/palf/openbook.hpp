#pragma once
#include <string>
#include <vector>

#include "palf/construct.hpp"
#include "palf/monodromy.hpp"
#include "palf/verify.hpp"

namespace palf {

struct OpenBookFixture {
    std::vector<int> page_word;
    std::vector<std::string> names;     // curve names in the file
    std::vector<IVector> classes;       // same order as names
    std::vector<int> order;             // indices into names, first applied first
    std::string convention;             // "left-to-right" or "right-to-left", as printed in the source
    RibbonFiber page() const;
};

OpenBookFixture parse_openbook(const std::string& text);
OpenBookFixture load_openbook(const std::string& path);

struct Identification {
    bool found = false;
    bool factorwise = false;        // also maps each factor class to the fixture's
    std::vector<std::string> word;  // generators, rightmost applied first
    IMatrix map;
};

// The factorization after the two elementary moves on C2.
MonodromyFactorization slide_moves(const PALF& sf);

// Searches products of at most max_len transvections along basis classes for a map
// conjugating the total monodromies.
Identification identify(const RibbonFiber& page, const MonodromyFactorization& ours, const std::vector<IVector>& theirs, int max_len);

VerificationReport compare(const PALF& sf, const OpenBookFixture& fx, int max_len = 6, Identification* out = nullptr);

// Runs L 3, L 2, C 2 (generalized to the torus grids) and records each invariance check.
struct SlideStep {
    std::string move;
    std::vector<std::string> names;
    bool invariant = false;
    std::string error;
};
VerificationReport slide_sequence(const PALF& sf, std::vector<SlideStep>* steps = nullptr);

}  // namespace palf
