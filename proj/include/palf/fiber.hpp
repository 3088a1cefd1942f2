#pragma once
#include <Eigen/Core>
#include <optional>
#include <string>
#include <vector>

namespace palf {

using IMatrix = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;
using IVector = Eigen::Matrix<long long, Eigen::Dynamic, 1>;

enum class Base { Disk, Annulus };

// Label of the distinguished handle that realizes the annulus hole.
constexpr int kHoleLabel = 0;

// Disk plus untwisted bands. `word` is read counterclockwise from a fixed basepoint;
// the basis of H1 is one class per label, in ascending label order.
struct RibbonFiber {
    Base base = Base::Disk;
    std::vector<int> word;
    std::vector<int> labels;

    int handle_count() const { return (int)labels.size(); }
    int index_of(int label) const;
};

RibbonFiber from_boundary_word(std::vector<int> word, Base base = Base::Disk);

int boundary_components(const std::vector<int>& word);
int euler_characteristic(const RibbonFiber& f);
int boundary_components(const RibbonFiber& f);
int genus(const RibbonFiber& f);

// <e_i,e_j> = +1 when the feet read i j i j from the basepoint, -1 for j i j i.
IMatrix intersection_form(const RibbonFiber& f);

struct Curve {
    std::string name;
    // signed band traversals in order; empty for homology-only curves
    std::vector<std::pair<int, int>> traversals;
    IVector homology;
    bool embedded = true;
    std::optional<int> surface_framing;
    std::optional<int> framing;
};

// Core of one band closed up through the disk.
Curve handle_curve(const RibbonFiber& f, int label, const std::string& name = "");
IVector class_of(const RibbonFiber& f, const std::vector<std::pair<int, int>>& traversals);

long long pairing(const RibbonFiber& f, const IVector& a, const IVector& b);
long long pairing(const RibbonFiber& f, const Curve& a, const Curve& b);

// Combinatorial certificate that the two curves have disjoint representatives.
bool disjoint(const RibbonFiber& f, const Curve& a, const Curve& b);

struct SlideResult {
    RibbonFiber fiber;
    // column l = new class of the l-th basis handle, in the old basis
    IMatrix basis;
};
// Slides a foot of handle i, adjacent to a foot of j, across band j.
SlideResult slide_handle_foot(const RibbonFiber& f, int i, int j);

std::vector<int> min_rotation(const std::vector<int>& word);
std::vector<int> relabel_first_appearance(const std::vector<int>& word);
// Relabel, then least rotation; with reflect also the reversed word.
std::vector<int> canonical_word(const std::vector<int>& word, bool reflect = false);
bool cyclic_equal(const std::vector<int>& a, const std::vector<int>& b);

std::string word_string(const std::vector<int>& word);

}  // namespace palf
