#include "palf/fiber.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace palf {

int RibbonFiber::index_of(int label) const {
    auto it = std::lower_bound(labels.begin(), labels.end(), label);
    if (it == labels.end() || *it != label) throw std::out_of_range("unknown handle " + std::to_string(label));
    return int(it - labels.begin());
}

RibbonFiber from_boundary_word(std::vector<int> word, Base base) {
    std::map<int, int> count;
    for (int l : word) count[l]++;
    for (auto& [l, c] : count)
        if (c != 2) throw std::invalid_argument("handle " + std::to_string(l) + " appears " + std::to_string(c) + " times");
    if (base == Base::Annulus && !count.count(kHoleLabel)) throw std::invalid_argument("annulus fiber needs the hole handle");
    RibbonFiber f;
    f.base = base;
    f.word = std::move(word);
    for (auto& [l, c] : count) f.labels.push_back(l);
    return f;
}

int boundary_components(const std::vector<int>& word) {
    int m = (int)word.size();
    if (m == 0) return 1;
    std::vector<int> partner(m, -1);
    std::map<int, int> first;
    for (int i = 0; i < m; ++i) {
        auto it = first.find(word[i]);
        if (it == first.end()) {
            first[word[i]] = i;
        } else {
            partner[i] = it->second;
            partner[it->second] = i;
        }
    }
    // leave the arc after foot i, cross the band at foot i+1, continue after its partner
    std::vector<char> seen(m, 0);
    int cnt = 0;
    for (int s = 0; s < m; ++s) {
        if (seen[s]) continue;
        ++cnt;
        for (int i = s; !seen[i]; i = partner[(i + 1) % m]) seen[i] = 1;
    }
    return cnt;
}

int euler_characteristic(const RibbonFiber& f) { return 1 - f.handle_count(); }
int boundary_components(const RibbonFiber& f) { return boundary_components(f.word); }
int genus(const RibbonFiber& f) {
    int chi = euler_characteristic(f), b = boundary_components(f);
    if ((2 - b - chi) % 2) throw std::logic_error("odd genus numerator");
    return (2 - b - chi) / 2;
}

namespace {
std::vector<std::pair<int, int>> foot_positions(const RibbonFiber& f) {
    std::vector<std::pair<int, int>> pos(f.labels.size(), {-1, -1});
    for (int i = 0; i < (int)f.word.size(); ++i) {
        auto& p = pos[f.index_of(f.word[i])];
        (p.first < 0 ? p.first : p.second) = i;
    }
    return pos;
}
}  // namespace

IMatrix intersection_form(const RibbonFiber& f) {
    int k = f.handle_count();
    auto pos = foot_positions(f);
    IMatrix om = IMatrix::Zero(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            auto [i1, i2] = pos[i];
            auto [j1, j2] = pos[j];
            if (i1 < j1 && j1 < i2 && i2 < j2) om(i, j) = 1;
            else if (j1 < i1 && i1 < j2 && j2 < i2) om(i, j) = -1;
        }
    return om;
}

IVector class_of(const RibbonFiber& f, const std::vector<std::pair<int, int>>& traversals) {
    IVector v = IVector::Zero(f.handle_count());
    for (auto [l, s] : traversals) v(f.index_of(l)) += s;
    return v;
}

Curve handle_curve(const RibbonFiber& f, int label, const std::string& name) {
    Curve c;
    c.name = name.empty() ? "C" + std::to_string(label) : name;
    c.traversals = {{label, 1}};
    c.homology = class_of(f, c.traversals);
    return c;
}

long long pairing(const RibbonFiber& f, const IVector& a, const IVector& b) {
    if (a.size() != f.handle_count() || b.size() != f.handle_count()) throw std::invalid_argument("class does not live on this fiber");
    return a.dot(intersection_form(f) * b);
}

long long pairing(const RibbonFiber& f, const Curve& a, const Curve& b) { return pairing(f, a.homology, b.homology); }

bool disjoint(const RibbonFiber& f, const Curve& a, const Curve& b) {
    if (!a.embedded || !b.embedded || a.traversals.empty() || b.traversals.empty()) return false;
    std::vector<int> la, lb;
    for (auto& t : a.traversals) la.push_back(t.first);
    for (auto& t : b.traversals) lb.push_back(t.first);
    for (int x : la)
        if (std::find(lb.begin(), lb.end(), x) != lb.end()) return false;
    // the feet of each curve must form one block of the cyclic word restricted to both curves
    std::vector<int> side;
    for (int l : f.word) {
        if (std::find(la.begin(), la.end(), l) != la.end()) side.push_back(0);
        else if (std::find(lb.begin(), lb.end(), l) != lb.end()) side.push_back(1);
    }
    int changes = 0;
    for (size_t i = 0; i < side.size(); ++i) changes += side[i] != side[(i + 1) % side.size()];
    return changes <= 2;
}

SlideResult slide_handle_foot(const RibbonFiber& f, int i, int j) {
    if (i == j) throw std::invalid_argument("cannot slide a handle over itself");
    const auto& w = f.word;
    int m = (int)w.size();
    int M = -1, J1 = -1;
    bool before = false;
    for (int p = 0; p + 1 < m && M < 0; ++p) {
        if (w[p] == i && w[p + 1] == j) M = p, J1 = p + 1, before = true;
        else if (w[p] == j && w[p + 1] == i) M = p + 1, J1 = p, before = false;
    }
    if (M < 0) throw std::invalid_argument("feet of " + std::to_string(i) + " and " + std::to_string(j) + " are not adjacent");
    int F = -1, J2 = -1;
    for (int p = 0; p < m; ++p) {
        if (w[p] == i && p != M) F = p;
        if (w[p] == j && p != J1) J2 = p;
    }
    // remove the moving foot, then reinsert it on the far side of the other j foot
    std::vector<int> rest;
    int j2_rest = -1, f_rest = -1;
    for (int p = 0; p < m; ++p) {
        if (p == M) continue;
        if (p == J2) j2_rest = (int)rest.size();
        if (p == F) f_rest = (int)rest.size();
        rest.push_back(w[p]);
    }
    int ins = before ? j2_rest + 1 : j2_rest;
    std::vector<int> nw = rest;
    nw.insert(nw.begin() + ins, i);
    if (f_rest >= ins) ++f_rest;

    int s_i = F < M ? 1 : -1;
    int s_j = J1 < J2 ? 1 : -1;
    if (ins < f_rest) s_i = -s_i, s_j = -s_j;

    SlideResult res;
    res.fiber = from_boundary_word(nw, f.base);
    int k = f.handle_count();
    res.basis = IMatrix::Identity(k, k);
    int ii = f.index_of(i), jj = f.index_of(j);
    res.basis(ii, ii) = s_i;
    res.basis(jj, ii) = s_j;
    return res;
}

std::vector<int> min_rotation(const std::vector<int>& word) {
    std::vector<int> best = word;
    for (size_t s = 1; s < word.size(); ++s) {
        std::vector<int> r(word.begin() + s, word.end());
        r.insert(r.end(), word.begin(), word.begin() + s);
        if (r < best) best = r;
    }
    return best;
}

std::vector<int> relabel_first_appearance(const std::vector<int>& word) {
    std::map<int, int> mp;
    std::vector<int> out;
    for (int l : word) {
        auto it = mp.find(l);
        if (it == mp.end()) it = mp.emplace(l, (int)mp.size() + 1).first;
        out.push_back(it->second);
    }
    return out;
}

std::vector<int> canonical_word(const std::vector<int>& word, bool reflect) {
    std::vector<int> best;
    std::vector<std::vector<int>> sources{word};
    if (reflect) sources.emplace_back(word.rbegin(), word.rend());
    for (auto& src : sources)
        for (size_t s = 0; s < std::max<size_t>(src.size(), 1); ++s) {
            std::vector<int> r(src.begin() + s, src.end());
            r.insert(r.end(), src.begin(), src.begin() + s);
            r = relabel_first_appearance(r);
            if (best.empty() || r < best) best = r;
        }
    return best;
}

bool cyclic_equal(const std::vector<int>& a, const std::vector<int>& b) {
    return a.size() == b.size() && min_rotation(a) == min_rotation(b);
}

std::string word_string(const std::vector<int>& word) {
    std::ostringstream o;
    o << '(';
    for (size_t i = 0; i < word.size(); ++i) {
        if (i) o << ',';
        if (word[i] == kHoleLabel) o << "h0";
        else o << word[i];
    }
    o << ')';
    return o.str();
}

}  // namespace palf
