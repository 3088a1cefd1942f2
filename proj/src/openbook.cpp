#include "palf/openbook.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <map>
#include <sstream>

namespace palf {

namespace {
std::string vec_string(const IVector& v) {
    std::string s = "[";
    for (int i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v(i));
    return s + "]";
}
}  // namespace

RibbonFiber OpenBookFixture::page() const { return from_boundary_word(page_word, Base::Disk); }

OpenBookFixture parse_openbook(const std::string& text) {
    OpenBookFixture fx;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    std::vector<std::string> order_names;
    int order_line = 0;
    std::vector<std::vector<long long>> rows;
    while (std::getline(in, raw)) {
        ++lineno;
        auto first = raw.find_first_not_of(" \t\r");
        if (first == std::string::npos || raw[first] == '#') continue;
        std::istringstream ls(raw);
        std::string key;
        ls >> key;
        if (key == "page") {
            int l;
            while (ls >> l) fx.page_word.push_back(l);
            if (!ls.eof()) throw InputError(lineno, "bad page word");
        } else if (key == "curve") {
            std::string name;
            if (!(ls >> name)) throw InputError(lineno, "curve needs a name");
            std::vector<long long> v;
            long long x;
            while (ls >> x) v.push_back(x);
            if (!ls.eof()) throw InputError(lineno, "bad curve class");
            fx.names.push_back(name);
            rows.push_back(v);
        } else if (key == "order") {
            std::string name;
            while (ls >> name) order_names.push_back(name);
            order_line = lineno;
        } else if (key == "convention") {
            ls >> fx.convention;
            if (fx.convention != "left-to-right" && fx.convention != "right-to-left")
                throw InputError(lineno, "convention must be left-to-right or right-to-left");
        } else {
            throw InputError(lineno, "unknown directive '" + key + "'");
        }
    }
    if (fx.page_word.empty()) throw InputError(0, "missing page word");
    if (fx.convention.empty()) throw InputError(0, "missing convention");
    RibbonFiber page;
    try {
        page = fx.page();
    } catch (const std::invalid_argument& e) {
        throw InputError(0, std::string("page word: ") + e.what());
    }
    for (size_t i = 0; i < rows.size(); ++i) {
        if ((int)rows[i].size() != page.handle_count())
            throw InputError(0, "curve " + fx.names[i] + " has the wrong number of coordinates");
        IVector v(page.handle_count());
        for (int j = 0; j < page.handle_count(); ++j) v(j) = rows[i][j];
        fx.classes.push_back(v);
    }
    for (auto& nm : order_names) {
        auto it = std::find(fx.names.begin(), fx.names.end(), nm);
        if (it == fx.names.end()) throw InputError(order_line, "order names unknown curve " + nm);
        fx.order.push_back(int(it - fx.names.begin()));
    }
    // a right-to-left product lists the first factor last
    if (fx.convention == "right-to-left") std::reverse(fx.order.begin(), fx.order.end());
    return fx;
}

OpenBookFixture load_openbook(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw InputError(0, "cannot read " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_openbook(ss.str());
}

MonodromyFactorization slide_moves(const PALF& sf) {
    MonodromyFactorization fac = factorization_of(sf);
    int k = (int)fac.curves.size();
    for (int i = k - 1; i >= 2; --i) fac = apply_move(fac, {'L', i, 0});
    return fac;
}

Identification identify(const RibbonFiber& page, const MonodromyFactorization& ours, const std::vector<IVector>& theirs, int max_len) {
    const int k = page.handle_count();
    IMatrix M = total_monodromy(ours);
    IMatrix N = IMatrix::Identity(k, k);
    for (auto& c : theirs) N = transvection(page, c, 1) * N;

    std::vector<IMatrix> gens;
    std::vector<std::string> gen_names;
    for (int i = 0; i < k; ++i)
        for (int p : {1, -1}) {
            IVector e = IVector::Zero(k);
            e(i) = 1;
            gens.push_back(transvection(page, e, p));
            gen_names.push_back("T(e" + std::to_string(page.labels[i]) + (p > 0 ? ")" : ")^-1"));
        }

    auto key = [](const IMatrix& m) { return std::vector<long long>(m.data(), m.data() + m.size()); };
    struct Node {
        IMatrix m;
        std::vector<std::string> word;
    };
    auto factorwise = [&](const IMatrix& P) {
        if (ours.curves.size() != theirs.size()) return false;
        for (size_t i = 0; i < theirs.size(); ++i)
            if (P * ours.curves[i].homology != theirs[i]) return false;
        return true;
    };

    Identification best;
    std::map<std::vector<long long>, bool> seen;
    std::vector<Node> level{{IMatrix::Identity(k, k), {}}};
    seen[key(level[0].m)] = true;
    for (int len = 0; len <= max_len; ++len) {
        for (auto& nd : level) {
            if (nd.m * M != N * nd.m) continue;
            bool fw = factorwise(nd.m);
            if (!best.found || (fw && !best.factorwise)) best = {true, fw, nd.word, nd.m};
            if (fw) return best;
        }
        if (best.found) return best;
        std::vector<Node> next;
        for (auto& nd : level)
            for (size_t g = 0; g < gens.size(); ++g) {
                IMatrix m = gens[g] * nd.m;
                if (seen.emplace(key(m), true).second) {
                    auto w = nd.word;
                    w.insert(w.begin(), gen_names[g]);
                    next.push_back({m, w});
                }
            }
        level = std::move(next);
    }
    return best;
}

VerificationReport compare(const PALF& sf, const OpenBookFixture& fx, int max_len, Identification* out) {
    RibbonFiber page = fx.page();
    if (page.word != sf.fiber.word)
        throw InputError(0, "fixture page " + word_string(page.word) + " is not presented in the fiber word " + word_string(sf.fiber.word));
    VerificationReport r;
    r.add("page genus", genus(sf.fiber), genus(page));
    r.add("page boundary components", boundary_components(sf.fiber), boundary_components(page));
    if ((int)fx.order.size() != (int)sf.factorization.size())
        throw InputError(0, "fixture lists " + std::to_string(fx.order.size()) + " curves, the fibration has " +
                                std::to_string(sf.factorization.size()));
    std::vector<IVector> theirs;
    for (int i : fx.order) theirs.push_back(fx.classes[i]);
    MonodromyFactorization ours = slide_moves(sf);
    Identification id = identify(page, ours, theirs, max_len);
    r.add_flag("homological monodromy identified", id.found, "no conjugating map within " + std::to_string(max_len) + " generators");
    if (id.found) r.add_flag("factor classes identified", id.factorwise);
    if (out) *out = id;
    return r;
}

VerificationReport slide_sequence(const PALF& sf, std::vector<SlideStep>* steps) {
    VerificationReport r;
    MonodromyFactorization fac = factorization_of(sf);
    const int k = (int)fac.curves.size();
    if (sf.c0_count != 0 || k < 3) throw std::invalid_argument("slide sequence needs an SF factorization (C_k, ..., C_1)");
    r.add("page genus", 1, genus(fac.fiber));
    r.add("page boundary components", k - 1, boundary_components(fac.fiber));
    const IMatrix M0 = total_monodromy(fac);
    const RibbonFiber& f = fac.fiber;

    // expected class of C2 after passing left over C3, ..., Ck
    IVector c2 = fac.curves[k - 2].homology;
    for (int i = k - 3; i >= 0; --i) c2 = transvection(f, fac.curves[i].homology, -1) * c2;

    std::vector<ScriptMove> moves;
    for (int i = k - 1; i >= 2; --i) moves.push_back({'L', i, 0});
    // then reverse the block C_k ... C_3 by adjacent swaps
    for (int pass = 0; pass < k - 3; ++pass)
        for (int i = 2; i < k - 1 - pass; ++i) moves.push_back({'C', i, 0});

    bool ok = true;
    for (auto& m : moves) {
        SlideStep st;
        st.move = std::string(1, m.op) + " " + std::to_string(m.index);
        try {
            fac = apply_move(fac, m);
            st.invariant = total_monodromy(fac) == M0;
            r.add_flag(st.move + " monodromy invariant", st.invariant);
        } catch (const std::exception& ex) {
            st.error = ex.what();
            r.add_flag(st.move + " allowed", false, ex.what());
            ok = false;
        }
        st.names = curve_names(fac);
        if (steps) steps->push_back(st);
        if (!ok) break;
        if (m.op == 'L' && m.index == 2) r.add("C2' class", vec_string(c2), vec_string(fac.curves[0].homology));
    }
    std::string expect = "(" + fac.curves[0].name + ",C3";
    for (int i = 4; i <= k; ++i) expect += ",C" + std::to_string(i);
    expect += ",C1)";
    std::string got = "(";
    for (int i = 0; i < k; ++i) got += (i ? "," : "") + fac.curves[i].name;
    got += ")";
    r.add("final order", expect, got);
    return r;
}

}  // namespace palf
