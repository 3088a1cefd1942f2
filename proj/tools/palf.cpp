#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include "palf/construct.hpp"
#include "palf/monodromy.hpp"
#include "palf/openbook.hpp"
#include "palf/report.hpp"
#include "palf/svg.hpp"
#include "palf/verify.hpp"

using namespace palf;

namespace {

constexpr int kOk = 0, kFail = 1, kInput = 2;

void emit(const Json& j, const std::string& out) {
    std::string text = dump(j);
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw InputError(0, "cannot write " + out);
    f << text;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InputError(0, "cannot write " + path);
    f << text;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw InputError(0, "cannot read " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

Json header(const std::string& cmd, const std::string& path, const GridDiagram& g) {
    Json j = document(cmd);
    j["input"] = {{"path", path}, {"grid", grid_json(g)}};
    j["invariants"] = invariants_json(g);
    return j;
}

struct Ranges {
    int s_lo = 0, s_hi = -1, n_lo = 0, n_hi = -1;
};

Ranges parse_families(const std::string& text) {
    Ranges r;
    std::regex part(R"(\s*([sn])\s*=\s*(\d+)\s*\.\.\s*(\d+)\s*)");
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::smatch m;
        if (!std::regex_match(item, m, part)) throw InputError(0, "bad --families entry '" + item + "'");
        int lo = std::stoi(m[2]), hi = std::stoi(m[3]);
        if (m[1] == "s") r.s_lo = lo, r.s_hi = hi;
        else r.n_lo = lo, r.n_hi = hi;
    }
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"PALF construction from grid diagrams"};
    app.require_subcommand(1);

    std::string grid_path, out_path, svg_path, strategy = "flex", families, openbook_path, script_path;
    bool no_c0 = false, with_c0 = false;
    int depth = 6, search_len = 6;

    auto* inv = app.add_subcommand("invariants", "grid invariants");
    inv->add_option("grid", grid_path, "grid file")->required();
    inv->add_option("--out", out_path, "write JSON here instead of stdout");

    auto* con = app.add_subcommand("construct", "build the Lefschetz fibration");
    con->add_option("grid", grid_path, "grid file")->required();
    con->add_option("--strategy", strategy, "comb, flex or rtl")->check(CLI::IsMember({"comb", "flex", "rtl"}));
    con->add_flag("--no-c0", no_c0, "omit the C0 cycles (the SF fibration)");
    con->add_option("--depth", depth, "doors one notch may pass under");
    con->add_option("--out", out_path, "write JSON here instead of stdout");
    con->add_option("--svg", svg_path, "also write an SVG drawing");

    auto* ver = app.add_subcommand("verify", "run every check");
    ver->add_option("grid", grid_path, "grid file");
    ver->add_option("--strategy", strategy, "comb, flex or rtl")->check(CLI::IsMember({"comb", "flex", "rtl"}));
    ver->add_option("--families", families, "family sweep, e.g. s=1..8,n=1..8");
    ver->add_option("--openbook", openbook_path, "open book fixture to compare the SF fibration with");
    ver->add_option("--search", search_len, "generator bound for the open book identification");
    ver->add_option("--out", out_path, "write JSON here instead of stdout");

    auto* hur = app.add_subcommand("hurwitz", "apply elementary transformations");
    hur->add_option("grid", grid_path, "grid file")->required();
    hur->add_option("script", script_path, "move script (L i, R i, C i)")->required();
    hur->add_option("--strategy", strategy, "comb, flex or rtl")->check(CLI::IsMember({"comb", "flex", "rtl"}));
    hur->add_flag("--c0", with_c0, "keep the C0 cycles in the factorization");
    hur->add_option("--out", out_path, "write JSON here instead of stdout");

    auto* ren = app.add_subcommand("render", "draw the construction");
    ren->add_option("grid", grid_path, "grid file")->required();
    ren->add_option("--svg", svg_path, "output SVG")->required();
    ren->add_option("--strategy", strategy, "comb, flex or rtl")->check(CLI::IsMember({"comb", "flex", "rtl"}));
    ren->add_flag("--no-c0", no_c0, "omit the C0 cycles");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kInput;
    }

    try {
        Strategy st = parse_strategy(strategy);
        if (*inv) {
            GridDiagram g = load_grid(grid_path);
            emit(header("invariants", grid_path, g), out_path);
            return kOk;
        }
        if (*con) {
            GridDiagram g = load_grid(grid_path);
            PALF p = construct_palf(g, {st, !no_c0, depth});
            Json j = header("construct", grid_path, g);
            j["construction"] = palf_json(p);
            emit(j, out_path);
            if (!svg_path.empty()) write_file(svg_path, render_svg(p));
            return kOk;
        }
        if (*ren) {
            GridDiagram g = load_grid(grid_path);
            write_file(svg_path, render_svg(construct_palf(g, {st, !no_c0})));
            return kOk;
        }
        if (*ver) {
            if (grid_path.empty() && families.empty()) throw InputError(0, "verify needs a grid file or --families");
            Json j = document("verify");
            VerificationReport all;
            if (!grid_path.empty()) {
                GridDiagram g = load_grid(grid_path);
                j["input"] = {{"path", grid_path}, {"grid", grid_json(g)}};
                j["invariants"] = invariants_json(g);
                j["construction"] = palf_json(construct_palf(g, {st, true}));
                all.merge(verify_grid(g, st));
                if (!openbook_path.empty()) {
                    OpenBookFixture fx = load_openbook(openbook_path);
                    PALF sf = construct_palf(g, {Strategy::Flex, false});
                    Identification id;
                    VerificationReport ob = compare(sf, fx, search_len, &id);
                    j["openbook"] = {{"fixture", openbook_path},
                                     {"level", "homology"},
                                     {"identified", id.found},
                                     {"generators", id.word},
                                     {"map", matrix_json(id.map)}};
                    all.merge(ob, "open book ");
                }
            }
            if (!families.empty()) {
                Ranges r = parse_families(families);
                if (r.s_hi >= r.s_lo) all.merge(check_twist_family(r.s_lo, r.s_hi));
                if (r.n_hi >= r.n_lo) all.merge(check_torus_family(r.n_lo, r.n_hi));
            }
            j["verification"] = report_json(all);
            emit(j, out_path);
            for (auto& name : all.failures()) std::cerr << "FAILED: " << name << "\n";
            return all.pass() ? kOk : kFail;
        }
        if (*hur) {
            GridDiagram g = load_grid(grid_path);
            auto moves = parse_script(read_file(script_path));
            PALF p = construct_palf(g, {st, with_c0});
            MonodromyFactorization fac = factorization_of(p);
            const IMatrix M0 = total_monodromy(fac);
            Json j = header("hurwitz", grid_path, g);
            j["script"] = script_path;
            j["initial"] = factorization_json(fac);
            Json hist = Json::array();
            int rc = kOk;
            for (auto& m : moves) {
                std::string mv = std::string(1, m.op) + " " + std::to_string(m.index);
                Json step = {{"move", mv}, {"line", m.line}};
                try {
                    fac = apply_move(fac, m);
                } catch (const MoveError& e) {
                    step["error"] = e.what();
                    hist.push_back(step);
                    rc = kFail;
                    break;
                } catch (const std::out_of_range& e) {
                    throw InputError(m.line, e.what());
                }
                step["order"] = curve_names(fac);
                step["monodromy_invariant"] = total_monodromy(fac) == M0;
                if (total_monodromy(fac) != M0) rc = kFail;
                hist.push_back(step);
            }
            j["history"] = hist;
            j["final"] = factorization_json(fac);
            j["total_monodromy"] = matrix_json(total_monodromy(fac));
            emit(j, out_path);
            if (rc != kOk) std::cerr << "hurwitz script failed\n";
            return rc;
        }
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInput;
    } catch (const ConstructError& e) {
        std::cerr << "construction failed: " << e.what() << "\n";
        return kFail;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    }
    return kOk;
}
