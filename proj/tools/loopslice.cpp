#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "loopslice/acceptance.hpp"
#include "loopslice/branching.hpp"
#include "loopslice/errors.hpp"
#include "loopslice/graded.hpp"
#include "loopslice/invariants.hpp"
#include "loopslice/json_io.hpp"
#include "loopslice/lattice.hpp"

namespace {

using loopslice::io::json;

constexpr int kExitBadInput = 2;
constexpr int kExitPrecondition = 3;

struct RunConfig {
    long precision = 8;
    std::uint64_t seed = 0;
    std::string output = "text"; // text | json
};

json read_json_input(const std::string& path) {
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw loopslice::precondition_error("cannot open input file: " + path);
    return json::parse(in);
}

void emit(const RunConfig& cfg, const json& j, const std::string& text) {
    if (cfg.output == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

loopslice::Poly poly_from_arg(const std::string& arg) {
    return loopslice::io::poly_from_json(json::parse(arg));
}

std::string poly_text(const loopslice::Poly& p) { return p.str("x"); }

int cmd_normal_form(const RunConfig& cfg, const std::string& input) {
    const loopslice::LatticePair pair = loopslice::io::pair_from_json(read_json_input(input));
    if (pair.context == loopslice::GroupContext::GL) {
        const auto nf = loopslice::gl_normal_form(pair);
        json out{{"context", "gl"},
                 {"coweight", loopslice::io::coweight_to_json(nf.coweight)},
                 {"v", loopslice::io::fmatrix_to_json(nf.normal_form.v, cfg.precision)},
                 {"vstar", loopslice::io::fmatrix_to_json(nf.normal_form.vstar, cfg.precision)}};
        emit(cfg, out, "coweight " + nf.coweight.str() + "\n");
        return 0;
    }
    const auto red = loopslice::sp_so_reduce(pair.v);
    json out{{"context", "osp"}, {"coweight", loopslice::io::coweight_to_json(red.coweight)}};
    emit(cfg, out, "coweight " + red.coweight.str() + "\n");
    return 0;
}

int cmd_orbit_index(const RunConfig& cfg, const std::string& input) {
    const loopslice::LatticePair pair = loopslice::io::pair_from_json(read_json_input(input));
    const loopslice::Coweight w = pair.context == loopslice::GroupContext::GL
                                      ? loopslice::gl_normal_form(pair).coweight
                                      : loopslice::sp_so_normal_form(pair.v);
    emit(cfg, json{{"coweight", loopslice::io::coweight_to_json(w)}},
         "coweight " + w.str() + "\n");
    return 0;
}

int cmd_slice_show(const RunConfig& cfg, int n, int m) {
    const loopslice::SliceChart chart = loopslice::build_slice_chart(n, m);
    const auto gen = chart.generic_matrix();
    json rows = json::array();
    std::ostringstream text;
    for (const auto& row : gen) {
        json jr = json::array();
        for (const auto& entry : row) {
            jr.push_back(entry.str());
            text << entry.str() << "\t";
        }
        rows.push_back(std::move(jr));
        text << "\n";
    }
    json gradings = json::array();
    text << "gradings:\n";
    for (const auto& c : chart.coords) {
        gradings.push_back(json{{"coordinate", c.name}, {"degree", c.grading}});
        text << "  " << c.name << ": " << c.grading << "\n";
    }
    json cs = json::array();
    for (const auto& c : chart.c) cs.push_back(c.str());
    emit(cfg, json{{"n", n}, {"m", m}, {"matrix", rows}, {"gradings", gradings}, {"c", cs}},
         text.str());
    return 0;
}

int cmd_invariants(const RunConfig& cfg, const std::string& input) {
    const loopslice::SlicePoint pt = loopslice::io::slice_point_from_json(read_json_input(input));
    const loopslice::SliceChart chart = loopslice::build_slice_chart(pt.n, pt.m);
    const auto inv = loopslice::invariant_map(chart, pt);
    emit(cfg,
         json{{"f", loopslice::io::poly_to_json(inv.f)}, {"g", loopslice::io::poly_to_json(inv.g)}},
         "f = " + poly_text(inv.f) + "\ng = " + poly_text(inv.g) + "\n");
    return 0;
}

int cmd_fiber(const RunConfig& cfg, const std::string& fs, const std::string& gs) {
    const loopslice::Poly f = poly_from_arg(fs);
    const loopslice::Poly g = poly_from_arg(gs);
    loopslice::FiberDescription fd;
    if (loopslice::discriminant(f).is_zero())
        fd = loopslice::double_root_fiber(f, g);
    else if (loopslice::resultant(f, g).is_zero())
        fd = loopslice::resultant_stratum_fiber(f, g);
    else
        fd = loopslice::generic_fiber(f, g);
    const json out = loopslice::io::fiber_to_json(fd);
    std::ostringstream text;
    text << "stratum: " << out.at("stratum").get<std::string>() << " (" << fd.structure << ")\n"
         << "base point: " << loopslice::io::slice_point_to_json(fd.base).dump() << "\n";
    emit(cfg, out, text.str());
    return 0;
}

int cmd_stalk(const RunConfig& cfg, int n, int m) {
    const loopslice::GradedDims st = loopslice::stalk_ic(n, m);
    const auto shifts = loopslice::decomposition_remainder(n, m);
    json out{{"n", n},
             {"m", m},
             {"stalk", loopslice::io::graded_dims_to_json(st)},
             {"remainder_shifts", shifts}};
    std::ostringstream text;
    text << "stalk dims:";
    for (const auto& [d, v] : st) text << " [" << d << "]=" << v;
    text << "\nremainder shifts:";
    for (long s : shifts) text << " " << s;
    text << "\n";
    emit(cfg, out, text.str());
    return 0;
}

int cmd_branch(const RunConfig& cfg, const std::string& weight, int m, int n) {
    loopslice::Weight lambda;
    {
        std::istringstream is(weight);
        std::string tok;
        while (std::getline(is, tok, ',')) lambda.push_back(std::stol(tok));
    }
    const auto gm = loopslice::graded_restriction(lambda, m, n);
    const json out = loopslice::io::multiplicity_to_json(gm);
    std::ostringstream text;
    for (auto it = gm.rbegin(); it != gm.rend(); ++it) {
        text << "weight (";
        for (size_t i = 0; i < it->first.size(); ++i) text << (i ? "," : "") << it->first[i];
        text << "):";
        for (const auto& [e, c] : it->second) text << " " << c << "*q^" << e;
        text << "\n";
    }
    emit(cfg, json{{"m", m}, {"n", n}, {"multiplicities", out}}, text.str());
    return 0;
}

int cmd_algebra_check(const RunConfig& cfg, int m) {
    const auto rep = loopslice::gl1_algebra_check_report(m, 30);
    json out{{"m", m}, {"ok", rep.ok()}, {"series_order", 30}};
    if (!rep.series_ok) out["first_mismatch_degree"] = rep.first_mismatch;
    emit(cfg, out,
         std::string(rep.ok() ? "ok" : "MISMATCH") + " (m = " + std::to_string(m) +
             ", order 30)\n");
    return rep.ok() ? 0 : 1;
}

int cmd_verify_all(const RunConfig& cfg) {
    const auto rep = loopslice::acceptance::run_all(cfg.seed, cfg.precision);
    if (cfg.output == "json") {
        json arr = json::array();
        for (const auto& r : rep.results)
            arr.push_back(json{
                {"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        std::cout << json{{"criteria", arr}, {"all_pass", rep.all_pass()}}.dump(2) << "\n";
    } else {
        loopslice::acceptance::print(rep, std::cout);
    }
    return rep.all_pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations for lattice normal forms, Slodowy slices, invariant-map "
                 "fibers, and graded multiplicities over k((t))"};
    app.require_subcommand(1);

    RunConfig cfg;
    if (const char* env = std::getenv("LOOPSLICE_PRECISION")) cfg.precision = std::atol(env);
    app.add_option("--precision", cfg.precision, "working t-adic precision (>= 2)");
    app.add_option("--seed", cfg.seed, "seed for randomized checks");
    app.add_option("--output", cfg.output, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    std::string input = "-";
    std::string fs, gs, weight, context;
    int n = 1, m = 2;

    auto* nf = app.add_subcommand("normal-form", "reduce a pair to its orbit normal form");
    nf->add_option("--context", context, "gl or osp")->check(CLI::IsMember({"gl", "osp"}));
    nf->add_option("--input", input, "pair JSON file (- for stdin)");

    auto* oi = app.add_subcommand("orbit-index", "coweight of a pair's orbit");
    oi->add_option("--input", input, "pair JSON file (- for stdin)");

    auto* sl = app.add_subcommand("slice", "slice chart utilities");
    auto* sh = sl->add_subcommand("show", "print the symbolic slice matrix and gradings");
    sh->add_option("--n", n)->required();
    sh->add_option("--m", m)->required();

    auto* inv = app.add_subcommand("invariants", "invariant map of a slice point");
    inv->add_option("--point", input, "slice point JSON file (- for stdin)");

    auto* fb = app.add_subcommand("fiber", "fiber of the invariant map over (f, g)");
    fb->add_option("--f", fs, "f as an ascending coefficient list")->required();
    fb->add_option("--g", gs, "g as an ascending coefficient list")->required();

    auto* st = app.add_subcommand("stalk", "graded stalk dimensions");
    st->add_option("--n", n)->required();
    st->add_option("--m", m)->required();

    auto* br = app.add_subcommand("branch", "graded restriction of a GL_m weight to GL_n");
    br->add_option("--weight", weight, "comma-separated weakly decreasing integers")->required();
    br->add_option("--m", m)->required();
    br->add_option("--n", n)->required();

    auto* ac = app.add_subcommand("algebra-check", "n = 1 coordinate-ring series check");
    ac->add_option("--m", m)->required();

    app.add_subcommand("verify-all", "run the full acceptance suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitBadInput;
    }

    try {
        if (cfg.precision < 2)
            throw loopslice::precondition_error("precision must be at least 2");
        if (nf->parsed()) return cmd_normal_form(cfg, input);
        if (oi->parsed()) return cmd_orbit_index(cfg, input);
        if (sl->parsed() && sh->parsed()) return cmd_slice_show(cfg, n, m);
        if (inv->parsed()) return cmd_invariants(cfg, input);
        if (fb->parsed()) return cmd_fiber(cfg, fs, gs);
        if (st->parsed()) return cmd_stalk(cfg, n, m);
        if (br->parsed()) return cmd_branch(cfg, weight, m, n);
        if (ac->parsed()) return cmd_algebra_check(cfg, m);
        if (app.get_subcommand("verify-all")->parsed()) return cmd_verify_all(cfg);
        std::cerr << "no subcommand\n";
        return kExitBadInput;
    } catch (const loopslice::precondition_error& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "malformed input JSON: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
