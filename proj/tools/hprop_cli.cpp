// hprop: decide, certify, and empirically probe the H-property of graphons.
//
// Exit codes: 0 decided, 2 invalid input, 3 mathematically undetermined
// (concentration vector on the polytope boundary).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hprop/errors.hpp"
#include "hprop/graphon.hpp"
#include "hprop/graphon_ext.hpp"
#include "hprop/hamdec.hpp"
#include "hprop/json_io.hpp"
#include "hprop/montecarlo.hpp"
#include "hprop/polytope.hpp"
#include "hprop/sampler.hpp"
#include "hprop/skeleton.hpp"

namespace {

using namespace hprop;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitUndetermined = 3;

void print_membership_text(std::ostream& os, const MembershipVerdict& v) {
    os << "B: " << membership_name(v.status);
    if (v.status != Membership::outside) {
        os << " (t* = " << to_fraction_string(v.margin) << ")\n";
        os << "  lambda =";
        for (const auto& l : v.certificate) os << ' ' << to_fraction_string(l);
        os << '\n';
    } else {
        os << "\n  farkas =";
        for (const auto& y : v.separating_certificate) os << ' ' << to_fraction_string(y);
        os << '\n';
    }
}

int cmd_check(const std::string& input, const std::vector<int>& resolutions, int subsamples,
              bool use_float, const std::string& format) {
    GeneralGraphon g = load_graphon_file(input);
    TheoremVerdict verdict = classify_graphon(g, resolutions, subsamples);

    nlohmann::json out;
    out["graphon"] = g.describe();
    out["verdict"] = theorem_verdict_to_json(verdict);

    if (g.is_step()) {
        const StepGraphon& s = g.step();
        SkeletonGraph sk = skeleton_graph(s);
        bool a = has_odd_cycle(sk);
        bool a_rank = all_components_nonbipartite(sk);
        MembershipVerdict m = polytope_membership(incidence_matrix(sk), concentration_vector(s));
        out["condition_a"] = a;
        out["condition_a_surjectivity"] = a_rank;
        out["membership"] = membership_to_json(m);
        if (use_float) {
            auto bq = incidence_matrix(sk);
            std::vector<std::vector<double>> bf(bq.size());
            for (std::size_t i = 0; i < bq.size(); ++i)
                for (const auto& e : bq[i]) bf[i].push_back(to_double(e));
            std::vector<double> xf;
            for (const auto& e : concentration_vector(s)) xf.push_back(to_double(e));
            auto mf = polytope_membership_float(bf, xf);
            out["membership_float_status"] = membership_name(mf.status);
        }
        if (format == "json") {
            std::cout << out.dump(2) << '\n';
        } else {
            std::cout << "A: " << (a ? "yes" : "no") << " (odd cycle)";
            if (a != a_rank)
                std::cout << "  [WARNING: surjectivity reading disagrees: rank condition says "
                          << (a_rank ? "yes" : "no") << "]";
            std::cout << '\n';
            print_membership_text(std::cout, m);
            std::cout << "H-property: "
                      << (verdict.classification == Classification::h_property ? "YES (Theorem 1)"
                          : verdict.classification == Classification::no_h_property
                              ? "NO (Theorem 1)"
                              : "UNDETERMINED (boundary case)")
                      << '\n';
        }
    } else {
        nlohmann::json per_res = nlohmann::json::array();
        for (int n : resolutions) per_res.push_back(ext_verdict_to_json(analyze_ext(g, n, subsamples)));
        out["resolutions"] = per_res;
        if (format == "json") {
            std::cout << out.dump(2) << '\n';
        } else {
            for (const auto& r : per_res)
                std::cout << "N=" << r["resolution"] << ": A_ext=" << r["a_ext"]
                          << " B_ext=" << r["b_ext_status"].get<std::string>()
                          << " margin=" << r["b_ext_margin"].get<std::string>() << '\n';
            std::cout << "H-property (approximate): "
                      << classification_name(verdict.classification) << '\n';
        }
    }
    return verdict.classification == Classification::undetermined ? kExitUndetermined : kExitOk;
}

int cmd_skeleton(const std::string& input, const std::string& format) {
    GeneralGraphon g = load_graphon_file(input);
    if (!g.is_step()) {
        std::cerr << "error: skeleton requires a step graphon\n";
        return kExitInvalid;
    }
    const StepGraphon& s = g.step();
    SkeletonGraph sk = skeleton_graph(s);
    RationalMatrix b = incidence_matrix(sk);
    bool a = has_odd_cycle(sk);
    bool a_rank = all_components_nonbipartite(sk);
    if (format == "json") {
        nlohmann::json out;
        out["q"] = sk.q;
        nlohmann::json edges = nlohmann::json::array();
        for (auto [i, j] : sk.edges) edges.push_back({i + 1, j + 1});
        out["edges"] = edges;
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& row : b) {
            nlohmann::json r = nlohmann::json::array();
            for (const auto& e : row) r.push_back(to_fraction_string(e));
            rows.push_back(r);
        }
        out["incidence_matrix"] = rows;
        out["has_odd_cycle"] = a;
        out["all_components_nonbipartite"] = a_rank;
        std::cout << out.dump(2) << '\n';
        return kExitOk;
    }
    std::cout << "skeleton on " << sk.q << " nodes, " << sk.edge_count() << " edges\n";
    for (auto [i, j] : sk.edges) {
        if (i == j)
            std::cout << "  loop u" << i + 1 << '\n';
        else
            std::cout << "  u" << i + 1 << " -- u" << j + 1 << '\n';
    }
    std::cout << "incidence matrix B (" << sk.q << " x " << sk.edge_count() << "):\n";
    for (const auto& row : b) {
        std::cout << " ";
        for (const auto& e : row) std::cout << ' ' << to_fraction_string(e);
        std::cout << '\n';
    }
    std::cout << "condition A (odd cycle): " << (a ? "yes" : "no") << '\n';
    std::cout << "all components non-bipartite (rank condition): " << (a_rank ? "yes" : "no")
              << '\n';
    if (a != a_rank)
        std::cout << "WARNING: the two readings of Condition A disagree (disconnected skeleton)\n";
    return kExitOk;
}

int cmd_sample(const std::string& input, int n, std::uint64_t seed, const std::string& out_path) {
    GeneralGraphon g = load_graphon_file(input);
    SampledGraph s = sample_graph(g, n, seed);
    if (out_path.empty()) {
        write_graph(std::cout, s);
    } else {
        std::ofstream gf(out_path);
        if (!gf) throw Error(ErrorCode::ParseError, "cannot write '" + out_path + "'");
        write_graph(gf, s);
        std::ofstream cf(out_path + ".coords");
        write_coordinates(cf, s);
    }
    return kExitOk;
}

int cmd_hamdec(const std::string& graph_path) {
    std::ifstream in(graph_path);
    if (!in) {
        std::cerr << "error: cannot open '" << graph_path << "'\n";
        return kExitInvalid;
    }
    DirectedGraph d = read_digraph(in);
    auto hd = has_hamiltonian_decomposition(d);
    if (hd) {
        std::cout << "YES\n";
        for (const auto& cycle : hd->cycles) {
            for (std::size_t i = 0; i < cycle.size(); ++i)
                std::cout << cycle[i] << (i + 1 < cycle.size() ? ' ' : '\n');
        }
    } else {
        std::cout << "NO\n";
        if (auto w = deficient_vertex(d))
            std::cout << "witness: vertex " << *w << " has in-degree or out-degree 0\n";
    }
    return kExitOk;
}

int cmd_simulate(const std::string& input, const std::vector<int>& n_list, int trials,
                 std::uint64_t seed, int threads, const std::string& out_path,
                 const std::string& svg_path, bool timing) {
    GeneralGraphon g = load_graphon_file(input);
    ExperimentReport report = run_experiment(g, n_list, trials, seed, threads);
    if (out_path.empty()) {
        write_csv(std::cout, report, timing);
    } else {
        std::ofstream f(out_path);
        if (!f) throw Error(ErrorCode::ParseError, "cannot write '" + out_path + "'");
        write_csv(f, report, timing);
    }
    if (!svg_path.empty()) {
        std::ofstream f(svg_path);
        if (!f) throw Error(ErrorCode::ParseError, "cannot write '" + svg_path + "'");
        write_svg(f, report);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"H-property toolkit: graphon condition checking, sampling, Hamiltonian "
                 "decomposition, and Monte Carlo estimation"};
    app.require_subcommand(1);

    std::string input, out_path, svg_path, graph_path;
    std::string format = "text";
    std::vector<int> resolutions = {8, 16, 32, 64};
    std::vector<int> n_list;
    int n = 0, trials = 100, subsamples = 3, threads = 1;
    std::uint64_t seed = 0;
    bool use_float = false, timing = false;

    auto* check = app.add_subcommand("check", "check Conditions A/B (or A_ext/B_ext)");
    check->add_option("input", input, "graphon JSON file")->required();
    check->add_option("--resolution", resolutions, "grid resolutions for general graphons");
    check->add_option("--subsamples", subsamples, "support subsample count per cell");
    check->add_flag("--float", use_float, "also run the float LP engine");
    check->add_option("--format", format, "text|json");

    auto* skel = app.add_subcommand("skeleton", "print skeleton graph and incidence matrix");
    skel->add_option("input", input, "graphon JSON file")->required();
    skel->add_option("--format", format, "text|json");

    auto* sample = app.add_subcommand("sample", "sample a graph G_n ~ W");
    sample->add_option("input", input, "graphon JSON file")->required();
    sample->add_option("--n", n, "number of nodes")->required();
    sample->add_option("--seed", seed, "RNG seed");
    sample->add_option("--out", out_path, "graph file (coords sidecar: <out>.coords)");

    auto* ham = app.add_subcommand("hamdec", "decide Hamiltonian decomposition of a graph file");
    ham->add_option("graph", graph_path, "graph file ('n m' or 'd n m' format)")->required();

    auto* sim = app.add_subcommand("simulate", "Monte Carlo H-property frequency estimation");
    sim->add_option("input", input, "graphon JSON file")->required();
    sim->add_option("--n-list", n_list, "node counts (comma or space separated)")
        ->required()
        ->delimiter(',');
    sim->add_option("--trials", trials, "trials per n");
    sim->add_option("--seed", seed, "master seed");
    sim->add_option("--threads", threads, "worker threads");
    sim->add_option("--out", out_path, "CSV output file (default stdout)");
    sim->add_option("--svg", svg_path, "also write an SVG frequency plot");
    sim->add_flag("--timing", timing, "include wall-clock seconds in the CSV");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*check) return cmd_check(input, resolutions, subsamples, use_float, format);
        if (*skel) return cmd_skeleton(input, format);
        if (*sample) return cmd_sample(input, n, seed, out_path);
        if (*ham) return cmd_hamdec(graph_path);
        if (*sim) return cmd_simulate(input, n_list, trials, seed, threads, out_path, svg_path,
                                      timing);
    } catch (const hprop::Error& e) {
        std::cerr << "error [" << hprop::error_code_name(e.code()) << "]: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
    return kExitInvalid;
}
