#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "mdim/bds.hpp"
#include "mdim/graph.hpp"
#include "mdim/graphgen.hpp"
#include "mdim/rbds.hpp"
#include "mdim/reduction.hpp"
#include "mdim/resolving.hpp"
#include "mdim/rng.hpp"
#include "mdim/verify.hpp"

namespace mdim {

namespace {

nlohmann::ordered_json witness_json(const std::vector<VertexId>& witness) {
    auto arr = nlohmann::ordered_json::array();
    for (VertexId v : witness) arr.push_back(v + 1);  // 1-indexed like the graph text format
    return arr;
}

std::int64_t pick_y(const std::string& flag, int n) {
    if (flag == "auto") return default_y(n);
    if (flag == "min") return min_test_y(n);
    return std::stoll(flag);
}

int run_gen(std::uint64_t seed, int n1, int n2, double edge_prob, int budget,
            const std::string& out_path, std::ostream& out) {
    Rng rng(seed);
    auto inst = random_bipartite_instance(rng, n1, n2, edge_prob, budget);
    write_bds_file(out_path, inst);
    out << "wrote " << out_path << " (n=" << inst.size() << " m=" << inst.graph.edge_count()
        << " h=" << inst.budget << ")\n";
    return 0;
}

int run_reduce(const std::string& in_path, const std::string& y_flag,
               const std::string& graph_path, const std::string& labels_path, std::ostream& out) {
    auto raw = read_bds_file(in_path);
    auto normalized = normalize(raw);
    auto R = build_reduction(normalized, pick_y(y_flag, normalized.size()));
    {
        std::ofstream gout(graph_path);
        if (!gout) throw std::runtime_error("cannot open for writing: " + graph_path);
        write_reduction_graph(gout, R);
    }
    if (!labels_path.empty()) {
        std::ofstream lout(labels_path);
        if (!lout) throw std::runtime_error("cannot open for writing: " + labels_path);
        write_reduction_labels(lout, R);
    }
    out << "n=" << R.params.n << " y=" << R.params.y << " k=" << R.params.k
        << " |V'|=" << R.gprime.vertex_count() << " |E'|=" << R.gprime.edge_count() << '\n';
    return 0;
}

int run_solve_md(const std::string& in_path, const std::string& mode, std::optional<int> max_k,
                 const std::vector<int>& forced_1idx, std::ostream& out) {
    Graph g = read_graph_file(in_path);
    std::vector<VertexId> forced;
    for (int v : forced_1idx) {
        if (v < 1 || v > g.vertex_count()) throw std::runtime_error("--forced vertex out of range");
        forced.push_back(v - 1);
    }
    nlohmann::ordered_json j;
    j["mode"] = mode;

    if (mode != "cover" && !forced.empty())
        throw std::runtime_error("--forced requires --mode cover");

    if (mode == "greedy") {
        auto set = greedy_resolving_set(g);
        j["size"] = set.size();
        j["witness"] = witness_json(set);
        out << j.dump() << '\n';
        // greedy can certify yes but never no
        if (max_k && static_cast<int>(set.size()) > *max_k) return 1;
        return 0;
    }

    std::optional<MdResult> result;
    const int budget = max_k.value_or(g.vertex_count());
    if (mode == "naive") {
        result = exact_md_naive(g, budget);
    } else if (mode == "cover") {
        std::vector<VertexId> all(static_cast<std::size_t>(g.vertex_count()));
        std::iota(all.begin(), all.end(), 0);
        result = exact_md_cover(g, forced, all, budget);
    } else {
        throw std::runtime_error("unknown mode: " + mode);
    }

    if (!result) {
        j["answer"] = "no";
        j["max_k"] = budget;
        out << j.dump() << '\n';
        return 1;
    }
    j["size"] = result->size;
    j["witness"] = witness_json(result->witness);
    out << j.dump() << '\n';
    return 0;
}

int run_solve_ds(const std::string& in_path, int cap, std::ostream& out) {
    auto inst = read_bds_file(in_path);
    auto result = exact_min_dominating_set(inst, cap);
    nlohmann::ordered_json j;
    j["size"] = result.size;
    auto names = nlohmann::ordered_json::array();
    for (VertexId v : result.witness) names.push_back(inst.names[static_cast<std::size_t>(v)]);
    j["witness"] = std::move(names);
    j["h"] = inst.budget;
    out << j.dump() << '\n';
    return result.size <= inst.budget ? 0 : 1;
}

int run_rbds(const std::string& in_path, std::optional<int> budget, const std::string& dump_path,
             std::ostream& out) {
    Graph g = read_graph_file(in_path);
    const int k = budget.value_or(g.vertex_count());
    auto inst = md_to_rbds(g, k);
    if (!dump_path.empty()) {
        std::ofstream dout(dump_path);
        if (!dout) throw std::runtime_error("cannot open for writing: " + dump_path);
        write_rbds_json(dout, inst);
    }
    auto result = exact_min_rbds(inst);
    nlohmann::ordered_json j;
    j["blue_count"] = inst.blue_pairs.size();
    if (!result) {
        j["answer"] = "infeasible";
        out << j.dump() << '\n';
        return 1;
    }
    j["size"] = result->size;
    j["witness"] = witness_json(result->witness);
    out << j.dump() << '\n';
    return budget && result->size > *budget ? 1 : 0;
}

int run_verify(const std::string& in_path, const std::string& y_mode, int exhaustive_n,
               int random_count, std::uint64_t seed, const std::string& jsonl_path,
               std::ostream& out) {
    const bool full_y = y_mode == "full";
    std::vector<VerificationReport> reports;
    if (!in_path.empty()) {
        auto inst = read_bds_file(in_path);
        reports.push_back(verify_instance(inst, full_y, in_path));
    } else {
        SuiteConfig config;
        config.exhaustive_max_n = exhaustive_n;
        config.random_count = random_count;
        config.seed = seed;
        config.full_y = full_y;
        reports = run_suite(config);
    }
    if (!jsonl_path.empty()) {
        std::ofstream jout(jsonl_path);
        if (!jout) throw std::runtime_error("cannot open for writing: " + jsonl_path);
        for (const auto& r : reports) write_report_json(jout, r);
    }
    out << summary_table(reports);
    for (const auto& r : reports)
        if (!r.all_passed()) return 1;
    return 0;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Metric Dimension tools: solvers, the dominating-set gadget reduction, "
                 "and its verification harness",
                 "mdim"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a seeded random bipartite instance");
    std::uint64_t seed = 1;
    int n1 = 3, n2 = 3, budget = 0;
    double edge_prob = 0.5;
    std::string out_path;
    gen->add_option("--seed", seed, "64-bit generator seed");
    gen->add_option("--n1", n1, "size of V1")->check(CLI::PositiveNumber);
    gen->add_option("--n2", n2, "size of V2")->check(CLI::NonNegativeNumber);
    gen->add_option("--edge-prob", edge_prob, "edge probability")->check(CLI::Range(0.0, 1.0));
    gen->add_option("--budget", budget, "dominating set budget h (default n1+n2)");
    gen->add_option("-o,--output", out_path, "instance file to write")->required();

    // reduce
    auto* reduce = app.add_subcommand("reduce", "build the Metric Dimension instance G'");
    std::string reduce_in, y_flag = "auto", graph_out, labels_out;
    reduce->add_option("-i,--input", reduce_in, "bipartite instance (json)")->required();
    reduce->add_option("--y", y_flag, "y-path length: auto (10n^2), min, or an even integer > 8n+8");
    reduce->add_option("-o,--graph", graph_out, "output graph file")->required();
    reduce->add_option("--labels", labels_out, "output labels sidecar (json)");

    // solve-md
    auto* solve_md = app.add_subcommand("solve-md", "metric dimension of a graph file");
    std::string md_in, md_mode = "naive";
    std::optional<int> max_k;
    std::vector<int> forced;
    solve_md->add_option("-i,--input", md_in, "graph file")->required();
    solve_md->add_option("--mode", md_mode, "naive | cover | greedy")
        ->check(CLI::IsMember({"naive", "cover", "greedy"}));
    solve_md->add_option("--max-k", max_k, "decision budget");
    solve_md->add_option("--forced", forced, "1-indexed landmarks forced into the set (cover mode)");

    // solve-ds
    auto* solve_ds = app.add_subcommand("solve-ds", "minimum dominating set of an instance");
    std::string ds_in;
    int cap = 16;
    solve_ds->add_option("-i,--input", ds_in, "bipartite instance (json)")->required();
    solve_ds->add_option("--cap", cap, "size cap for the exact solver");

    // rbds
    auto* rbds = app.add_subcommand("rbds", "Red-Blue Dominating Set membership reduction");
    std::string rbds_in, rbds_dump;
    std::optional<int> rbds_budget;
    rbds->add_option("-i,--input", rbds_in, "graph file")->required();
    rbds->add_option("--budget", rbds_budget, "decision budget k");
    rbds->add_option("--dump", rbds_dump, "write the RBDS instance as json");

    // verify
    auto* verify = app.add_subcommand("verify", "distance, separation and equivalence checks");
    std::string verify_in, y_mode = "min", jsonl_path;
    int exhaustive_n = 6, random_count = 50;
    std::uint64_t verify_seed = SuiteConfig{}.seed;
    verify->add_option("-i,--input", verify_in, "single instance (default: run the suite)");
    verify->add_option("--y-mode", y_mode, "min | full")->check(CLI::IsMember({"min", "full"}));
    verify->add_option("--exhaustive-n", exhaustive_n, "exhaustive source size limit")
        ->check(CLI::Range(1, 6));
    verify->add_option("--random", random_count, "number of seeded random instances");
    verify->add_option("--seed", verify_seed, "suite seed");
    verify->add_option("--jsonl", jsonl_path, "write one json report per line");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed())
            return run_gen(seed, n1, n2, edge_prob, budget > 0 ? budget : n1 + n2, out_path, out);
        if (reduce->parsed()) return run_reduce(reduce_in, y_flag, graph_out, labels_out, out);
        if (solve_md->parsed()) return run_solve_md(md_in, md_mode, max_k, forced, out);
        if (solve_ds->parsed()) return run_solve_ds(ds_in, cap, out);
        if (rbds->parsed()) return run_rbds(rbds_in, rbds_budget, rbds_dump, out);
        if (verify->parsed())
            return run_verify(verify_in, y_mode, exhaustive_n, random_count, verify_seed,
                              jsonl_path, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

int cli_main(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return cli_main(args, std::cout, std::cerr);
}

}  // namespace mdim
