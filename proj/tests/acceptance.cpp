// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
//
// 1. optimum equivalence via independent solvers on the bipartite suite
// 2. forced-landmark census (exact set equality) on every suite instance
// 3. closed-form distances vs BFS, plus a full-scale-y smoke instance
// 4. structural guarantees (degree three, connectivity, census)
// 5. witness round-trips through both solution maps
// 6. RBDS membership reduction against the naive solver
// 7. cover solver vs naive solver oracle agreement
// 8. greedy soundness plus its measured size ratio

#include <cstdio>
#include <numeric>
#include <string>
#include <vector>

#include "mdim/bds.hpp"
#include "mdim/graph.hpp"
#include "mdim/graphgen.hpp"
#include "mdim/rbds.hpp"
#include "mdim/reduction.hpp"
#include "mdim/resolving.hpp"
#include "mdim/rng.hpp"
#include "mdim/verify.hpp"

using namespace mdim;

namespace {

struct Criterion {
    std::string name;
    bool passed = true;
    std::string detail;

    void fail(const std::string& why) {
        if (passed) detail = why;  // keep the first counterexample
        passed = false;
    }
    void note(const std::string& stats) {
        if (passed) detail = stats;
    }
};

std::vector<VertexId> all_vertices(const Graph& g) {
    std::vector<VertexId> all(static_cast<std::size_t>(g.vertex_count()));
    std::iota(all.begin(), all.end(), 0);
    return all;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria(9);  // 1-indexed
    criteria[1].name = "equivalence: min-domset(normalized) + 4 = md(G')";
    criteria[2].name = "forced-landmark census leaves exactly the n^2 side pairs";
    criteria[3].name = "closed-form distances match BFS (incl. y = 10n^2 smoke)";
    criteria[4].name = "G' structure: max degree 3, connected, census";
    criteria[5].name = "solution maps round-trip";
    criteria[6].name = "RBDS reduction optimum equals exact_md_naive";
    criteria[7].name = "cover solver agrees with naive solver";
    criteria[8].name = "greedy resolving sets are sound";

    // ---- bipartite suite: exhaustive <= 6 plus 50 seeded random <= 8 ----
    std::vector<std::pair<std::string, BipartiteInstance>> suite;
    {
        int index = 0;
        for (const auto& g : connected_bipartite_graphs_up_to(6))
            suite.emplace_back("exhaustive#" + std::to_string(index++),
                               to_bipartite_instance(g, g.vertex_count()));
        Rng rng(0xacce9751ull);
        for (int r = 0; r < 50; ++r) {
            int n1 = rng.range(1, 4), n2 = rng.range(1, 4);
            suite.emplace_back("random#" + std::to_string(r),
                               random_bipartite_instance(rng, n1, n2, rng.unit(), n1 + n2));
        }
    }

    for (const auto& [name, raw] : suite) {
        auto normalized = normalize(raw);
        auto R = build_reduction(normalized, min_test_y(normalized.size()));

        auto census = check_forced_landmark_census(R);
        if (!census.passed) criteria[2].fail(name + ": " + census.detail);
        auto closed = check_closed_form(R);
        if (!closed.passed) criteria[3].fail(name + ": " + closed.detail);
        auto structure = check_structure(R);
        if (!structure.passed) criteria[4].fail(name + ": " + structure.detail);

        // criterion 1: independent solvers on both sides
        auto ds = exact_min_dominating_set(normalized, std::max(16, normalized.size()));
        auto leaves = R.forced_leaves();
        auto md = exact_md_cover(R.gprime, {leaves.begin(), leaves.end()},
                                 all_vertices(R.gprime), R.gprime.vertex_count());
        if (!md) {
            criteria[1].fail(name + ": cover solver found no resolving set");
            continue;
        }
        if (md->size != ds.size + 4)
            criteria[1].fail(name + ": domset " + std::to_string(ds.size) + " + 4 != md " +
                             std::to_string(md->size));

        // criterion 5: round trips at the optimum witnesses
        auto basis = map_domset_to_basis(R, ds.witness);
        if (static_cast<int>(basis.size()) != ds.size + 4 || !is_resolving_set(R.gprime, basis))
            criteria[5].fail(name + ": forward image not a resolving set of size |D|+4");
        else if (map_basis_to_domset(R, basis) != ds.witness)
            criteria[5].fail(name + ": map_basis_to_domset(map_domset_to_basis(D)) != D");
        else {
            auto back = map_basis_to_domset(R, md->witness);
            if (static_cast<int>(back.size()) > md->size - 4 ||
                !is_dominating_set(normalized, back))
                criteria[5].fail(name + ": backward image not a dominating set of size <= |L|-4");
        }
    }
    criteria[1].note(std::to_string(suite.size()) + " instances");
    criteria[2].note(std::to_string(suite.size()) + " instances");
    criteria[4].note(std::to_string(suite.size()) + " instances");
    criteria[5].note(std::to_string(suite.size()) + " instances");

    // criterion 3 smoke: full-scale y on a small normalized instance
    {
        Graph k2(2);
        k2.add_edge(0, 1);
        k2.seal();
        auto normalized = normalize(to_bipartite_instance(k2, 1));
        auto R = build_reduction(normalized);  // y = 10 * 16 = 160
        auto closed = check_closed_form(R);
        if (!closed.passed) criteria[3].fail("smoke: " + closed.detail);
        criteria[3].note(std::to_string(suite.size()) + " instances + smoke at y=" +
                         std::to_string(R.params.y));
    }

    // ---- criterion 6: RBDS on exhaustive <= 6 plus 100 random <= 9 ----
    {
        std::vector<Graph> graphs = connected_graphs_up_to(6);
        Rng rng(0xbd5bd5ull);
        for (int r = 0; r < 100; ++r)
            graphs.push_back(random_graph(rng, rng.range(2, 9), rng.unit(), false));

        int checked = 0;
        for (const auto& g : graphs) {
            auto naive = exact_md_naive(g, g.vertex_count());
            auto inst = md_to_rbds(g, g.vertex_count());
            auto rbds = exact_min_rbds(inst);
            std::string name = "graph#" + std::to_string(checked++);
            if (!naive || !rbds) {
                criteria[6].fail(name + ": a solver returned no solution");
                continue;
            }
            if (naive->size != rbds->size) {
                criteria[6].fail(name + ": rbds " + std::to_string(rbds->size) + " != md " +
                                 std::to_string(naive->size));
                continue;
            }
            // witness bijection: the rbds witness resolves, the md witness dominates
            if (!is_resolving_set(g, rbds->witness)) {
                criteria[6].fail(name + ": rbds witness is not a resolving set");
                continue;
            }
            for (std::size_t b = 0; b < inst.blue_pairs.size(); ++b) {
                bool covered = false;
                for (VertexId v : naive->witness)
                    if (std::binary_search(inst.red_neighbors[b].begin(),
                                           inst.red_neighbors[b].end(), v)) {
                        covered = true;
                        break;
                    }
                if (!covered) {
                    criteria[6].fail(name + ": md witness misses blue pair " +
                                     std::to_string(b));
                    break;
                }
            }
        }
        criteria[6].note(std::to_string(graphs.size()) + " graphs");
    }

    // ---- criteria 7 and 8: solver agreement and greedy soundness ----
    {
        Rng rng(0xc0ffee42ull);
        double worst_ratio = 1.0, ratio_sum = 0.0;
        int ratio_count = 0;
        auto run_one = [&](const Graph& g, const std::string& name) {
            auto naive = exact_md_naive(g, g.vertex_count());
            auto cover = exact_md_cover(g, {}, all_vertices(g), g.vertex_count());
            if (!naive || !cover)
                criteria[7].fail(name + ": a solver returned no solution");
            else if (naive->size != cover->size)
                criteria[7].fail(name + ": cover " + std::to_string(cover->size) + " != naive " +
                                 std::to_string(naive->size));

            auto greedy = greedy_resolving_set(g);
            if (!is_resolving_set(g, greedy))
                criteria[8].fail(name + ": greedy output is not resolving");
            else if (naive && naive->size > 0) {
                double ratio = static_cast<double>(greedy.size()) / naive->size;
                worst_ratio = std::max(worst_ratio, ratio);
                ratio_sum += ratio;
                ++ratio_count;
                if (static_cast<int>(greedy.size()) < naive->size)
                    criteria[8].fail(name + ": greedy beat the exact optimum");
            }
        };

        int index = 0;
        for (const auto& g : connected_graphs_up_to(6)) run_one(g, "exhaustive#" + std::to_string(index++));
        for (int r = 0; r < 200; ++r)
            run_one(random_graph(rng, rng.range(2, 10), rng.unit(), false),
                    "random#" + std::to_string(r));

        criteria[7].note(std::to_string(index) + " exhaustive + 200 random graphs");
        char ratio_line[128];
        std::snprintf(ratio_line, sizeof ratio_line,
                      "greedy/exact ratio: mean %.3f, max %.3f over %d graphs",
                      ratio_count ? ratio_sum / ratio_count : 1.0, worst_ratio, ratio_count);
        criteria[8].note(ratio_line);
    }

    int failures = 0;
    for (int c = 1; c <= 8; ++c) {
        const auto& crit = criteria[static_cast<std::size_t>(c)];
        failures += crit.passed ? 0 : 1;
        std::printf("[%s] criterion %d: %s%s%s\n", crit.passed ? "PASS" : "FAIL", c,
                    crit.name.c_str(), crit.detail.empty() ? "" : " -- ", crit.detail.c_str());
    }
    if (!criteria[2].passed)
        std::printf(
            "note: criterion 2 counterexamples are real. When two edge-gadgets share an\n"
            "endpoint index and their other indices differ by an even gap 2d, the vertices\n"
            "at depth y-d next to the tether waypoints tie on all four corner landmarks\n"
            "(at every valid y). Any in-gadget landmark separates such pairs, so the\n"
            "optimum correspondence (criteria 1 and 5) is unaffected. See README.\n");
    std::printf("%d/8 acceptance criteria passed\n", 8 - failures);
    return failures == 0 ? 0 : 1;
}
