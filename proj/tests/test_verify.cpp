#include <algorithm>
#include <sstream>

#include "doctest.h"
#include "mdim/graphgen.hpp"
#include "mdim/reduction.hpp"
#include "mdim/resolving.hpp"
#include "mdim/verify.hpp"

using namespace mdim;

namespace {

BipartiteInstance k2_instance() {
    Graph g(2);
    g.add_edge(0, 1);
    g.seal();
    return make_bipartite_instance(std::move(g), 1, 1);
}

BipartiteInstance p3_instance() {
    // path a-b-c with b on one side
    Graph g(3);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.seal();
    return make_bipartite_instance(std::move(g), 1, 1);
}

// The four corner leaves provably cannot separate one vertex pair per
// "sibling" edge-gadget configuration: gadgets (i,j) and (i,j+2d) sharing the
// left index give {BL(i,j) at depth y-d, TL(i,j+2d) at depth y-d}; gadgets
// (i,j) and (i+2d,j) sharing the right index give the mirrored BR/TR pair.
// All other pairs behave as check_forced_landmark_census expects; this
// reproduces the full exception set for an instance.
std::vector<std::pair<VertexId, VertexId>> predicted_census_extras(const ReductionInstance& R) {
    const std::int64_t y = R.params.y;
    std::vector<std::pair<VertexId, VertexId>> extras;
    for (const auto& g1 : R.gadgets)
        for (const auto& g2 : R.gadgets) {
            if (g1.i == g2.i && g2.j > g1.j && (g2.j - g1.j) % 2 == 0) {
                const std::int64_t d = (g2.j - g1.j) / 2;
                VertexId a = R.vertex(VertexLabel::edge_part(g1.i, g1.j, Part::BL, y - d));
                VertexId b = R.vertex(VertexLabel::edge_part(g2.i, g2.j, Part::TL, y - d));
                extras.emplace_back(std::min(a, b), std::max(a, b));
            }
            if (g1.j == g2.j && g2.i > g1.i && (g2.i - g1.i) % 2 == 0) {
                const std::int64_t d = (g2.i - g1.i) / 2;
                VertexId a = R.vertex(VertexLabel::edge_part(g1.i, g1.j, Part::BR, y - d));
                VertexId b = R.vertex(VertexLabel::edge_part(g2.i, g2.j, Part::TR, y - d));
                extras.emplace_back(std::min(a, b), std::max(a, b));
            }
        }
    std::sort(extras.begin(), extras.end());
    return extras;
}

// exact census over G': leaf-unresolved pairs == side pairs + predicted extras
void check_census_characterization(const ReductionInstance& R) {
    auto leaves = R.forced_leaves();
    std::vector<VertexId> landmarks(leaves.begin(), leaves.end());
    auto open = unresolved_pairs(R.gprime, landmarks);

    std::vector<std::pair<VertexId, VertexId>> expected;
    for (int i = 1; i <= R.params.n; ++i)
        for (int j = 1; j <= R.params.n; ++j) {
            VertexId l = R.vertex(VertexLabel::left(i, j));
            VertexId r = R.vertex(VertexLabel::right(i, j));
            expected.emplace_back(std::min(l, r), std::max(l, r));
        }
    for (auto pair : predicted_census_extras(R)) expected.push_back(pair);
    std::sort(expected.begin(), expected.end());
    CHECK(open == expected);
}

}  // namespace

TEST_CASE("graph enumeration counts match the known sequences") {
    const int connected[] = {1, 1, 2, 6, 21, 112};
    for (int n = 1; n <= 6; ++n)
        CHECK(connected_graphs(n).size() == static_cast<std::size_t>(connected[n - 1]));
    const int bipartite[] = {1, 1, 1, 3, 5, 17};
    for (int n = 1; n <= 6; ++n)
        CHECK(connected_bipartite_graphs(n).size() == static_cast<std::size_t>(bipartite[n - 1]));
}

TEST_CASE("all checks pass on sibling-free instances, minimal and full-scale y") {
    for (bool full_y : {false, true}) {
        for (const auto* name : {"k2", "p3"}) {
            auto inst = std::string(name) == "k2" ? k2_instance() : p3_instance();
            auto report = verify_instance(inst, full_y, name);
            for (const auto& check : report.checks) {
                INFO(name, " full_y=", full_y, " check=", check.name, " detail=", check.detail);
                CHECK(check.passed);
            }
        }
    }
}

TEST_CASE("census counterexamples are exactly the sibling-gadget pairs") {
    auto star = [] {
        Graph g(4);
        g.add_edge(0, 1);
        g.add_edge(0, 2);
        g.add_edge(0, 3);
        g.seal();
        return make_bipartite_instance(std::move(g), 1, 1);
    };

    // K_{1,3} normalizes to neighbors {4,5,6} of v1: the (4,6) sibling pair
    // defeats the corner leaves at depth y-1
    auto norm = normalize(star());
    auto R = build_reduction(norm, min_test_y(norm.size()));
    auto census = check_forced_landmark_census(R);
    CHECK_FALSE(census.passed);
    CHECK(census.detail.find("extra unresolved pair") != std::string::npos);
    CHECK(predicted_census_extras(R).size() == 1);
    check_census_characterization(R);

    // equivalence is unaffected: any in-gadget landmark separates the extras
    auto equiv = check_equivalence(star(), false);
    INFO(equiv.detail);
    CHECK(equiv.passed);

    // wider even gaps tie at depth y-d: edges (1,5), (1,9), (1,11)
    Graph wide(11);
    wide.add_edge(0, 4);
    wide.add_edge(0, 8);
    wide.add_edge(0, 10);
    wide.seal();
    auto R2 = build_reduction(make_bipartite_instance(std::move(wide), 1, 3), min_test_y(11));
    auto extras = predicted_census_extras(R2);
    CHECK(extras.size() == 3);  // gaps 4, 6, 2 -> depths y-2, y-3, y-1
    check_census_characterization(R2);

    // mirrored family: edges (1,7) and (3,7) share the right index
    Graph mirror(7);
    mirror.add_edge(0, 6);
    mirror.add_edge(2, 6);
    mirror.seal();
    auto R3 = build_reduction(make_bipartite_instance(std::move(mirror), 3, 2), min_test_y(7));
    auto extras3 = predicted_census_extras(R3);
    REQUIRE(extras3.size() == 1);
    CHECK(R3.label_of(extras3[0].first).part == Part::BR);
    CHECK(R3.label_of(extras3[0].second).part == Part::TR);
    check_census_characterization(R3);
}

TEST_CASE("forced leaves plus r^i_1 resolve the whole column i") {
    auto R = build_reduction(normalize(p3_instance()), min_test_y(5));
    auto leaves = R.forced_leaves();
    std::vector<VertexId> landmarks(leaves.begin(), leaves.end());
    landmarks.push_back(R.vertex(VertexLabel::right(1, 1)));
    std::sort(landmarks.begin(), landmarks.end());

    auto open = unresolved_pairs(R.gprime, landmarks);
    for (const auto& [a, b] : open) {
        CHECK(R.label_of(a).i != 1);
        CHECK(R.label_of(b).i != 1);
    }
    // adjacency in the source resolves neighboring columns too
    for (VertexId nb : R.source.graph.neighbors(0))
        for (const auto& [a, b] : open) CHECK(R.label_of(a).i != nb + 1);
    // all remaining pairs are still {l, r} pairs
    for (const auto& [a, b] : open) {
        CHECK(R.label_of(a).kind == VertexLabel::Kind::Left);
        CHECK(R.label_of(b).kind == VertexLabel::Kind::Right);
    }
}

TEST_CASE("edgeless source: every column needs its own landmark") {
    Graph g(3);
    g.seal();
    auto inst = make_bipartite_instance(std::move(g), 3, 3);
    auto R = build_reduction(inst, min_test_y(3));

    // forced leaves plus all r^i_1 resolve everything
    auto leaves = R.forced_leaves();
    std::vector<VertexId> landmarks(leaves.begin(), leaves.end());
    for (int i = 1; i <= 3; ++i) landmarks.push_back(R.vertex(VertexLabel::right(i, 1)));
    CHECK(unresolved_pairs(R.gprime, landmarks).empty());

    // the equivalence degenerates to gamma = n
    auto result = check_equivalence(inst, false);
    INFO(result.detail);
    CHECK(result.passed);
}

TEST_CASE("run_suite is deterministic; failures are confined to the census defect") {
    SuiteConfig config;
    config.exhaustive_max_n = 5;
    config.random_count = 6;
    config.full_y_smoke = true;

    auto reports = run_suite(config);
    CHECK(reports.size() == 1 + 1 + 1 + 3 + 5 + 6 + 1);  // bipartite classes n=1..5 + randoms + smoke
    for (const auto& report : reports)
        for (const auto& check : report.checks) {
            INFO(report.instance_name, " ", check.name, ": ", check.detail);
            if (check.name == "forced-landmark-census")
                continue;  // strict check; sibling-gadget instances legitimately fail it
            CHECK(check.passed);
        }
    // K_{1,3} (and larger stars) are the sibling-gadget instances here
    int census_failures = 0;
    for (const auto& report : reports)
        for (const auto& check : report.checks)
            if (check.name == "forced-landmark-census" && !check.passed) ++census_failures;
    CHECK(census_failures >= 1);

    auto again = run_suite(config);
    REQUIRE(again.size() == reports.size());
    std::ostringstream json1, json2;
    for (const auto& r : reports) write_report_json(json1, r);
    for (const auto& r : again) write_report_json(json2, r);
    CHECK(json1.str() == json2.str());

    auto table = summary_table(reports);
    CHECK(table.find("smoke-full-y") != std::string::npos);
}

TEST_CASE("census characterization holds across a whole small suite") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& g : connected_bipartite_graphs(n)) {
            auto norm = normalize(to_bipartite_instance(g, g.vertex_count()));
            auto R = build_reduction(norm, min_test_y(norm.size()));
            check_census_characterization(R);
        }
}

TEST_CASE("full-scale y on a mid-size source: all checks and the census characterization") {
    // C6 normalizes to n = 8 with six gadgets, one sibling configuration
    Graph c6(6);
    c6.add_edge(0, 3);
    c6.add_edge(3, 1);
    c6.add_edge(1, 4);
    c6.add_edge(4, 2);
    c6.add_edge(2, 5);
    c6.add_edge(5, 0);
    c6.seal();
    auto norm = normalize(to_bipartite_instance(c6, 2));
    auto R = build_reduction(norm);  // y = 10 * 64 = 640
    CHECK(R.params.y == 640);

    CHECK(check_structure(R).passed);
    CHECK(check_closed_form(R).passed);
    CHECK(check_route_discipline(R).passed);
    CHECK(check_adjacent_gadget_separation(R).passed);
    check_census_characterization(R);
}
