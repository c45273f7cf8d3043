#include "mdim/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "mdim/graphgen.hpp"
#include "mdim/resolving.hpp"
#include "mdim/rng.hpp"

namespace mdim {

namespace {

std::string label_pair(const ReductionInstance& R, VertexId a, VertexId b) {
    return "{" + to_string(R.label_of(a)) + ", " + to_string(R.label_of(b)) + "}";
}

CheckResult pass(std::string name, std::string detail = "") {
    return {std::move(name), true, std::move(detail)};
}

CheckResult fail(std::string name, std::string detail) {
    return {std::move(name), false, std::move(detail)};
}

}  // namespace

CheckResult check_structure(const ReductionInstance& R) {
    const std::string name = "structure";
    const auto profile = R.gprime.degree_profile();
    if (profile.rbegin()->first != 3)
        return fail(name, "maximum degree is " + std::to_string(profile.rbegin()->first));

    DistanceRow from_zero = R.gprime.bfs_distances(0);
    for (VertexId v = 0; v < R.gprime.vertex_count(); ++v)
        if (!from_zero.reachable(v))
            return fail(name, "disconnected at " + to_string(R.label_of(v)));

    std::vector<std::pair<int, int>> edges;
    for (VertexId u = 0; u < R.source.size(); ++u)
        for (VertexId v : R.source.graph.neighbors(u))
            if (u < v) edges.emplace_back(u + 1, v + 1);
    const Census census = expected_census(R.params.n, R.params.y, edges);
    if (R.gprime.vertex_count() != census.vertices)
        return fail(name, "vertex census " + std::to_string(R.gprime.vertex_count()) +
                              " != " + std::to_string(census.vertices));
    if (R.gprime.edge_count() != census.edges)
        return fail(name, "edge census " + std::to_string(R.gprime.edge_count()) +
                              " != " + std::to_string(census.edges));

    auto twins = R.gprime.twin_leaf_pairs();
    if (twins.size() != 4)
        return fail(name, "expected 4 twin leaf pairs, found " + std::to_string(twins.size()));
    for (const auto& [a, b] : twins) {
        if (R.label_of(a).kind != VertexLabel::Kind::P3Leaf ||
            R.label_of(b).kind != VertexLabel::Kind::P3Leaf ||
            R.label_of(a).corner != R.label_of(b).corner)
            return fail(name, "unexpected twin pair " + label_pair(R, a, b));
    }
    return pass(name, "|V'|=" + std::to_string(R.gprime.vertex_count()) +
                          " |E'|=" + std::to_string(R.gprime.edge_count()));
}

CheckResult check_forced_landmark_census(const ReductionInstance& R) {
    const std::string name = "forced-landmark-census";
    const auto leaves = R.forced_leaves();
    std::vector<VertexId> landmarks(leaves.begin(), leaves.end());
    auto open = unresolved_pairs(R.gprime, landmarks);

    std::vector<std::pair<VertexId, VertexId>> expected;
    for (int i = 1; i <= R.params.n; ++i)
        for (int j = 1; j <= R.params.n; ++j) {
            VertexId l = R.vertex(VertexLabel::left(i, j));
            VertexId r = R.vertex(VertexLabel::right(i, j));
            expected.emplace_back(std::min(l, r), std::max(l, r));
        }
    std::sort(expected.begin(), expected.end());

    if (open == expected)
        return pass(name, std::to_string(open.size()) + " unresolved pairs as required");

    std::vector<std::pair<VertexId, VertexId>> unexpected, missing;
    std::set_difference(open.begin(), open.end(), expected.begin(), expected.end(),
                        std::back_inserter(unexpected));
    std::set_difference(expected.begin(), expected.end(), open.begin(), open.end(),
                        std::back_inserter(missing));
    std::ostringstream detail;
    if (!unexpected.empty()) {
        const auto [a, b] = unexpected[0];
        detail << unexpected.size() << " extra unresolved pair(s), first "
               << label_pair(R, a, b) << " with leaf distances";
        for (VertexId leaf : landmarks) {
            DistanceRow row = R.gprime.bfs_distances(leaf);
            detail << ' ' << row[a] << '=' << row[b];
        }
    } else if (!missing.empty()) {
        detail << "pair " << label_pair(R, missing[0].first, missing[0].second)
               << " unexpectedly resolved";
    }
    return fail(name, detail.str());
}

CheckResult check_closed_form(const ReductionInstance& R) {
    const std::string name = "closed-form-distances";
    const int n = R.params.n;

    std::vector<VertexLabel> hubs;
    for (int i = 1; i <= n; ++i) {
        hubs.push_back(VertexLabel::top_hub(i));
        hubs.push_back(VertexLabel::bottom_hub(i));
    }
    std::map<VertexId, DistanceRow> rows;
    for (const auto& hub : hubs) {
        VertexId v = R.vertex(hub);
        rows.emplace(v, R.gprime.bfs_distances(v));
    }

    std::int64_t covered = 0;
    auto check_pair = [&](const VertexLabel& a, const VertexLabel& hub) -> std::optional<std::string> {
        auto formula = closed_form_distance(R, a, hub);
        if (!formula) return "formula missing for " + to_string(a) + " vs " + to_string(hub);
        std::int64_t actual = rows.at(R.vertex(hub))[R.vertex(a)];
        if (*formula != actual)
            return to_string(a) + " vs " + to_string(hub) + ": formula " + std::to_string(*formula) +
                   ", BFS " + std::to_string(actual);
        ++covered;
        return std::nullopt;
    };

    // hub-to-hub distances
    for (std::size_t x = 0; x < hubs.size(); ++x)
        for (std::size_t z = x; z < hubs.size(); ++z)
            if (auto err = check_pair(hubs[x], hubs[z])) return fail(name, *err);

    // right-vertices to the four corner hubs
    const VertexLabel corners[] = {VertexLabel::top_hub(1), VertexLabel::top_hub(n),
                                   VertexLabel::bottom_hub(1), VertexLabel::bottom_hub(n)};
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (const auto& hub : corners)
                if (auto err = check_pair(VertexLabel::right(i, j), hub)) return fail(name, *err);

    // edge-gadget attachments to u^t_1, u^t_n, u^b_n
    const VertexLabel att_hubs[] = {VertexLabel::top_hub(1), VertexLabel::top_hub(n),
                                    VertexLabel::bottom_hub(n)};
    for (const auto& gadget : R.gadgets)
        for (VertexId att : {gadget.attach1, gadget.attach2})
            for (const auto& hub : att_hubs)
                if (auto err = check_pair(R.label_of(att), hub)) return fail(name, *err);

    return pass(name, std::to_string(covered) + " covered pairs agree with BFS");
}

CheckResult check_route_discipline(const ReductionInstance& R) {
    const std::string name = "route-discipline";
    const std::int64_t y = R.params.y;
    DistanceRow from_tl = R.gprime.bfs_distances(R.vertex(VertexLabel::p3_leaf(Corner::TL, 1)));

    for (const auto& g : R.gadgets) {
        DistanceRow from_a1 = R.gprime.bfs_distances(g.attach1);
        if (from_a1[g.entrance_left] != y + 2 * g.j)
            return fail(name, "dist(u^t_{" + std::to_string(g.i) + "," + std::to_string(g.j) +
                                  ",1}, r entrance) = " + std::to_string(from_a1[g.entrance_left]) +
                                  ", expected " + std::to_string(y + 2 * g.j));
        DistanceRow from_a2 = R.gprime.bfs_distances(g.attach2);
        if (from_a2[g.entrance_right] != y + 2 * g.i)
            return fail(name, "dist(u^t_{" + std::to_string(g.i) + "," + std::to_string(g.j) +
                                  ",2}, r entrance) = " + std::to_string(from_a2[g.entrance_right]) +
                                  ", expected " + std::to_string(y + 2 * g.i));

        DistanceRow from_left = R.gprime.bfs_distances(g.entrance_left);
        const std::int64_t traverse = from_left[g.entrance_right];
        const std::int64_t gap = g.j - g.i;
        if (!(traverse > (gap + 1) * y && traverse <= gap * y + 3 * y / 2))
            return fail(name, "traversal cost " + std::to_string(traverse) + " outside ((j-i+1)y, (j-i+3/2)y]");

        const std::int64_t via = std::min(from_tl[g.attach1], from_tl[g.entrance_left]) + y;
        if (from_tl[g.w1] != via)
            return fail(name, "entry discipline broken at w1 of gadget (" + std::to_string(g.i) +
                                  "," + std::to_string(g.j) + ")");
    }
    return pass(name, std::to_string(R.gadgets.size()) + " gadgets checked");
}

CheckResult check_adjacent_gadget_separation(const ReductionInstance& R) {
    const std::string name = "adjacent-gadget-separation";
    const int n = R.params.n;
    const std::int64_t y = R.params.y;

    for (int alpha = 1; alpha <= n; ++alpha) {
        DistanceRow row = R.gprime.bfs_distances(R.vertex(VertexLabel::right(alpha, 1)));
        for (int i = 1; i <= n; ++i) {
            if (i == alpha) continue;
            const bool adjacent = R.source.graph.has_edge(i - 1, alpha - 1);
            for (int j = 1; j <= n; ++j) {
                const std::int64_t dr = row[R.vertex(VertexLabel::right(i, j))];
                const std::int64_t dl = row[R.vertex(VertexLabel::left(i, j))];
                if (adjacent) {
                    if (dr == dl)
                        return fail(name, "r^" + std::to_string(alpha) +
                                              "_1 fails to separate {l,r}^" + std::to_string(i) +
                                              "_" + std::to_string(j));
                    const std::int64_t expected = (i - 1) + std::abs(alpha - j) +
                                                  std::abs(alpha - i) * y + 3 * y / 2;
                    if (dr != expected)
                        return fail(name, "traversal distance r^" + std::to_string(alpha) +
                                              "_1 to r^" + std::to_string(i) + "_" +
                                              std::to_string(j) + " = " + std::to_string(dr) +
                                              ", expected " + std::to_string(expected));
                } else {
                    if (dr != dl)
                        return fail(name, "r^" + std::to_string(alpha) +
                                              "_1 unexpectedly separates {l,r}^" + std::to_string(i) +
                                              "_" + std::to_string(j));
                }
            }
        }
    }
    return pass(name);
}

namespace {

// equivalence, witness round-trip and forced-landmark necessity over one
// built instance; used by verify_instance and check_equivalence
std::vector<CheckResult> equivalence_checks(const ReductionInstance& R) {
    std::vector<CheckResult> results;
    const auto ds = exact_min_dominating_set(R.source, std::max(16, R.source.size()));

    std::vector<VertexId> all(static_cast<std::size_t>(R.gprime.vertex_count()));
    std::iota(all.begin(), all.end(), 0);
    const auto leaves = R.forced_leaves();
    const std::vector<VertexId> forced(leaves.begin(), leaves.end());
    const auto md = exact_md_cover(R.gprime, forced, all, R.gprime.vertex_count());

    if (!md) {
        results.push_back(fail("equivalence", "cover solver returned no resolving set"));
        return results;
    }
    if (md->size == ds.size + 4)
        results.push_back(pass("equivalence", "domset " + std::to_string(ds.size) + " + 4 = md " +
                                                  std::to_string(md->size)));
    else
        results.push_back(fail("equivalence", "domset " + std::to_string(ds.size) + " + 4 != md " +
                                                  std::to_string(md->size)));

    // round trip: D -> basis -> D, and the md witness maps to a minimum domset
    {
        const std::string name = "solution-round-trip";
        bool ok = true;
        std::string detail;
        auto basis = map_domset_to_basis(R, ds.witness);
        if (static_cast<int>(basis.size()) != ds.size + 4) {
            ok = false;
            detail = "forward image has size " + std::to_string(basis.size());
        } else if (!is_resolving_set(R.gprime, basis)) {
            ok = false;
            detail = "forward image is not resolving";
        } else if (map_basis_to_domset(R, basis) != ds.witness) {
            ok = false;
            detail = "round trip does not return the original dominating set";
        } else {
            auto back = map_basis_to_domset(R, md->witness);
            if (static_cast<int>(back.size()) > md->size - 4) {
                ok = false;
                detail = "backward image larger than |L|-4";
            } else if (!is_dominating_set(R.source, back)) {
                ok = false;
                detail = "backward image is not dominating";
            } else if (static_cast<int>(back.size()) != ds.size) {
                ok = false;
                detail = "backward image size " + std::to_string(back.size()) +
                         " != minimum " + std::to_string(ds.size);
            }
        }
        results.push_back(ok ? pass(name) : fail(name, detail));
    }

    // each twin leaf pair needs one of its members as a landmark
    {
        const std::string name = "forced-landmark-necessity";
        bool ok = true;
        std::string detail;
        for (const auto& [a, b] : R.gprime.twin_leaf_pairs()) {
            std::vector<VertexId> pruned;
            for (VertexId v : md->witness)
                if (v != a && v != b) pruned.push_back(v);
            bool separated = false;
            for (VertexId v : pruned) {
                DistanceRow row = R.gprime.bfs_distances(v);
                if (row[a] != row[b]) {
                    separated = true;
                    break;
                }
            }
            if (separated) {
                ok = false;
                detail = "twin pair " + label_pair(R, a, b) + " separated without its members";
                break;
            }
        }
        results.push_back(ok ? pass(name) : fail(name, detail));
    }
    return results;
}

}  // namespace

CheckResult check_equivalence(const BipartiteInstance& inst, bool full_y) {
    auto normalized = normalize(inst);
    const std::int64_t y =
        full_y ? default_y(normalized.size()) : min_test_y(normalized.size());
    auto R = build_reduction(normalized, y);
    for (const auto& result : equivalence_checks(R))
        if (!result.passed) return {"equivalence", false, result.name + ": " + result.detail};
    return pass("equivalence");
}

VerificationReport verify_instance(const BipartiteInstance& raw, bool full_y,
                                   const std::string& name) {
    VerificationReport report;
    report.instance_name = name;

    auto normalized = normalize(raw);
    const std::int64_t y =
        full_y ? default_y(normalized.size()) : min_test_y(normalized.size());
    auto R = build_reduction(normalized, y);

    report.n = R.params.n;
    report.y = R.params.y;
    report.source_edges = R.source.graph.edge_count();

    report.checks.push_back(check_structure(R));
    report.checks.push_back(check_forced_landmark_census(R));
    report.checks.push_back(check_closed_form(R));
    report.checks.push_back(check_route_discipline(R));
    report.checks.push_back(check_adjacent_gadget_separation(R));
    for (auto& result : equivalence_checks(R)) report.checks.push_back(std::move(result));
    return report;
}

std::vector<VerificationReport> run_suite(const SuiteConfig& config) {
    std::vector<VerificationReport> reports;

    int index = 0;
    for (const auto& g : connected_bipartite_graphs_up_to(config.exhaustive_max_n)) {
        auto inst = to_bipartite_instance(g, g.vertex_count());
        reports.push_back(
            verify_instance(inst, config.full_y, "exhaustive#" + std::to_string(index++)));
    }

    Rng rng(config.seed);
    for (int r = 0; r < config.random_count; ++r) {
        const int n1 = rng.range(1, config.random_max_part);
        const int n2 = rng.range(1, config.random_max_part);
        const double p = rng.unit();
        auto inst = random_bipartite_instance(rng, n1, n2, p, n1 + n2);
        reports.push_back(verify_instance(inst, config.full_y, "random#" + std::to_string(r)));
    }

    if (config.full_y_smoke) {
        // K2 normalizes to n = 4, so the full-scale default y = 160 stays tiny
        Graph k2(2);
        k2.add_edge(0, 1);
        k2.seal();
        auto inst = to_bipartite_instance(k2, 1);
        reports.push_back(verify_instance(inst, true, "smoke-full-y"));
    }
    return reports;
}

void write_report_json(std::ostream& out, const VerificationReport& report) {
    nlohmann::ordered_json j;
    j["instance"] = report.instance_name;
    j["n"] = report.n;
    j["y"] = report.y;
    j["source_edges"] = report.source_edges;
    j["passed"] = report.all_passed();
    auto checks = nlohmann::ordered_json::array();
    for (const auto& c : report.checks) {
        nlohmann::ordered_json jc;
        jc["name"] = c.name;
        jc["passed"] = c.passed;
        if (!c.detail.empty()) jc["detail"] = c.detail;
        checks.push_back(std::move(jc));
    }
    j["checks"] = std::move(checks);
    out << j.dump() << '\n';
}

std::string summary_table(const std::vector<VerificationReport>& reports) {
    std::ostringstream out;
    out << "instance          n      y  edges  checks  status\n";
    int failures = 0;
    for (const auto& r : reports) {
        int passed = 0;
        for (const auto& c : r.checks) passed += c.passed ? 1 : 0;
        if (!r.all_passed()) ++failures;
        out << r.instance_name;
        for (std::size_t pad = r.instance_name.size(); pad < 16; ++pad) out << ' ';
        out << ' ';
        std::string n = std::to_string(r.n), y = std::to_string(r.y),
                    e = std::to_string(r.source_edges);
        out << std::string(n.size() < 2 ? 2 - n.size() : 0, ' ') << n << ' ';
        out << std::string(y.size() < 6 ? 6 - y.size() : 0, ' ') << y << ' ';
        out << std::string(e.size() < 6 ? 6 - e.size() : 0, ' ') << e << "   ";
        out << passed << '/' << r.checks.size() << "   ";
        out << (r.all_passed() ? "ok" : "FAIL");
        for (const auto& c : r.checks)
            if (!c.passed) out << "  [" << c.name << ": " << c.detail << "]";
        out << '\n';
    }
    out << reports.size() << " instances, " << failures << " with failures\n";
    return out.str();
}

}  // namespace mdim
