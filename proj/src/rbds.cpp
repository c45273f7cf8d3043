#include "mdim/rbds.hpp"

#include <ostream>

#include "json.hpp"
#include "mdim/setcover.hpp"

namespace mdim {

RbdsInstance md_to_rbds(const Graph& g, int k) {
    const int n = g.vertex_count();
    RbdsInstance inst;
    inst.red_count = n;
    inst.budget = k;

    std::vector<DistanceRow> rows;
    rows.reserve(static_cast<std::size_t>(n));
    for (VertexId v = 0; v < n; ++v) rows.push_back(g.bfs_distances(v));

    for (VertexId u = 0; u < n; ++u)
        for (VertexId w = u + 1; w < n; ++w) {
            inst.blue_pairs.emplace_back(u, w);
            std::vector<int> reds;
            for (VertexId v = 0; v < n; ++v)
                if (rows[static_cast<std::size_t>(v)][u] != rows[static_cast<std::size_t>(v)][w])
                    reds.push_back(v);
            inst.red_neighbors.push_back(std::move(reds));
        }
    return inst;
}

std::optional<RbdsResult> exact_min_rbds(const RbdsInstance& inst) {
    for (const auto& reds : inst.red_neighbors)
        if (reds.empty()) return std::nullopt;

    CoverInstance cover;
    cover.element_count = static_cast<int>(inst.blue_pairs.size());
    cover.sets.resize(static_cast<std::size_t>(inst.red_count));
    for (std::size_t b = 0; b < inst.red_neighbors.size(); ++b)
        for (int r : inst.red_neighbors[b])
            cover.sets[static_cast<std::size_t>(r)].push_back(static_cast<int>(b));

    auto solved = solve_min_cover(cover);
    if (!solved) return std::nullopt;
    return RbdsResult{solved->size, solved->chosen};
}

void write_rbds_json(std::ostream& out, const RbdsInstance& inst) {
    nlohmann::ordered_json j;
    j["red_count"] = inst.red_count;
    j["budget"] = inst.budget;
    auto pairs = nlohmann::ordered_json::array();
    auto adjacency = nlohmann::ordered_json::array();
    for (std::size_t b = 0; b < inst.blue_pairs.size(); ++b) {
        pairs.push_back({inst.blue_pairs[b].first + 1, inst.blue_pairs[b].second + 1});
        auto reds = nlohmann::ordered_json::array();
        for (int r : inst.red_neighbors[b]) reds.push_back(r + 1);
        adjacency.push_back(std::move(reds));
    }
    j["blue_pairs"] = std::move(pairs);
    j["red_adjacency"] = std::move(adjacency);
    out << j.dump(2) << '\n';
}

}  // namespace mdim
