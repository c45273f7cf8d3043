#ifndef MDIM_RBDS_HPP
#define MDIM_RBDS_HPP

#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "mdim/graph.hpp"

namespace mdim {

/// Red-Blue Dominating Set instance produced from a Metric Dimension
/// instance: red vertices are the graph vertices, one blue vertex per
/// unordered vertex pair, and red v is adjacent to blue {u,w} exactly when v
/// separates the pair.
struct RbdsInstance {
    int red_count = 0;
    std::vector<std::pair<VertexId, VertexId>> blue_pairs;  // u < w, sorted
    std::vector<std::vector<int>> red_neighbors;            // per blue: sorted red ids
    int budget = 0;
};

RbdsInstance md_to_rbds(const Graph& g, int k);

struct RbdsResult {
    int size = 0;
    std::vector<int> witness;  // red vertices, sorted ascending
};

/// Minimum red set dominating every blue vertex; same branch-and-bound engine
/// as the cover-based Metric Dimension solver. Nullopt when some blue vertex
/// has no red neighbor.
std::optional<RbdsResult> exact_min_rbds(const RbdsInstance& inst);

/// JSON dump for external solvers; red ids and pair entries are 1-indexed to
/// match the graph text format.
void write_rbds_json(std::ostream& out, const RbdsInstance& inst);

}  // namespace mdim

#endif
