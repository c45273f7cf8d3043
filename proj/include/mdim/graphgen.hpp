#ifndef MDIM_GRAPHGEN_HPP
#define MDIM_GRAPHGEN_HPP

#include <cstdint>
#include <vector>

#include "mdim/bds.hpp"
#include "mdim/graph.hpp"
#include "mdim/rng.hpp"

namespace mdim {

/// Isomorphism-free generation by canonical edge-set enumeration: every
/// labelled edge set on exactly n vertices is kept iff it is the minimum of
/// its permutation orbit. Practical for n <= 7.
std::vector<Graph> connected_graphs(int n);
std::vector<Graph> connected_bipartite_graphs(int n);

/// All sizes 1..max_n concatenated.
std::vector<Graph> connected_graphs_up_to(int max_n);
std::vector<Graph> connected_bipartite_graphs_up_to(int max_n);

/// Wraps a connected bipartite graph as a BipartiteInstance: the side
/// containing vertex 0 becomes V1 and vertices are renumbered part-first.
/// Isolated vertices (only possible for n = 1) land in V1.
BipartiteInstance to_bipartite_instance(const Graph& g, int budget);

/// Seeded G(n1, n2, p) bipartite instance; names a1.. / b1..; h = budget.
BipartiteInstance random_bipartite_instance(Rng& rng, int n1, int n2, double edge_prob,
                                            int budget);

/// Seeded G(n, p); when `connected` is set, redraws until connected.
Graph random_graph(Rng& rng, int n, double edge_prob, bool connected);

}  // namespace mdim

#endif
