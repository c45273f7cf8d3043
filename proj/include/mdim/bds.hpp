#ifndef MDIM_BDS_HPP
#define MDIM_BDS_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "mdim/graph.hpp"

namespace mdim {

/// Bipartite Dominating Set instance.
///
/// Vertices follow the numbering discipline v_1..v_n with V1 = {v_1..v_s}
/// and V2 = {v_{s+1}..v_n}; in memory they are the 0-indexed graph vertices
/// 0..n-1, so V1 occupies [0, part1_size) and V2 occupies [part1_size, n).
/// Every edge must have one endpoint in each part.
struct BipartiteInstance {
    Graph graph;  // sealed
    int part1_size = 0;
    int budget = 0;  // h >= 1
    std::vector<std::string> names;  // one per vertex, unique

    int size() const { return graph.vertex_count(); }
    bool in_part1(VertexId v) const { return v < part1_size; }
};

/// Builds an instance from a sealed graph and part size; default names are
/// v1..vn. Throws if some edge does not bridge the two parts.
BipartiteInstance make_bipartite_instance(Graph graph, int part1_size, int budget,
                                          std::vector<std::string> names = {});

/// True iff every vertex of the instance has a closed-neighborhood member in D.
bool is_dominating_set(const BipartiteInstance& inst, const std::vector<VertexId>& members);

/// True iff every edge {v_i, v_j}, i < j (1-based), satisfies j >= i + 3.
bool has_normalized_gaps(const BipartiteInstance& inst);

struct NormalizeResult {
    BipartiteInstance instance;
    std::vector<VertexId> old_to_new;  // index map into the returned instance
    bool changed = false;
};

/// Renumbering preproceessing: if any edge violates the index gap j >= i+3,
/// appends two fresh isolated vertices to V1 (numbered v_{s+1}, v_{s+2}),
/// shifts the old V2 up by two and raises the budget by two. Instances whose
/// gaps already hold pass through untouched. The minimum dominating set size
/// of the output exceeds the input's by exactly two when the shift applies.
NormalizeResult normalize_with_map(const BipartiteInstance& inst);
BipartiteInstance normalize(const BipartiteInstance& inst);

struct DomsetResult {
    int size = 0;
    std::vector<VertexId> witness;  // sorted ascending; lexicographically smallest
};

/// Exact minimum dominating set by branch-and-bound (vertices ordered by
/// descending closed-neighborhood size, greedy upper bound) followed by a
/// lexicographic refinement of the witness. Isolated vertices are forced
/// members. Throws when the instance exceeds `cap` vertices.
DomsetResult exact_min_dominating_set(const BipartiteInstance& inst, int cap = 16);

/// JSON instance format:
///   {"v1": [names...], "v2": [names...], "edges": [[name,name]...], "h": int}
/// Names map to vertex indices in declaration order (v1 first).
BipartiteInstance read_bds_json(std::istream& in);
BipartiteInstance read_bds_file(const std::string& path);
void write_bds_json(std::ostream& out, const BipartiteInstance& inst);
void write_bds_file(const std::string& path, const BipartiteInstance& inst);

}  // namespace mdim

#endif
