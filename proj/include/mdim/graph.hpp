#ifndef MDIM_GRAPH_HPP
#define MDIM_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace mdim {

/// Dense vertex index in [0, vertex_count).
using VertexId = int;

/// Sentinel for "no path"; never a large finite stand-in.
inline constexpr std::int64_t kUnreachable = -1;

/// Exact BFS distances from a single source.
struct DistanceRow {
    VertexId source = 0;
    std::vector<std::int64_t> dist;  // kUnreachable where no path exists

    std::int64_t operator[](VertexId v) const { return dist[static_cast<std::size_t>(v)]; }
    bool reachable(VertexId v) const { return dist[static_cast<std::size_t>(v)] != kUnreachable; }
};

/// Undirected simple unweighted graph.
///
/// Life cycle: vertices and edges are appended during a build phase, then the
/// graph is sealed. Sealing sorts all adjacency lists ascending (canonical
/// form) and validates simplicity. Queries (neighbors, BFS, ...) require a
/// sealed graph; mutation after sealing is an error. Sealed graphs are
/// immutable and safe to share across threads.
class Graph {
public:
    Graph() = default;
    explicit Graph(int vertex_count);

    VertexId add_vertex();
    void add_edge(VertexId u, VertexId v);

    /// Connects u and v by a path with `length` edges, inserting length-1
    /// fresh internal vertices. Returns the internals ordered from u to v;
    /// length 1 adds the edge {u,v} directly and returns an empty list.
    std::vector<VertexId> add_path(VertexId u, VertexId v, std::int64_t length);

    void seal();
    bool is_sealed() const { return sealed_; }

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    std::int64_t edge_count() const { return edges_; }
    int degree(VertexId v) const;
    bool has_edge(VertexId u, VertexId v) const;
    std::span<const VertexId> neighbors(VertexId v) const;

    /// Exact single-source shortest paths; requires a sealed graph.
    DistanceRow bfs_distances(VertexId source) const;

    /// Histogram degree -> number of vertices of that degree.
    std::map<int, std::int64_t> degree_profile() const;

    /// All pairs {a,b} of distinct degree-one vertices sharing their unique
    /// neighbor (open-neighborhood twins). Pairs and list are sorted.
    std::vector<std::pair<VertexId, VertexId>> twin_leaf_pairs() const;

private:
    void check_vertex(VertexId v, const char* op) const;
    void require_sealed(const char* op) const;
    void require_unsealed(const char* op) const;

    std::vector<std::vector<VertexId>> adj_;
    std::int64_t edges_ = 0;
    bool sealed_ = false;
};

/// Text format: header `p <n> <m>`, then one `e <u> <v>` line per edge,
/// 1-indexed. Reader normalizes to 0-indexed ids and seals; lines starting
/// with `c` are ignored. Writer emits edges with u < v, sorted.
Graph read_graph_text(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph_text(std::ostream& out, const Graph& g);
void write_graph_file(const std::string& path, const Graph& g);

}  // namespace mdim

#endif
