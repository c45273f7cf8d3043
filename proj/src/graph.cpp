#include "mdim/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace mdim {

Graph::Graph(int vertex_count) {
    if (vertex_count < 0) throw std::invalid_argument("Graph: negative vertex count");
    adj_.resize(static_cast<std::size_t>(vertex_count));
}

void Graph::check_vertex(VertexId v, const char* op) const {
    if (v < 0 || v >= vertex_count())
        throw std::invalid_argument(std::string(op) + ": vertex out of range");
}

void Graph::require_sealed(const char* op) const {
    if (!sealed_) throw std::logic_error(std::string(op) + ": graph not sealed");
}

void Graph::require_unsealed(const char* op) const {
    if (sealed_) throw std::logic_error(std::string(op) + ": graph already sealed");
}

VertexId Graph::add_vertex() {
    require_unsealed("add_vertex");
    adj_.emplace_back();
    return vertex_count() - 1;
}

void Graph::add_edge(VertexId u, VertexId v) {
    require_unsealed("add_edge");
    check_vertex(u, "add_edge");
    check_vertex(v, "add_edge");
    if (u == v) throw std::invalid_argument("add_edge: self-loop");
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
    ++edges_;
}

std::vector<VertexId> Graph::add_path(VertexId u, VertexId v, std::int64_t length) {
    require_unsealed("add_path");
    check_vertex(u, "add_path");
    check_vertex(v, "add_path");
    if (u == v) throw std::invalid_argument("add_path: endpoints coincide");
    if (length < 1) throw std::invalid_argument("add_path: length must be >= 1");
    if (length == 1) {
        if (has_edge(u, v)) throw std::invalid_argument("add_path: parallel edge");
        add_edge(u, v);
        return {};
    }
    std::vector<VertexId> internals;
    internals.reserve(static_cast<std::size_t>(length - 1));
    VertexId prev = u;
    for (std::int64_t t = 1; t < length; ++t) {
        VertexId w = add_vertex();
        add_edge(prev, w);
        internals.push_back(w);
        prev = w;
    }
    add_edge(prev, v);
    return internals;
}

void Graph::seal() {
    require_unsealed("seal");
    for (std::size_t v = 0; v < adj_.size(); ++v) {
        auto& nb = adj_[v];
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
            throw std::invalid_argument("seal: parallel edge at vertex " + std::to_string(v));
    }
    sealed_ = true;
}

int Graph::degree(VertexId v) const {
    check_vertex(v, "degree");
    return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    check_vertex(u, "has_edge");
    check_vertex(v, "has_edge");
    const auto& nb = adj_[static_cast<std::size_t>(u)];
    if (sealed_) return std::binary_search(nb.begin(), nb.end(), v);
    return std::find(nb.begin(), nb.end(), v) != nb.end();
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
    require_sealed("neighbors");
    check_vertex(v, "neighbors");
    return adj_[static_cast<std::size_t>(v)];
}

DistanceRow Graph::bfs_distances(VertexId source) const {
    require_sealed("bfs_distances");
    check_vertex(source, "bfs_distances");
    DistanceRow row;
    row.source = source;
    row.dist.assign(adj_.size(), kUnreachable);
    std::vector<VertexId> queue;
    queue.reserve(adj_.size());
    queue.push_back(source);
    row.dist[static_cast<std::size_t>(source)] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        VertexId u = queue[head];
        std::int64_t du = row.dist[static_cast<std::size_t>(u)];
        for (VertexId w : adj_[static_cast<std::size_t>(u)]) {
            auto& dw = row.dist[static_cast<std::size_t>(w)];
            if (dw == kUnreachable) {
                dw = du + 1;
                queue.push_back(w);
            }
        }
    }
    return row;
}

std::map<int, std::int64_t> Graph::degree_profile() const {
    std::map<int, std::int64_t> profile;
    for (const auto& nb : adj_) ++profile[static_cast<int>(nb.size())];
    return profile;
}

std::vector<std::pair<VertexId, VertexId>> Graph::twin_leaf_pairs() const {
    // group degree-one vertices by their unique neighbor
    std::map<VertexId, std::vector<VertexId>> leaves_at;
    for (VertexId v = 0; v < vertex_count(); ++v)
        if (adj_[static_cast<std::size_t>(v)].size() == 1)
            leaves_at[adj_[static_cast<std::size_t>(v)][0]].push_back(v);
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (auto& [center, leaves] : leaves_at) {
        std::sort(leaves.begin(), leaves.end());
        for (std::size_t a = 0; a < leaves.size(); ++a)
            for (std::size_t b = a + 1; b < leaves.size(); ++b)
                pairs.emplace_back(leaves[a], leaves[b]);
    }
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

Graph read_graph_text(std::istream& in) {
    std::string line;
    long long n = -1, m = -1;
    Graph g;
    std::int64_t seen = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        char tag;
        ls >> tag;
        if (tag == 'p') {
            if (n >= 0) throw std::runtime_error("graph text: duplicate header");
            if (!(ls >> n >> m) || n < 0 || m < 0)
                throw std::runtime_error("graph text: malformed header");
            g = Graph(static_cast<int>(n));
        } else if (tag == 'e') {
            if (n < 0) throw std::runtime_error("graph text: edge before header");
            long long u, v;
            if (!(ls >> u >> v) || u < 1 || v < 1 || u > n || v > n)
                throw std::runtime_error("graph text: bad edge line: " + line);
            g.add_edge(static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1));
            ++seen;
        } else {
            throw std::runtime_error("graph text: unknown line: " + line);
        }
    }
    if (n < 0) throw std::runtime_error("graph text: missing header");
    if (seen != m) throw std::runtime_error("graph text: edge count mismatch");
    g.seal();
    return g;
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    return read_graph_text(in);
}

void write_graph_text(std::ostream& out, const Graph& g) {
    if (!g.is_sealed()) throw std::logic_error("write_graph_text: graph not sealed");
    out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (VertexId u = 0; u < g.vertex_count(); ++u)
        for (VertexId v : g.neighbors(u))
            if (u < v) out << "e " << (u + 1) << ' ' << (v + 1) << '\n';
}

void write_graph_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    write_graph_text(out, g);
}

}  // namespace mdim
