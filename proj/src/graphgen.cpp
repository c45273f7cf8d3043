#include "mdim/graphgen.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace mdim {

namespace {

int pair_count(int n) { return n * (n - 1) / 2; }

// fixed bit order (0,1),(0,2),..,(0,n-1),(1,2),..
int edge_bit(int u, int v, int n) {
    if (u > v) std::swap(u, v);
    return u * n - u * (u + 1) / 2 + (v - u - 1);
}

std::vector<std::uint32_t> adjacency_masks(std::uint32_t mask, int n) {
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (mask >> edge_bit(u, v, n) & 1) {
                adj[static_cast<std::size_t>(u)] |= 1u << v;
                adj[static_cast<std::size_t>(v)] |= 1u << u;
            }
    return adj;
}

bool mask_connected(std::uint32_t mask, int n) {
    auto adj = adjacency_masks(mask, n);
    std::uint32_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint32_t next = 0;
        for (int v = 0; v < n; ++v)
            if (frontier >> v & 1) next |= adj[static_cast<std::size_t>(v)];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (n == 32 ? ~0u : (1u << n) - 1);
}

bool mask_bipartite(std::uint32_t mask, int n) {
    auto adj = adjacency_masks(mask, n);
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    for (int start = 0; start < n; ++start) {
        if (color[static_cast<std::size_t>(start)] != -1) continue;
        color[static_cast<std::size_t>(start)] = 0;
        std::vector<int> queue{start};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (int v = 0; v < n; ++v)
                if (adj[static_cast<std::size_t>(u)] >> v & 1) {
                    if (color[static_cast<std::size_t>(v)] == -1) {
                        color[static_cast<std::size_t>(v)] = 1 - color[static_cast<std::size_t>(u)];
                        queue.push_back(v);
                    } else if (color[static_cast<std::size_t>(v)] ==
                               color[static_cast<std::size_t>(u)]) {
                        return false;
                    }
                }
        }
    }
    return true;
}

Graph graph_from_mask(std::uint32_t mask, int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (mask >> edge_bit(u, v, n) & 1) g.add_edge(u, v);
    g.seal();
    return g;
}

std::vector<Graph> enumerate_connected(int n, bool bipartite_only) {
    if (n < 1 || n > 7) throw std::invalid_argument("graph enumeration: n must be in [1,7]");
    if (n == 1) {
        std::vector<Graph> out;
        Graph g(1);
        g.seal();
        out.push_back(std::move(g));
        return out;
    }

    // bit remap tables, one per permutation
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    const int bits = pair_count(n);
    std::vector<std::vector<int>> remaps;
    do {
        std::vector<int> table(static_cast<std::size_t>(bits));
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                table[static_cast<std::size_t>(edge_bit(u, v, n))] =
                    edge_bit(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)], n);
        remaps.push_back(std::move(table));
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<Graph> out;
    for (std::uint32_t mask = 0; mask < (1u << bits); ++mask) {
        if (!mask_connected(mask, n)) continue;
        if (bipartite_only && !mask_bipartite(mask, n)) continue;
        bool canonical = true;
        for (const auto& table : remaps) {
            std::uint32_t image = 0;
            std::uint32_t rest = mask;
            while (rest) {
                int b = std::countr_zero(rest);
                rest &= rest - 1;
                image |= 1u << table[static_cast<std::size_t>(b)];
            }
            if (image < mask) {
                canonical = false;
                break;
            }
        }
        if (canonical) out.push_back(graph_from_mask(mask, n));
    }
    return out;
}

}  // namespace

std::vector<Graph> connected_graphs(int n) { return enumerate_connected(n, false); }

std::vector<Graph> connected_bipartite_graphs(int n) { return enumerate_connected(n, true); }

std::vector<Graph> connected_graphs_up_to(int max_n) {
    std::vector<Graph> out;
    for (int n = 1; n <= max_n; ++n)
        for (auto& g : connected_graphs(n)) out.push_back(std::move(g));
    return out;
}

std::vector<Graph> connected_bipartite_graphs_up_to(int max_n) {
    std::vector<Graph> out;
    for (int n = 1; n <= max_n; ++n)
        for (auto& g : connected_bipartite_graphs(n)) out.push_back(std::move(g));
    return out;
}

BipartiteInstance to_bipartite_instance(const Graph& g, int budget) {
    const int n = g.vertex_count();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    for (int start = 0; start < n; ++start) {
        if (color[static_cast<std::size_t>(start)] != -1) continue;
        color[static_cast<std::size_t>(start)] = 0;
        std::vector<VertexId> queue{start};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            VertexId u = queue[head];
            for (VertexId v : g.neighbors(u)) {
                if (color[static_cast<std::size_t>(v)] == -1) {
                    color[static_cast<std::size_t>(v)] = 1 - color[static_cast<std::size_t>(u)];
                    queue.push_back(v);
                } else if (color[static_cast<std::size_t>(v)] == color[static_cast<std::size_t>(u)]) {
                    throw std::invalid_argument("to_bipartite_instance: graph is not bipartite");
                }
            }
        }
    }
    // part of vertex 0 first, both parts keep ascending order
    std::vector<VertexId> old_to_new(static_cast<std::size_t>(n));
    int next = 0;
    for (VertexId v = 0; v < n; ++v)
        if (color[static_cast<std::size_t>(v)] == 0) old_to_new[static_cast<std::size_t>(v)] = next++;
    const int part1 = next;
    for (VertexId v = 0; v < n; ++v)
        if (color[static_cast<std::size_t>(v)] == 1) old_to_new[static_cast<std::size_t>(v)] = next++;

    Graph h(n);
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v : g.neighbors(u))
            if (u < v)
                h.add_edge(old_to_new[static_cast<std::size_t>(u)],
                           old_to_new[static_cast<std::size_t>(v)]);
    h.seal();
    return make_bipartite_instance(std::move(h), part1, budget);
}

BipartiteInstance random_bipartite_instance(Rng& rng, int n1, int n2, double edge_prob,
                                            int budget) {
    if (n1 < 1 || n2 < 0) throw std::invalid_argument("random_bipartite_instance: bad part sizes");
    Graph g(n1 + n2);
    for (int a = 0; a < n1; ++a)
        for (int b = 0; b < n2; ++b)
            if (rng.unit() < edge_prob) g.add_edge(a, n1 + b);
    g.seal();
    std::vector<std::string> names;
    for (int a = 1; a <= n1; ++a) names.push_back("a" + std::to_string(a));
    for (int b = 1; b <= n2; ++b) names.push_back("b" + std::to_string(b));
    return make_bipartite_instance(std::move(g), n1, budget, std::move(names));
}

Graph random_graph(Rng& rng, int n, double edge_prob, bool connected) {
    for (int attempt = 0; attempt < 100000; ++attempt) {
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.unit() < edge_prob) g.add_edge(u, v);
        g.seal();
        if (!connected) return g;
        DistanceRow row = g.bfs_distances(0);
        bool ok = true;
        for (VertexId v = 0; v < n; ++v)
            if (!row.reachable(v)) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw std::runtime_error("random_graph: failed to draw a connected graph");
}

}  // namespace mdim
