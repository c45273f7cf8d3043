#include "mdim/resolving.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "mdim/setcover.hpp"

namespace mdim {

bool separates(const Graph& g, VertexId v, VertexId u, VertexId w) {
    if (u == w) throw std::invalid_argument("separates: u and w must differ");
    DistanceRow row = g.bfs_distances(v);
    return row[u] != row[w];
}

namespace {

// vertex order sorted by distance signature over the landmark rows
std::vector<std::vector<VertexId>> signature_groups(const Graph& g,
                                                    const std::vector<VertexId>& landmarks) {
    std::vector<DistanceRow> rows;
    rows.reserve(landmarks.size());
    for (VertexId v : landmarks) rows.push_back(g.bfs_distances(v));

    std::vector<VertexId> order(static_cast<std::size_t>(g.vertex_count()));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
        for (const auto& row : rows) {
            if (row[a] != row[b]) return row[a] < row[b];
        }
        return a < b;
    });

    auto same = [&](VertexId a, VertexId b) {
        for (const auto& row : rows)
            if (row[a] != row[b]) return false;
        return true;
    };

    std::vector<std::vector<VertexId>> groups;
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i + 1;
        while (j < order.size() && same(order[i], order[j])) ++j;
        if (j - i >= 2) groups.emplace_back(order.begin() + static_cast<std::ptrdiff_t>(i),
                                            order.begin() + static_cast<std::ptrdiff_t>(j));
        i = j;
    }
    return groups;
}

}  // namespace

std::vector<std::pair<VertexId, VertexId>> unresolved_pairs(const Graph& g,
                                                            const std::vector<VertexId>& landmarks) {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (const auto& group : signature_groups(g, landmarks))
        for (std::size_t a = 0; a < group.size(); ++a)
            for (std::size_t b = a + 1; b < group.size(); ++b)
                pairs.emplace_back(std::min(group[a], group[b]), std::max(group[a], group[b]));
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

bool is_resolving_set(const Graph& g, const std::vector<VertexId>& landmarks) {
    return signature_groups(g, landmarks).empty();
}

SeparationMatrix SeparationMatrix::build(const Graph& g,
                                         const std::vector<std::pair<VertexId, VertexId>>& pairs,
                                         const std::vector<VertexId>& candidates) {
    SeparationMatrix m;
    m.pairs = pairs;
    m.candidates = candidates;
    m.words_ = (candidates.size() + 63) / 64;
    m.bits_.assign(pairs.size() * m.words_, 0);

    std::map<VertexId, DistanceRow> row_of;  // BFS cache keyed by pair endpoint
    for (const auto& [u, w] : pairs) {
        if (!row_of.count(u)) row_of.emplace(u, g.bfs_distances(u));
        if (!row_of.count(w)) row_of.emplace(w, g.bfs_distances(w));
    }
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        const DistanceRow& du = row_of.at(pairs[p].first);
        const DistanceRow& dw = row_of.at(pairs[p].second);
        for (std::size_t c = 0; c < candidates.size(); ++c)
            if (du[candidates[c]] != dw[candidates[c]])
                m.bits_[p * m.words_ + (c >> 6)] |= 1ull << (c & 63);
    }
    return m;
}

std::optional<MdResult> exact_md_naive(const Graph& g, int k_max) {
    const int n = g.vertex_count();
    std::vector<DistanceRow> dist;
    dist.reserve(static_cast<std::size_t>(n));
    for (VertexId v = 0; v < n; ++v) dist.push_back(g.bfs_distances(v));

    std::vector<std::pair<VertexId, VertexId>> all_pairs;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId w = u + 1; w < n; ++w) all_pairs.emplace_back(u, w);

    auto resolving = [&](const std::vector<VertexId>& subset) {
        for (const auto& [u, w] : all_pairs) {
            bool sep = false;
            for (VertexId l : subset)
                if (dist[static_cast<std::size_t>(l)][u] != dist[static_cast<std::size_t>(l)][w]) {
                    sep = true;
                    break;
                }
            if (!sep) return false;
        }
        return true;
    };

    for (int k = 0; k <= std::min(k_max, n); ++k) {
        std::vector<VertexId> subset(static_cast<std::size_t>(k));
        std::iota(subset.begin(), subset.end(), 0);
        while (true) {
            if (resolving(subset)) return MdResult{k, subset};
            // next k-combination in lexicographic order
            int i = k - 1;
            while (i >= 0 && subset[static_cast<std::size_t>(i)] == n - k + i) --i;
            if (i < 0) break;
            ++subset[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return std::nullopt;
}

std::optional<MdResult> exact_md_cover(const Graph& g, const std::vector<VertexId>& forced,
                                       const std::vector<VertexId>& candidates, int budget) {
    std::vector<VertexId> base = forced;
    std::sort(base.begin(), base.end());
    base.erase(std::unique(base.begin(), base.end()), base.end());
    if (budget < static_cast<int>(base.size())) return std::nullopt;

    auto open = unresolved_pairs(g, base);
    if (open.empty()) return MdResult{static_cast<int>(base.size()), base};

    std::vector<VertexId> pool = candidates;
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    pool.erase(std::remove_if(pool.begin(), pool.end(),
                              [&](VertexId v) {
                                  return std::binary_search(base.begin(), base.end(), v);
                              }),
               pool.end());

    SeparationMatrix matrix = SeparationMatrix::build(g, open, pool);
    CoverInstance cover;
    cover.element_count = static_cast<int>(open.size());
    cover.sets.resize(pool.size());
    for (std::size_t c = 0; c < pool.size(); ++c)
        for (std::size_t p = 0; p < open.size(); ++p)
            if (matrix.cell(p, c)) cover.sets[c].push_back(static_cast<int>(p));

    auto solved = solve_min_cover(cover, budget - static_cast<int>(base.size()));
    if (!solved) return std::nullopt;

    MdResult result;
    result.witness = base;
    for (int c : solved->chosen) result.witness.push_back(pool[static_cast<std::size_t>(c)]);
    std::sort(result.witness.begin(), result.witness.end());
    result.size = static_cast<int>(result.witness.size());
    return result;
}

std::vector<VertexId> greedy_resolving_set(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<VertexId> landmarks;
    if (n <= 1) return landmarks;

    std::vector<std::vector<VertexId>> classes{std::vector<VertexId>(static_cast<std::size_t>(n))};
    std::iota(classes[0].begin(), classes[0].end(), 0);

    auto pair_count = [](std::size_t size) {
        return static_cast<std::int64_t>(size) * static_cast<std::int64_t>(size - 1) / 2;
    };

    std::vector<char> picked(static_cast<std::size_t>(n), 0);
    while (!classes.empty()) {
        std::int64_t best_gain = -1;
        VertexId best = -1;
        for (VertexId v = 0; v < n; ++v) {
            if (picked[static_cast<std::size_t>(v)]) continue;
            DistanceRow row = g.bfs_distances(v);
            std::int64_t gain = 0;
            for (const auto& cls : classes) {
                std::map<std::int64_t, std::int64_t> by_dist;
                for (VertexId u : cls) ++by_dist[row[u]];
                gain += pair_count(cls.size());
                for (const auto& [d, cnt] : by_dist) gain -= pair_count(static_cast<std::size_t>(cnt));
            }
            if (gain > best_gain) {
                best_gain = gain;
                best = v;
            }
        }
        // some candidate always separates something: for any unresolved pair
        // {u,w}, u itself separates it
        DistanceRow row = g.bfs_distances(best);
        picked[static_cast<std::size_t>(best)] = 1;
        landmarks.push_back(best);
        std::vector<std::vector<VertexId>> refined;
        for (const auto& cls : classes) {
            std::map<std::int64_t, std::vector<VertexId>> split;
            for (VertexId u : cls) split[row[u]].push_back(u);
            for (auto& [d, part] : split)
                if (part.size() >= 2) refined.push_back(std::move(part));
        }
        classes = std::move(refined);
    }
    std::sort(landmarks.begin(), landmarks.end());
    return landmarks;
}

}  // namespace mdim
