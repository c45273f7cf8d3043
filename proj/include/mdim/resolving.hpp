#ifndef MDIM_RESOLVING_HPP
#define MDIM_RESOLVING_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mdim/graph.hpp"

namespace mdim {

/// Landmark v separates {u,w} iff dist(v,u) != dist(v,w). Unreachable
/// distances compare equal to each other and unequal to any finite distance,
/// so a landmark never separates two vertices it cannot reach.
bool separates(const Graph& g, VertexId v, VertexId u, VertexId w);

/// Exactly the pairs {u,w}, u < w, with dist(v,u) = dist(v,w) for every
/// landmark v; one BFS per landmark, pairs sorted. With no landmarks this is
/// all vertex pairs, so call it on large graphs only with a useful set.
std::vector<std::pair<VertexId, VertexId>> unresolved_pairs(const Graph& g,
                                                            const std::vector<VertexId>& landmarks);

bool is_resolving_set(const Graph& g, const std::vector<VertexId>& landmarks);

/// Boolean matrix pair x candidate: does the candidate separate the pair.
/// Built with one BFS per distinct pair endpoint rather than one per
/// candidate; in the reduction use-case there are far fewer pairs.
struct SeparationMatrix {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    std::vector<VertexId> candidates;

    bool cell(std::size_t pair_index, std::size_t candidate_index) const {
        return bits_[pair_index * words_ + (candidate_index >> 6)] >> (candidate_index & 63) & 1;
    }

    static SeparationMatrix build(const Graph& g,
                                  const std::vector<std::pair<VertexId, VertexId>>& pairs,
                                  const std::vector<VertexId>& candidates);

private:
    std::vector<std::uint64_t> bits_;
    std::size_t words_ = 0;
};

struct MdResult {
    int size = 0;
    std::vector<VertexId> witness;  // sorted ascending
};

/// Smallest k <= k_max admitting a resolving set, by subset enumeration in
/// lexicographic order; the witness is the lexicographically smallest one.
/// Meant for small graphs (roughly <= 12 vertices) or tiny k_max.
std::optional<MdResult> exact_md_naive(const Graph& g, int k_max);

/// Minimum-size resolving superset of `forced` drawn from forced plus
/// `candidates`, found by branch-and-bound over the separation matrix
/// restricted to the pairs `forced` leaves unresolved. Returns nullopt when
/// no such set within `budget` exists.
std::optional<MdResult> exact_md_cover(const Graph& g, const std::vector<VertexId>& forced,
                                       const std::vector<VertexId>& candidates, int budget);

/// Iteratively picks the vertex separating the most still-unresolved pairs,
/// ties by ascending id. The result is always resolving.
std::vector<VertexId> greedy_resolving_set(const Graph& g);

}  // namespace mdim

#endif
