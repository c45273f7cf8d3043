#ifndef MDIM_SETCOVER_HPP
#define MDIM_SETCOVER_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace mdim {

/// Unweighted minimum set cover, exact. Elements are 0..element_count-1,
/// candidates are indexed by position in `sets`; sets[c] lists the elements
/// candidate c covers (sorted ascending).
struct CoverInstance {
    int element_count = 0;
    std::vector<std::vector<int>> sets;
};

struct CoverResult {
    int size = 0;
    std::vector<int> chosen;  // candidate indices, sorted ascending
};

/// Deterministic branch-and-bound: branch on the uncovered element with the
/// fewest covering candidates, candidates tried by descending static coverage
/// (ties ascending index); lower bound by greedy packing of candidate-disjoint
/// elements; initial upper bound by greedy cover. Duplicate candidate columns
/// are collapsed to their smallest index. Returns nullopt when some element is
/// uncoverable or the optimum exceeds `budget` (budget < 0 means unbounded).
std::optional<CoverResult> solve_min_cover(const CoverInstance& inst, int budget = -1);

}  // namespace mdim

#endif
