#ifndef MDIM_VERIFY_HPP
#define MDIM_VERIFY_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mdim/bds.hpp"
#include "mdim/reduction.hpp"

namespace mdim {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;  // first counterexample when failed, brief stats otherwise
};

struct VerificationReport {
    std::string instance_name;
    int n = 0;                      // source size after normalization
    std::int64_t y = 0;
    std::int64_t source_edges = 0;
    std::vector<CheckResult> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

/// Degree profile (max exactly 3), connectivity, vertex/edge census, and the
/// four twin-leaf pairs being precisely the P3 leaves.
CheckResult check_structure(const ReductionInstance& R);

/// The four designated leaves leave exactly the n^2 pairs {l^i_j, r^i_j}
/// unresolved; verified as a full census over all vertex pairs of G'.
CheckResult check_forced_landmark_census(const ReductionInstance& R);

/// BFS distance equals the formula value on every covered label pair.
CheckResult check_closed_form(const ReductionInstance& R);

/// Gadget route sanity: attachment-to-entrance distances, the edge-gadget
/// traversal cost window, and the entry-vertex discipline for paths from the
/// top-left leaf.
CheckResult check_route_discipline(const ReductionInstance& R);

/// For every source edge {v_i, v_a}: r^a_1 separates every pair
/// {l^i_j, r^i_j} and its distance to r^i_j follows the traversal formula;
/// for non-edges the pairs stay unseparated.
CheckResult check_adjacent_gadget_separation(const ReductionInstance& R);

/// End-to-end optimum correspondence on one instance: minimum dominating set
/// of the normalized source plus four equals the metric dimension of G',
/// via independent solvers, with both witness maps round-tripping.
CheckResult check_equivalence(const BipartiteInstance& inst, bool full_y);

struct SuiteConfig {
    int exhaustive_max_n = 6;    // connected bipartite sources, exhaustive up to isomorphism
    int random_count = 50;       // seeded random bipartite sources
    int random_max_part = 4;     // each side at most this (total <= 8)
    std::uint64_t seed = 0x6d646d3173756974ull;
    bool full_y = false;        // minimal test y unless set
    bool full_y_smoke = true;    // one extra instance at y = 10n^2
};

/// All checks over one built instance; granular results.
VerificationReport verify_instance(const BipartiteInstance& raw, bool full_y,
                                   const std::string& name);

/// Exhaustive-small plus seeded-random coverage; deterministic given the seed.
std::vector<VerificationReport> run_suite(const SuiteConfig& config);

/// One JSON object per line.
void write_report_json(std::ostream& out, const VerificationReport& report);
std::string summary_table(const std::vector<VerificationReport>& reports);

}  // namespace mdim

#endif
