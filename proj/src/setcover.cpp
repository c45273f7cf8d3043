#include "mdim/setcover.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace mdim {

namespace {

// dynamic bitset over elements
struct Bits {
    std::vector<std::uint64_t> w;
    explicit Bits(int count = 0) : w(static_cast<std::size_t>((count + 63) / 64), 0) {}
    void set(int i) { w[static_cast<std::size_t>(i) >> 6] |= 1ull << (i & 63); }
    bool test(int i) const { return (w[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1; }
    int count() const {
        int c = 0;
        for (auto x : w) c += std::popcount(x);
        return c;
    }
    void or_with(const Bits& other) {
        for (std::size_t k = 0; k < w.size(); ++k) w[k] |= other.w[k];
    }
    bool operator<(const Bits& other) const { return w < other.w; }
};

struct Search {
    int element_count;
    std::vector<Bits> cover;                 // per kept candidate
    std::vector<int> candidate_id;           // kept candidate -> original index
    std::vector<std::vector<int>> coverers;  // per element: kept candidates covering it
    int best;
    std::vector<int> best_set;
    std::vector<int> stack;

    int new_gain(const Bits& covered, int c) const {
        int gain = 0;
        for (std::size_t k = 0; k < covered.w.size(); ++k)
            gain += std::popcount(cover[static_cast<std::size_t>(c)].w[k] & ~covered.w[k]);
        return gain;
    }

    // greedy packing of elements with pairwise disjoint coverer sets
    int lower_bound(const Bits& covered) const {
        std::vector<char> used(cover.size(), 0);
        int packed = 0;
        for (int e = 0; e < element_count; ++e) {
            if (covered.test(e)) continue;
            bool disjoint = true;
            for (int c : coverers[static_cast<std::size_t>(e)])
                if (used[static_cast<std::size_t>(c)]) {
                    disjoint = false;
                    break;
                }
            if (!disjoint) continue;
            for (int c : coverers[static_cast<std::size_t>(e)]) used[static_cast<std::size_t>(c)] = 1;
            ++packed;
        }
        return packed;
    }

    void dfs(const Bits& covered, int chosen) {
        if (covered.count() == element_count) {
            if (chosen < best) {
                best = chosen;
                best_set = stack;
            }
            return;
        }
        if (chosen + lower_bound(covered) >= best) return;
        // most constrained uncovered element
        int pick = -1, fewest = -1;
        for (int e = 0; e < element_count; ++e) {
            if (covered.test(e)) continue;
            int cnt = static_cast<int>(coverers[static_cast<std::size_t>(e)].size());
            if (fewest < 0 || cnt < fewest) {
                fewest = cnt;
                pick = e;
            }
        }
        std::vector<int> branch = coverers[static_cast<std::size_t>(pick)];
        std::stable_sort(branch.begin(), branch.end(), [&](int a, int b) {
            int ga = static_cast<int>(cover[static_cast<std::size_t>(a)].count());
            int gb = static_cast<int>(cover[static_cast<std::size_t>(b)].count());
            if (ga != gb) return ga > gb;
            return a < b;
        });
        for (int c : branch) {
            Bits next = covered;
            next.or_with(cover[static_cast<std::size_t>(c)]);
            stack.push_back(c);
            dfs(next, chosen + 1);
            stack.pop_back();
        }
    }
};

}  // namespace

std::optional<CoverResult> solve_min_cover(const CoverInstance& inst, int budget) {
    if (inst.element_count < 0) throw std::invalid_argument("solve_min_cover: bad element count");
    if (inst.element_count == 0) return CoverResult{0, {}};

    Search s;
    s.element_count = inst.element_count;

    // collapse duplicate columns, drop empty ones; smallest original id wins
    std::map<Bits, int> seen;
    for (std::size_t c = 0; c < inst.sets.size(); ++c) {
        Bits b(inst.element_count);
        for (int e : inst.sets[c]) {
            if (e < 0 || e >= inst.element_count)
                throw std::invalid_argument("solve_min_cover: element out of range");
            b.set(e);
        }
        if (b.count() == 0) continue;
        if (seen.emplace(b, static_cast<int>(c)).second) {
            s.cover.push_back(std::move(b));
            s.candidate_id.push_back(static_cast<int>(c));
        }
    }

    s.coverers.assign(static_cast<std::size_t>(inst.element_count), {});
    for (std::size_t c = 0; c < s.cover.size(); ++c)
        for (int e = 0; e < inst.element_count; ++e)
            if (s.cover[c].test(e)) s.coverers[static_cast<std::size_t>(e)].push_back(static_cast<int>(c));
    for (int e = 0; e < inst.element_count; ++e)
        if (s.coverers[static_cast<std::size_t>(e)].empty()) return std::nullopt;

    // greedy incumbent; every element has a coverer so this terminates
    Bits none(inst.element_count);
    {
        Bits covered(inst.element_count);
        std::vector<int> chosen;
        while (covered.count() < inst.element_count) {
            int best_gain = 0, pick = -1;
            for (std::size_t c = 0; c < s.cover.size(); ++c) {
                int gain = s.new_gain(covered, static_cast<int>(c));
                if (gain > best_gain) {
                    best_gain = gain;
                    pick = static_cast<int>(c);
                }
            }
            covered.or_with(s.cover[static_cast<std::size_t>(pick)]);
            chosen.push_back(pick);
        }
        s.best = static_cast<int>(chosen.size());
        s.best_set = std::move(chosen);
    }
    s.dfs(none, 0);

    if (budget >= 0 && s.best > budget) return std::nullopt;
    CoverResult result;
    result.size = s.best;
    for (int c : s.best_set) result.chosen.push_back(s.candidate_id[static_cast<std::size_t>(c)]);
    std::sort(result.chosen.begin(), result.chosen.end());
    return result;
}

}  // namespace mdim
