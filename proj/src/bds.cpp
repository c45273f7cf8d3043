#include "mdim/bds.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "json.hpp"

namespace mdim {

namespace {

std::vector<std::string> default_names(int n) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) names.push_back("v" + std::to_string(i));
    return names;
}

void validate_instance(const BipartiteInstance& inst) {
    if (!inst.graph.is_sealed()) throw std::invalid_argument("bds: graph must be sealed");
    if (inst.part1_size < 0 || inst.part1_size > inst.size())
        throw std::invalid_argument("bds: part1_size out of range");
    if (inst.budget < 1) throw std::invalid_argument("bds: budget must be >= 1");
    if (static_cast<int>(inst.names.size()) != inst.size())
        throw std::invalid_argument("bds: one name per vertex required");
    for (VertexId u = 0; u < inst.size(); ++u)
        for (VertexId v : inst.graph.neighbors(u))
            if (inst.in_part1(u) == inst.in_part1(v))
                throw std::invalid_argument("bds: edge inside one part (not bipartite)");
}

}  // namespace

BipartiteInstance make_bipartite_instance(Graph graph, int part1_size, int budget,
                                          std::vector<std::string> names) {
    BipartiteInstance inst;
    inst.graph = std::move(graph);
    inst.part1_size = part1_size;
    inst.budget = budget;
    inst.names = names.empty() ? default_names(inst.graph.vertex_count()) : std::move(names);
    validate_instance(inst);
    return inst;
}

bool is_dominating_set(const BipartiteInstance& inst, const std::vector<VertexId>& members) {
    std::vector<char> in_set(static_cast<std::size_t>(inst.size()), 0);
    for (VertexId v : members) {
        if (v < 0 || v >= inst.size()) throw std::invalid_argument("is_dominating_set: bad vertex");
        in_set[static_cast<std::size_t>(v)] = 1;
    }
    for (VertexId v = 0; v < inst.size(); ++v) {
        if (in_set[static_cast<std::size_t>(v)]) continue;
        bool dominated = false;
        for (VertexId w : inst.graph.neighbors(v))
            if (in_set[static_cast<std::size_t>(w)]) {
                dominated = true;
                break;
            }
        if (!dominated) return false;
    }
    return true;
}

bool has_normalized_gaps(const BipartiteInstance& inst) {
    for (VertexId u = 0; u < inst.size(); ++u)
        for (VertexId v : inst.graph.neighbors(u))
            if (u < v && v - u < 3) return false;
    return true;
}

NormalizeResult normalize_with_map(const BipartiteInstance& inst) {
    validate_instance(inst);
    NormalizeResult result;
    if (has_normalized_gaps(inst)) {
        result.instance = inst;
        result.old_to_new.resize(static_cast<std::size_t>(inst.size()));
        std::iota(result.old_to_new.begin(), result.old_to_new.end(), 0);
        result.changed = false;
        return result;
    }
    const int n = inst.size();
    const int s = inst.part1_size;
    // old V1 keeps its indices, two fresh isolated vertices take s and s+1,
    // old V2 shifts up by two
    result.old_to_new.resize(static_cast<std::size_t>(n));
    for (VertexId v = 0; v < n; ++v)
        result.old_to_new[static_cast<std::size_t>(v)] = v < s ? v : v + 2;

    Graph g(n + 2);
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v : inst.graph.neighbors(u))
            if (u < v)
                g.add_edge(result.old_to_new[static_cast<std::size_t>(u)],
                           result.old_to_new[static_cast<std::size_t>(v)]);
    g.seal();

    std::vector<std::string> names(static_cast<std::size_t>(n + 2));
    for (VertexId v = 0; v < n; ++v)
        names[static_cast<std::size_t>(result.old_to_new[static_cast<std::size_t>(v)])] =
            inst.names[static_cast<std::size_t>(v)];
    for (int f = 0; f < 2; ++f) {
        std::string fresh = "iso" + std::to_string(f + 1);
        while (std::find(inst.names.begin(), inst.names.end(), fresh) != inst.names.end())
            fresh += "_";
        names[static_cast<std::size_t>(s + f)] = fresh;
    }

    result.instance = make_bipartite_instance(std::move(g), s + 2, inst.budget + 2, std::move(names));
    result.changed = true;
    return result;
}

BipartiteInstance normalize(const BipartiteInstance& inst) {
    return normalize_with_map(inst).instance;
}

namespace {

struct DomsetSearch {
    int n = 0;
    std::uint64_t full = 0;
    std::vector<std::uint64_t> closed;       // closed neighborhood masks
    std::vector<std::uint64_t> suffix_union;  // union of closed[v..n)
    int max_closed = 1;

    explicit DomsetSearch(const Graph& g) : n(g.vertex_count()) {
        full = n == 64 ? ~0ull : (1ull << n) - 1;
        closed.resize(static_cast<std::size_t>(n));
        for (VertexId v = 0; v < n; ++v) {
            std::uint64_t m = 1ull << v;
            for (VertexId w : g.neighbors(v)) m |= 1ull << w;
            closed[static_cast<std::size_t>(v)] = m;
            max_closed = std::max(max_closed, std::popcount(m));
        }
        suffix_union.assign(static_cast<std::size_t>(n) + 1, 0);
        for (int v = n - 1; v >= 0; --v)
            suffix_union[static_cast<std::size_t>(v)] =
                suffix_union[static_cast<std::size_t>(v) + 1] | closed[static_cast<std::size_t>(v)];
    }

    int greedy_upper_bound(std::uint64_t covered, int count) const {
        while (covered != full) {
            int best_gain = -1;
            VertexId best = -1;
            for (VertexId v = 0; v < n; ++v) {
                int gain = std::popcount(closed[static_cast<std::size_t>(v)] & ~covered);
                if (gain > best_gain) {
                    best_gain = gain;
                    best = v;
                }
            }
            covered |= closed[static_cast<std::size_t>(best)];
            ++count;
        }
        return count;
    }

    // choose/skip over a static order: vertices by descending closed-
    // neighborhood size, ties by ascending id
    void branch(const std::vector<VertexId>& order, std::size_t idx, std::uint64_t covered,
                int count, int& best) const {
        if (covered == full) {
            best = std::min(best, count);
            return;
        }
        if (idx == order.size()) return;
        std::uint64_t uncovered = full & ~covered;
        int lower = (std::popcount(uncovered) + max_closed - 1) / max_closed;
        if (count + lower >= best) return;
        // remaining vertices in the order must be able to finish the cover
        std::uint64_t rest = 0;
        for (std::size_t k = idx; k < order.size(); ++k)
            rest |= closed[static_cast<std::size_t>(order[k])];
        if ((uncovered & ~rest) != 0) return;
        VertexId v = order[idx];
        branch(order, idx + 1, covered | closed[static_cast<std::size_t>(v)], count + 1, best);
        branch(order, idx + 1, covered, count, best);
    }

    // first dominating set of size <= k in subset-lex order; since k is the
    // optimum this is the lexicographically smallest minimum witness
    bool lex_witness(VertexId from, std::uint64_t covered, int remaining,
                     std::vector<VertexId>& chosen) const {
        if (covered == full) return true;
        if (remaining == 0) return false;
        std::uint64_t uncovered = full & ~covered;
        for (VertexId v = from; v < n; ++v) {
            if ((std::popcount(uncovered & ~closed[static_cast<std::size_t>(v)]) + max_closed - 1) /
                        max_closed >
                remaining - 1)
                continue;
            if ((uncovered & ~suffix_union[static_cast<std::size_t>(v)]) != 0) return false;
            chosen.push_back(v);
            if (lex_witness(v + 1, covered | closed[static_cast<std::size_t>(v)], remaining - 1,
                            chosen))
                return true;
            chosen.pop_back();
        }
        return false;
    }
};

}  // namespace

DomsetResult exact_min_dominating_set(const BipartiteInstance& inst, int cap) {
    validate_instance(inst);
    const int n = inst.size();
    if (cap < 1 || cap > 63) throw std::invalid_argument("exact_min_dominating_set: cap out of range");
    if (n > cap) throw std::invalid_argument("exact_min_dominating_set: instance exceeds cap");
    if (n == 0) return {0, {}};

    DomsetSearch search(inst.graph);

    // isolated vertices are members of every dominating set
    std::uint64_t forced_cover = 0;
    int forced_count = 0;
    std::vector<VertexId> order;
    for (VertexId v = 0; v < n; ++v) {
        if (inst.graph.degree(v) == 0) {
            forced_cover |= search.closed[static_cast<std::size_t>(v)];
            ++forced_count;
        } else {
            order.push_back(v);
        }
    }
    std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
        int ca = std::popcount(search.closed[static_cast<std::size_t>(a)]);
        int cb = std::popcount(search.closed[static_cast<std::size_t>(b)]);
        if (ca != cb) return ca > cb;
        return a < b;
    });

    int best = search.greedy_upper_bound(forced_cover, forced_count);
    search.branch(order, 0, forced_cover, forced_count, best);

    DomsetResult result;
    result.size = best;
    if (!search.lex_witness(0, 0, best, result.witness))
        throw std::logic_error("exact_min_dominating_set: witness search failed");
    return result;
}

BipartiteInstance read_bds_json(std::istream& in) {
    nlohmann::json j = nlohmann::json::parse(in);
    if (!j.contains("v1") || !j.contains("v2") || !j.contains("edges") || !j.contains("h"))
        throw std::runtime_error("bds json: need keys v1, v2, edges, h");
    std::vector<std::string> names;
    for (const auto& e : j["v1"]) names.push_back(e.get<std::string>());
    const int s = static_cast<int>(names.size());
    for (const auto& e : j["v2"]) names.push_back(e.get<std::string>());
    const int n = static_cast<int>(names.size());

    std::unordered_map<std::string, VertexId> index;
    for (VertexId v = 0; v < n; ++v)
        if (!index.emplace(names[static_cast<std::size_t>(v)], v).second)
            throw std::runtime_error("bds json: duplicate name " + names[static_cast<std::size_t>(v)]);

    Graph g(n);
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2) throw std::runtime_error("bds json: bad edge entry");
        auto a = index.find(e[0].get<std::string>());
        auto b = index.find(e[1].get<std::string>());
        if (a == index.end() || b == index.end())
            throw std::runtime_error("bds json: edge references unknown name");
        g.add_edge(a->second, b->second);
    }
    g.seal();
    return make_bipartite_instance(std::move(g), s, j["h"].get<int>(), std::move(names));
}

BipartiteInstance read_bds_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open instance file: " + path);
    return read_bds_json(in);
}

void write_bds_json(std::ostream& out, const BipartiteInstance& inst) {
    nlohmann::ordered_json j;
    j["v1"] = nlohmann::json::array();
    j["v2"] = nlohmann::json::array();
    for (VertexId v = 0; v < inst.size(); ++v)
        j[inst.in_part1(v) ? "v1" : "v2"].push_back(inst.names[static_cast<std::size_t>(v)]);
    j["edges"] = nlohmann::json::array();
    for (VertexId u = 0; u < inst.size(); ++u)
        for (VertexId v : inst.graph.neighbors(u))
            if (u < v)
                j["edges"].push_back({inst.names[static_cast<std::size_t>(u)],
                                      inst.names[static_cast<std::size_t>(v)]});
    j["h"] = inst.budget;
    out << j.dump(2) << '\n';
}

void write_bds_file(const std::string& path, const BipartiteInstance& inst) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    write_bds_json(out, inst);
}

}  // namespace mdim
