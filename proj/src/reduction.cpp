#include "mdim/reduction.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <stdexcept>

#include "json.hpp"
#include "mdim/resolving.hpp"

namespace mdim {

std::string to_string(Corner c) {
    switch (c) {
        case Corner::TL: return "TL";
        case Corner::TR: return "TR";
        case Corner::BL: return "BL";
        case Corner::BR: return "BR";
    }
    return "?";
}

std::string to_string(Part p) {
    switch (p) {
        case Part::BL: return "BL";
        case Part::TL: return "TL";
        case Part::TR: return "TR";
        case Part::BR: return "BR";
        case Part::M: return "M";
    }
    return "?";
}

std::string to_string(const VertexLabel& label) {
    using Kind = VertexLabel::Kind;
    auto num = [](auto v) { return std::to_string(v); };
    switch (label.kind) {
        case Kind::TopHub: return "TopHub(" + num(label.i) + ")";
        case Kind::BottomHub: return "BottomHub(" + num(label.i) + ")";
        case Kind::TopSeg: return "TopSeg(" + num(label.i) + "," + num(label.t) + ")";
        case Kind::BottomSeg: return "BottomSeg(" + num(label.i) + "," + num(label.t) + ")";
        case Kind::P3Middle: return "P3Middle(" + to_string(label.corner) + ")";
        case Kind::P3Leaf:
            return "P3Leaf(" + to_string(label.corner) + "," + num(label.which) + ")";
        case Kind::AnchorTop: return "AnchorTop(" + num(label.i) + ")";
        case Kind::AnchorBottom: return "AnchorBottom(" + num(label.i) + ")";
        case Kind::AnchorLinkTop:
            return "AnchorLinkTop(" + num(label.i) + "," + num(label.t) + ")";
        case Kind::AnchorLinkBottom:
            return "AnchorLinkBottom(" + num(label.i) + "," + num(label.t) + ")";
        case Kind::Left: return "Left(" + num(label.i) + "," + num(label.j) + ")";
        case Kind::Right: return "Right(" + num(label.i) + "," + num(label.j) + ")";
        case Kind::EdgeW:
            return "EdgeW(" + num(label.i) + "," + num(label.j) + "," + num(label.which) + ")";
        case Kind::EdgePart:
            return "EdgePart(" + num(label.i) + "," + num(label.j) + "," + to_string(label.part) +
                   "," + num(label.t) + ")";
    }
    return "?";
}

std::int64_t min_test_y(int n) { return 8ll * n + 10; }

// 10n^2 exceeds the 8n+8 bound for every n >= 2; n = 1 needs the floor
std::int64_t default_y(int n) {
    return std::max<std::int64_t>(10ll * n * n, min_test_y(n));
}

Census expected_census(int n, std::int64_t y, const std::vector<std::pair<int, int>>& edges) {
    Census c;
    const std::int64_t n64 = n;
    c.vertices = 2 * n64                     // hubs
                 + 2 * (n64 - 1) * (y - 1)   // line segments
                 + 12                        // four P3s
                 + n64 * (2 * n64 + 2)       // gadget cycles
                 + 2 * n64 * (y - 1);        // anchor links
    c.edges = 2 * (n64 - 1) * y + 12 + n64 * (2 * n64 + 2) + 2 * n64 * y;
    for (const auto& [i, j] : edges) {
        const std::int64_t gap = j - i;
        c.vertices += gap * y + 7 * y / 2 - 3;
        c.edges += gap * y + 7 * y / 2;
    }
    return c;
}

VertexId ReductionInstance::vertex(const VertexLabel& label) const {
    auto it = index.find(label);
    if (it == index.end())
        throw std::out_of_range("ReductionInstance: no vertex labelled " + to_string(label));
    return it->second;
}

std::array<VertexId, 4> ReductionInstance::forced_leaves() const {
    return {vertex(VertexLabel::p3_leaf(Corner::TL, 1)), vertex(VertexLabel::p3_leaf(Corner::TR, 1)),
            vertex(VertexLabel::p3_leaf(Corner::BL, 1)),
            vertex(VertexLabel::p3_leaf(Corner::BR, 1))};
}

const EdgeGadget* ReductionInstance::gadget(int i, int j) const {
    for (const auto& g : gadgets)
        if (g.i == i && g.j == j) return &g;
    return nullptr;
}

namespace {

struct Builder {
    ReductionInstance R;
    Graph g;

    VertexId fresh(const VertexLabel& label) {
        VertexId v = g.add_vertex();
        place(v, label);
        return v;
    }

    void place(VertexId v, const VertexLabel& label) {
        if (static_cast<std::size_t>(v) != R.labels.size())
            throw std::logic_error("build_reduction: label out of step with vertex ids");
        R.labels.push_back(label);
        if (!R.index.emplace(label, v).second)
            throw std::logic_error("build_reduction: duplicate label " + to_string(label));
    }

    void label_path(const std::vector<VertexId>& internals,
                    const std::function<VertexLabel(std::int64_t)>& make) {
        for (std::size_t t = 0; t < internals.size(); ++t)
            place(internals[t], make(static_cast<std::int64_t>(t) + 1));
    }
};

}  // namespace

ReductionInstance build_reduction(const BipartiteInstance& normalized,
                                  std::optional<std::int64_t> y_opt) {
    if (!normalized.graph.is_sealed())
        throw std::invalid_argument("build_reduction: source graph must be sealed");
    if (normalized.size() < 1) throw std::invalid_argument("build_reduction: empty instance");
    if (!has_normalized_gaps(normalized))
        throw std::invalid_argument("build_reduction: instance not normalized (edge gap < 3)");

    const int n = normalized.size();
    const std::int64_t y = y_opt.value_or(default_y(n));
    if (y % 2 != 0) throw std::invalid_argument("build_reduction: y must be even");
    if (y <= 8ll * n + 8)
        throw std::invalid_argument("build_reduction: y must exceed 8n+8 (so y/4 > 2n+2)");

    Builder b;
    b.R.params = {n, y, normalized.budget, normalized.budget + 4};
    b.R.source = normalized;

    // skeletal hub lines
    std::vector<VertexId> top(static_cast<std::size_t>(n) + 1);
    std::vector<VertexId> bot(static_cast<std::size_t>(n) + 1);
    for (int i = 1; i <= n; ++i) top[static_cast<std::size_t>(i)] = b.fresh(VertexLabel::top_hub(i));
    for (int i = 1; i <= n; ++i)
        bot[static_cast<std::size_t>(i)] = b.fresh(VertexLabel::bottom_hub(i));
    for (int i = 1; i < n; ++i) {
        auto internals = b.g.add_path(top[static_cast<std::size_t>(i)],
                                      top[static_cast<std::size_t>(i) + 1], y);
        b.label_path(internals, [i](std::int64_t t) { return VertexLabel::top_seg(i, t); });
    }
    for (int i = 1; i < n; ++i) {
        auto internals = b.g.add_path(bot[static_cast<std::size_t>(i)],
                                      bot[static_cast<std::size_t>(i) + 1], y);
        b.label_path(internals, [i](std::int64_t t) { return VertexLabel::bottom_seg(i, t); });
    }

    // one P3 per endpoint, middle vertex adjacent to the endpoint hub;
    // leaf #1 is the designated forced landmark of the corner
    const std::pair<Corner, VertexId> corners[] = {{Corner::TL, top[1]},
                                                   {Corner::TR, top[static_cast<std::size_t>(n)]},
                                                   {Corner::BL, bot[1]},
                                                   {Corner::BR, bot[static_cast<std::size_t>(n)]}};
    for (const auto& [corner, hub] : corners) {
        VertexId mid = b.fresh(VertexLabel::p3_middle(corner));
        VertexId leaf1 = b.fresh(VertexLabel::p3_leaf(corner, 1));
        VertexId leaf2 = b.fresh(VertexLabel::p3_leaf(corner, 2));
        b.g.add_edge(mid, hub);
        b.g.add_edge(leaf1, mid);
        b.g.add_edge(leaf2, mid);
    }

    // vertex gadgets: (2n+2)-cycle with anchors at cycle distance n+1,
    // sides l^i_1..l^i_n (index 1 at the top anchor) and r^i_1..r^i_n
    for (int i = 1; i <= n; ++i) {
        VertexId at = b.fresh(VertexLabel::anchor_top(i));
        VertexId ab = b.fresh(VertexLabel::anchor_bottom(i));
        std::vector<VertexId> left(static_cast<std::size_t>(n) + 1);
        std::vector<VertexId> right(static_cast<std::size_t>(n) + 1);
        for (int j = 1; j <= n; ++j) {
            left[static_cast<std::size_t>(j)] = b.fresh(VertexLabel::left(i, j));
            right[static_cast<std::size_t>(j)] = b.fresh(VertexLabel::right(i, j));
        }
        b.g.add_edge(at, left[1]);
        b.g.add_edge(at, right[1]);
        for (int j = 1; j < n; ++j) {
            b.g.add_edge(left[static_cast<std::size_t>(j)], left[static_cast<std::size_t>(j) + 1]);
            b.g.add_edge(right[static_cast<std::size_t>(j)], right[static_cast<std::size_t>(j) + 1]);
        }
        b.g.add_edge(left[static_cast<std::size_t>(n)], ab);
        b.g.add_edge(right[static_cast<std::size_t>(n)], ab);

        auto link_top = b.g.add_path(top[static_cast<std::size_t>(i)], at, y);
        b.label_path(link_top, [i](std::int64_t t) { return VertexLabel::anchor_link_top(i, t); });
        auto link_bot = b.g.add_path(bot[static_cast<std::size_t>(i)], ab, y);
        b.label_path(link_bot,
                     [i](std::int64_t t) { return VertexLabel::anchor_link_bottom(i, t); });
    }

    // edge gadgets, one per source edge, in ascending (i, j) order
    std::vector<std::pair<int, int>> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v : normalized.graph.neighbors(u))
            if (u < v) edges.emplace_back(u + 1, v + 1);
    std::sort(edges.begin(), edges.end());

    for (const auto& [i, j] : edges) {
        EdgeGadget gadget;
        gadget.i = i;
        gadget.j = j;
        gadget.entrance_left = b.R.vertex(VertexLabel::right(i, j));
        gadget.entrance_right = b.R.vertex(VertexLabel::right(j, i));

        const std::int64_t length = static_cast<std::int64_t>(j - i) * y + 3 * y / 2;
        auto internals = b.g.add_path(gadget.entrance_left, gadget.entrance_right, length);
        for (std::size_t idx = 0; idx < internals.size(); ++idx) {
            const std::int64_t pos = static_cast<std::int64_t>(idx) + 1;  // from r^i_j
            VertexLabel label;
            if (pos < y)
                label = VertexLabel::edge_part(i, j, Part::BL, pos);
            else if (pos == y)
                label = VertexLabel::edge_w(i, j, 1);
            else if (pos < length - y)
                label = VertexLabel::edge_part(i, j, Part::M, pos - y);
            else if (pos == length - y)
                label = VertexLabel::edge_w(i, j, 2);
            else
                label = VertexLabel::edge_part(i, j, Part::BR, length - pos);
            b.place(internals[idx], label);
        }
        gadget.w1 = internals[static_cast<std::size_t>(y) - 1];
        gadget.w2 = internals[static_cast<std::size_t>(length - y) - 1];

        // attachments alias existing top-line vertices: distance j from u^t_i,
        // distance i from u^t_j
        gadget.attach1 = b.R.vertex(VertexLabel::top_seg(i, j));
        gadget.attach2 = b.R.vertex(VertexLabel::top_seg(j - 1, y - i));
        if (gadget.attach1 == gadget.attach2)
            throw std::logic_error("build_reduction: attachment offsets collide");
        for (VertexId a : {gadget.attach1, gadget.attach2})
            if (b.R.attachment_of.count(a))
                throw std::logic_error("build_reduction: attachment vertex reused");

        auto tether1 = b.g.add_path(gadget.attach1, gadget.w1, y);
        b.label_path(tether1,
                     [&](std::int64_t t) { return VertexLabel::edge_part(i, j, Part::TL, t); });
        auto tether2 = b.g.add_path(gadget.attach2, gadget.w2, y);
        b.label_path(tether2,
                     [&](std::int64_t t) { return VertexLabel::edge_part(i, j, Part::TR, t); });

        const int gadget_index = static_cast<int>(b.R.gadgets.size());
        b.R.attachment_of.emplace(gadget.attach1, std::pair<int, int>{gadget_index, 1});
        b.R.attachment_of.emplace(gadget.attach2, std::pair<int, int>{gadget_index, 2});
        b.R.gadgets.push_back(gadget);
    }

    b.g.seal();

    // structural invariants: census, degree bound, connectivity, bijection
    const Census census = expected_census(n, y, edges);
    if (b.g.vertex_count() != census.vertices || b.g.edge_count() != census.edges)
        throw std::logic_error("build_reduction: census mismatch");
    if (b.R.labels.size() != static_cast<std::size_t>(b.g.vertex_count()) ||
        b.R.index.size() != b.R.labels.size())
        throw std::logic_error("build_reduction: label bijection broken");
    const auto profile = b.g.degree_profile();
    if (profile.rbegin()->first != 3)
        throw std::logic_error("build_reduction: maximum degree is not 3");
    DistanceRow from_zero = b.g.bfs_distances(0);
    for (VertexId v = 0; v < b.g.vertex_count(); ++v)
        if (!from_zero.reachable(v)) throw std::logic_error("build_reduction: G' not connected");

    b.R.gprime = std::move(b.g);
    return std::move(b.R);
}

namespace {

// hub coordinates: (is_top, index) when the label is a hub
std::optional<std::pair<bool, int>> hub_of(const VertexLabel& label) {
    if (label.kind == VertexLabel::Kind::TopHub) return std::pair{true, label.i};
    if (label.kind == VertexLabel::Kind::BottomHub) return std::pair{false, label.i};
    return std::nullopt;
}

// formula table for (non-hub label, hub label) pairs
std::optional<std::int64_t> closed_form_to_hub(const ReductionInstance& R, const VertexLabel& a,
                                               bool hub_top, int hub_index) {
    const int n = R.params.n;
    const std::int64_t y = R.params.y;

    if (a.kind == VertexLabel::Kind::Right) {
        const std::int64_t i = a.i, j = a.j;
        if (hub_top && hub_index == 1) return i * y + j;
        if (hub_top && hub_index == n) return (n - i + 1) * y + j;
        if (!hub_top && hub_index == 1) return i * y + n - j + 1;
        if (!hub_top && hub_index == n) return (n - i + 1) * y + n - j + 1;
        return std::nullopt;
    }

    if (a.kind == VertexLabel::Kind::TopSeg) {
        auto vid = R.index.find(a);
        if (vid == R.index.end()) return std::nullopt;
        auto role = R.attachment_of.find(vid->second);
        if (role == R.attachment_of.end()) return std::nullopt;
        const EdgeGadget& g = R.gadgets[static_cast<std::size_t>(role->second.first)];
        const std::int64_t i = g.i, j = g.j;
        if (role->second.second == 1) {
            if (hub_top && hub_index == 1) return (i - 1) * y + j;
            if (hub_top && hub_index == n) return (n - i) * y - j;
            if (!hub_top && hub_index == n) return (n - i + 2) * y - j + n + 1;
        } else {
            if (hub_top && hub_index == 1) return (j - 1) * y - i;
            if (hub_top && hub_index == n) return (n - j) * y + i;
            if (!hub_top && hub_index == n) return (n - j + 2) * y + i + n + 1;
        }
        return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace

std::optional<std::int64_t> closed_form_distance(const ReductionInstance& R, const VertexLabel& a,
                                                 const VertexLabel& b) {
    if (a == b) return 0;
    const std::int64_t y = R.params.y;
    const int n = R.params.n;

    auto ha = hub_of(a), hb = hub_of(b);
    if (ha && hb) {
        const auto [a_top, ai] = *ha;
        const auto [b_top, bi] = *hb;
        const std::int64_t gap = ai > bi ? ai - bi : bi - ai;
        if (a_top == b_top) return gap * y;
        return (gap + 2) * y + n + 1;
    }
    if (hb) return closed_form_to_hub(R, a, hb->first, hb->second);
    if (ha) return closed_form_to_hub(R, b, ha->first, ha->second);
    return std::nullopt;
}

std::vector<VertexId> map_domset_to_basis(const ReductionInstance& R,
                                          const std::vector<VertexId>& domset) {
    if (!is_dominating_set(R.source, domset))
        throw std::invalid_argument("map_domset_to_basis: not a dominating set of the source");
    auto leaves = R.forced_leaves();
    std::vector<VertexId> basis(leaves.begin(), leaves.end());
    for (VertexId v : domset) basis.push_back(R.vertex(VertexLabel::right(v + 1, 1)));
    std::sort(basis.begin(), basis.end());
    basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
    return basis;
}

std::vector<VertexId> map_basis_to_domset(const ReductionInstance& R,
                                          const std::vector<VertexId>& landmarks) {
    if (!is_resolving_set(R.gprime, landmarks))
        throw std::invalid_argument("map_basis_to_domset: landmarks do not resolve G'");
    using Kind = VertexLabel::Kind;
    std::vector<VertexId> domset;
    for (VertexId v : landmarks) {
        const VertexLabel& label = R.label_of(v);
        switch (label.kind) {
            case Kind::Left:
            case Kind::Right:
            case Kind::AnchorTop:
            case Kind::AnchorBottom:
            case Kind::AnchorLinkTop:
            case Kind::AnchorLinkBottom:
                domset.push_back(label.i - 1);
                break;
            case Kind::EdgeW:
                domset.push_back(label.which == 1 ? label.i - 1 : label.j - 1);
                break;
            case Kind::EdgePart:
                domset.push_back(label.part == Part::TL || label.part == Part::BL ? label.i - 1
                                                                                  : label.j - 1);
                break;
            default:
                break;  // skeletal landmarks contribute nothing
        }
    }
    std::sort(domset.begin(), domset.end());
    domset.erase(std::unique(domset.begin(), domset.end()), domset.end());
    return domset;
}

void write_reduction_graph(std::ostream& out, const ReductionInstance& R) {
    write_graph_text(out, R.gprime);
}

void write_reduction_labels(std::ostream& out, const ReductionInstance& R) {
    nlohmann::ordered_json j;
    j["n"] = R.params.n;
    j["y"] = R.params.y;
    j["k"] = R.params.k;
    nlohmann::ordered_json labels = nlohmann::ordered_json::object();
    for (VertexId v = 0; v < R.gprime.vertex_count(); ++v)
        labels[std::to_string(v)] = to_string(R.label_of(v));
    j["labels"] = std::move(labels);
    out << j.dump() << '\n';
}

}  // namespace mdim
