#ifndef MDIM_REDUCTION_HPP
#define MDIM_REDUCTION_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "mdim/bds.hpp"
#include "mdim/graph.hpp"

namespace mdim {

/// The four P3 attachment corners of the skeletal structure.
enum class Corner { TL, TR, BL, BR };

/// The five parts of an edge-gadget: BL is the y-path from the left entrance
/// r^i_j up to w1, TL/TR the tether y-paths below the top-line attachments,
/// BR the y-path from the right entrance r^j_i up to w2, and M the stretch
/// between w1 and w2 (w1 and w2 themselves carry their own label).
enum class Part { BL, TL, TR, BR, M };

/// Structured identity of a vertex of the constructed graph G'.
///
/// All indices are 1-based to match the gadget arithmetic. Path offsets t
/// count from the part's defining endpoint: TopSeg(i,t) / BottomSeg(i,t) from
/// hub i toward hub i+1; AnchorLink*(i,t) from the hub toward the anchor;
/// EdgePart BL from r^i_j, BR from r^j_i, TL/TR from the top-line attachment,
/// M from w1. The attachment vertices u^t_{i,j,1} and u^t_{i,j,2} are not
/// fresh; they alias TopSeg(i, j) and TopSeg(j-1, y-i).
struct VertexLabel {
    enum class Kind {
        TopHub,
        BottomHub,
        TopSeg,
        BottomSeg,
        P3Middle,
        P3Leaf,
        AnchorTop,
        AnchorBottom,
        AnchorLinkTop,
        AnchorLinkBottom,
        Left,
        Right,
        EdgeW,
        EdgePart,
    };

    Kind kind = Kind::TopHub;
    int i = 0;
    int j = 0;
    int which = 0;       // 1 or 2 for P3Leaf / EdgeW
    std::int64_t t = 0;  // path offset
    Corner corner = Corner::TL;
    Part part = Part::BL;

    static VertexLabel top_hub(int i) { return {Kind::TopHub, i}; }
    static VertexLabel bottom_hub(int i) { return {Kind::BottomHub, i}; }
    static VertexLabel top_seg(int i, std::int64_t t) { return {Kind::TopSeg, i, 0, 0, t}; }
    static VertexLabel bottom_seg(int i, std::int64_t t) { return {Kind::BottomSeg, i, 0, 0, t}; }
    static VertexLabel p3_middle(Corner c) { return {Kind::P3Middle, 0, 0, 0, 0, c}; }
    static VertexLabel p3_leaf(Corner c, int which) { return {Kind::P3Leaf, 0, 0, which, 0, c}; }
    static VertexLabel anchor_top(int i) { return {Kind::AnchorTop, i}; }
    static VertexLabel anchor_bottom(int i) { return {Kind::AnchorBottom, i}; }
    static VertexLabel anchor_link_top(int i, std::int64_t t) {
        return {Kind::AnchorLinkTop, i, 0, 0, t};
    }
    static VertexLabel anchor_link_bottom(int i, std::int64_t t) {
        return {Kind::AnchorLinkBottom, i, 0, 0, t};
    }
    static VertexLabel left(int i, int j) { return {Kind::Left, i, j}; }
    static VertexLabel right(int i, int j) { return {Kind::Right, i, j}; }
    static VertexLabel edge_w(int i, int j, int which) { return {Kind::EdgeW, i, j, which}; }
    static VertexLabel edge_part(int i, int j, Part p, std::int64_t t) {
        return {Kind::EdgePart, i, j, 0, t, {}, p};
    }

    std::tuple<int, int, int, int, std::int64_t, int, int> sort_key() const {
        return {static_cast<int>(kind), i, j, which, t, static_cast<int>(corner),
                static_cast<int>(part)};
    }
    friend bool operator==(const VertexLabel& a, const VertexLabel& b) {
        return a.sort_key() == b.sort_key();
    }
    friend bool operator<(const VertexLabel& a, const VertexLabel& b) {
        return a.sort_key() < b.sort_key();
    }
};

std::string to_string(Corner c);
std::string to_string(Part p);
std::string to_string(const VertexLabel& label);

struct ReductionParams {
    int n = 0;           // source vertices after normalization
    std::int64_t y = 0;  // even, y > 8n+8
    int h = 0;           // source budget
    int k = 0;           // h + 4
};

/// Default y from the construction; grows quadratically with n.
std::int64_t default_y(int n);
/// Smallest even y satisfying y > 8n+8; keeps test instances small.
std::int64_t min_test_y(int n);

struct EdgeGadget {
    int i = 0, j = 0;            // source edge {v_i, v_j}, i < j, j >= i+3
    VertexId entrance_left = 0;  // r^i_j
    VertexId entrance_right = 0; // r^j_i
    VertexId w1 = 0, w2 = 0;
    VertexId attach1 = 0;        // u^t_{i,j,1} = TopSeg(i, j)
    VertexId attach2 = 0;        // u^t_{i,j,2} = TopSeg(j-1, y-i)
};

/// The constructed Metric Dimension instance (G', k) together with the full
/// vertex labelling and the normalized source instance it was built from.
struct ReductionInstance {
    Graph gprime;
    ReductionParams params;
    BipartiteInstance source;
    std::vector<VertexLabel> labels;          // VertexId -> label
    std::map<VertexLabel, VertexId> index;    // label -> VertexId (bijection)
    std::vector<EdgeGadget> gadgets;          // sorted by (i, j)
    std::unordered_map<VertexId, std::pair<int, int>> attachment_of;  // vid -> (gadget idx, 1|2)

    VertexId vertex(const VertexLabel& label) const;
    const VertexLabel& label_of(VertexId v) const { return labels[static_cast<std::size_t>(v)]; }
    /// u^t_l, u^t_r, u^b_l, u^b_r (leaf #1 of each corner P3).
    std::array<VertexId, 4> forced_leaves() const;
    const EdgeGadget* gadget(int i, int j) const;  // nullptr when no edge {v_i, v_j}
};

/// Builds G' from a normalized instance per the gadget construction:
/// top/bottom hub lines joined by y-paths with P3 corners, one (2n+2)-cycle
/// vertex gadget per source vertex tethered to both lines, and one
/// (j-i+3/2)y edge-gadget path per source edge with two tethered waypoints.
/// y defaults to 10n^2; any even y with y > 8n+8 is accepted.
ReductionInstance build_reduction(const BipartiteInstance& normalized,
                                  std::optional<std::int64_t> y = std::nullopt);

/// Expected |V'| and |E'| for the given parameters, used as a construction
/// self-check and by the verification harness.
struct Census {
    std::int64_t vertices = 0;
    std::int64_t edges = 0;
};
Census expected_census(int n, std::int64_t y, const std::vector<std::pair<int, int>>& edges_1based);

/// Closed-form distance for the label pairs the formula table covers (hub-to-hub distances,
/// right-vertices and attachments to the four corner hubs); nullopt for label
/// pairs outside the covered table. Coincident labels give 0.
std::optional<std::int64_t> closed_form_distance(const ReductionInstance& R, const VertexLabel& a,
                                                 const VertexLabel& b);

/// D (0-based source vertices) -> {u^t_l, u^t_r, u^b_l, u^b_r} + {r^i_1 : v_i in D}.
/// Throws when D does not dominate the source instance.
std::vector<VertexId> map_domset_to_basis(const ReductionInstance& R,
                                          const std::vector<VertexId>& domset);

/// Resolving set of G' -> dominating set of the source: vertex-gadget
/// landmarks (cycle, anchors, anchor links) contribute v_i; edge-gadget
/// landmarks contribute v_i from the TL/BL parts and w1, v_j otherwise;
/// skeletal landmarks contribute nothing. Throws when L is not resolving.
std::vector<VertexId> map_basis_to_domset(const ReductionInstance& R,
                                          const std::vector<VertexId>& landmarks);

/// Edge list in the graph text format plus a JSON sidecar
/// {"n":..,"y":..,"k":..,"labels":{"0":"TopHub(1)",...}}.
void write_reduction_graph(std::ostream& out, const ReductionInstance& R);
void write_reduction_labels(std::ostream& out, const ReductionInstance& R);

}  // namespace mdim

#endif
