#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace etm {

// Dense internal node index. External identifiers are opaque strings,
// interned on first appearance; the mapping is stable within a run.
using NodeId = std::uint32_t;

// Undirected contact interval. Canonical orientation u < v.
struct TemporalEdge {
    NodeId u = 0;
    NodeId v = 0;
    std::int64_t t_start = 0;
    std::int64_t t_end = 0;

    friend bool operator==(const TemporalEdge&, const TemporalEdge&) = default;
};

// Fixed node set plus a multiset of temporal edges. Immutable once built
// (loaders and generators construct it, everything else reads).
class TemporalGraph {
public:
    // Interns a label; returns the existing id if already present.
    NodeId add_node(std::string_view label);

    // Validates t_start <= t_end and u != v, canonicalizes orientation.
    void add_edge(NodeId u, NodeId v, std::int64_t t_start, std::int64_t t_end);
    void add_edge(std::string_view u, std::string_view v, std::int64_t t_start, std::int64_t t_end);

    std::size_t node_count() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(NodeId v) const { return labels_.at(v); }
    std::optional<NodeId> find_node(std::string_view label) const;

    const std::vector<TemporalEdge>& edges() const { return edges_; }
    bool empty() const { return edges_.empty(); }

    // Smallest t_start / largest t_end over edges. Undefined (throws) on a
    // graph with no edges.
    std::int64_t t_min() const;
    std::int64_t t_max() const;

private:
    struct LabelHash {
        using is_transparent = void;
        std::size_t operator()(std::string_view s) const { return std::hash<std::string_view>{}(s); }
    };
    std::vector<std::string> labels_;
    std::unordered_map<std::string, NodeId, LabelHash, std::equal_to<>> ids_;
    std::vector<TemporalEdge> edges_;
    std::int64_t t_min_ = 0;
    std::int64_t t_max_ = 0;
};

// One static window of width delta_t. Adjacency is CSR over the graph's
// dense node ids: symmetric, no self-loops, neighbor lists sorted.
struct Snapshot {
    std::size_t index = 0;   // window ordinal within the sequence
    std::int64_t t = 0;      // window start
    std::vector<std::uint32_t> offsets;  // node_count + 1
    std::vector<NodeId> neighbors;

    std::size_t node_count() const { return offsets.empty() ? 0 : offsets.size() - 1; }
    std::size_t degree(NodeId v) const { return offsets[v + 1] - offsets[v]; }
    std::span<const NodeId> neighbors_of(NodeId v) const {
        return {neighbors.data() + offsets[v], neighbors.data() + offsets[v + 1]};
    }
    // Unordered pairs (u, v) with u < v, for iteration over window edges.
    std::vector<std::pair<NodeId, NodeId>> edge_pairs() const;
};

struct SnapshotSequence {
    std::int64_t delta_t = 0;
    std::size_t node_count = 0;
    std::vector<Snapshot> snapshots;

    std::size_t size() const { return snapshots.size(); }
};

// Simple undirected graph, optionally weighted (weights parallel to edges).
struct StaticGraph {
    std::vector<std::string> labels;                   // size == node count
    std::vector<std::pair<NodeId, NodeId>> edges;      // u < v, sorted, unique
    std::vector<std::uint64_t> weights;                // empty or parallel to edges

    std::size_t node_count() const { return labels.size(); }
    bool weighted() const { return !weights.empty(); }
};

// Slices g into m = ceil((t_max - t_min) / delta_t) windows anchored at
// t_min; the final partial window is kept. An edge belongs to window
// [t, t + delta_t) iff it overlaps it: t_start < t + delta_t and t_end > t.
// strict_windows switches to endpoint membership instead
// (t_start or t_end inside the window).
SnapshotSequence extract_snapshots(const TemporalGraph& g, std::int64_t delta_t,
                                   bool strict_windows = false);

// Unweighted aggregate: static edge iff any temporal edge exists for the pair.
StaticGraph aggregate(const TemporalGraph& g);

// Weighted aggregate: weight(u,v) = number of windows of
// extract_snapshots(g, delta_t) containing (u,v). Pairs with weight 0 are absent.
StaticGraph weighted_aggregate(const TemporalGraph& g, std::int64_t delta_t);

// Neighbors of v in one snapshot (edges among neighbors are not represented).
std::span<const NodeId> egocentric_neighborhood(const Snapshot& s, NodeId v);

} // namespace etm
