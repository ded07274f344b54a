#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "memnet/timeutil.hpp"

namespace memnet {

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

/// Undirected edge, endpoints stored canonically with a < b.
struct Edge {
    NodeId a = 0;
    NodeId b = 0;
    double weight = 0.0;
};

/// Simple undirected graph whose nodes carry fixed-length hourly activity
/// series and whose edges carry nonnegative weights. Nodes are dense integer
/// ids 0..N-1 with unique external labels.
///
/// Immutable after construction except for the weight vector, which learning
/// and pruning phases replace wholesale. Concurrent reads are safe.
class TemporalGraph {
public:
    TemporalGraph() = default;

    /// Validates and indexes the inputs: labels unique, every series of equal
    /// length, edges self-loop-free, in range and free of duplicates.
    TemporalGraph(std::vector<std::string> labels,
                  std::vector<std::vector<std::uint32_t>> series,
                  std::vector<Edge> edges,
                  std::int64_t start_epoch_hour = 0);

    std::size_t node_count() const { return labels_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    std::int64_t horizon() const { return horizon_; }
    std::int64_t start_epoch_hour() const { return start_epoch_hour_; }
    bool empty() const { return labels_.empty(); }

    const std::string& label(NodeId n) const;
    std::optional<NodeId> find_label(std::string_view label) const;
    const std::vector<std::string>& labels() const { return labels_; }

    const std::vector<std::uint32_t>& series(NodeId n) const;

    /// Adjacent nodes with current weights, ascending by neighbor id.
    /// Throws NotFoundError for an unknown node.
    std::vector<std::pair<NodeId, double>> neighbors(NodeId n) const;

    struct AdjEntry {
        NodeId neighbor;
        std::uint32_t edge; // index into edges()
    };
    /// Raw adjacency row (ascending neighbor id); no bounds check beyond N.
    std::span<const AdjEntry> adjacency(NodeId n) const;

    const std::vector<Edge>& edges() const { return edges_; }
    double total_weight() const;
    double weighted_degree(NodeId n) const;
    std::size_t degree(NodeId n) const { return adjacency(n).size(); }

    /// Learning/pruning phases only: replaces all edge weights at once.
    void set_weights(const std::vector<double>& weights);
    void zero_weights();
    /// Copy with every edge weight set to 1 (for unweighted analyses).
    TemporalGraph with_unit_weights() const;

    /// Same nodes and edges; series truncated to the window; weights reset
    /// to zero (learning is per-window). Throws RangeError on a bad window.
    TemporalGraph slice(const TimeWindow& window) const;

    struct PruneResult {
        TemporalGraph graph;
        std::vector<NodeId> old_to_new; // kNoNode for dropped nodes
        std::vector<NodeId> new_to_old;
    };

    /// Drops zero-weight edges, then edgeless nodes, then connected
    /// components smaller than min_component_size; reindexes densely.
    PruneResult prune(std::size_t min_component_size = 3) const;

    /// Induced subgraph on the nodes where keep[n] is true; surviving nodes
    /// are reindexed densely in ascending old-id order, weights preserved.
    PruneResult induced_subgraph(const std::vector<bool>& keep) const;

private:
    void build_index();
    void check_node(NodeId n) const;

    std::vector<std::string> labels_;
    std::vector<std::vector<std::uint32_t>> series_;
    std::vector<Edge> edges_;
    std::int64_t horizon_ = 0;
    std::int64_t start_epoch_hour_ = 0;

    std::vector<std::size_t> adj_offsets_;
    std::vector<AdjEntry> adj_;
    std::unordered_map<std::string, NodeId> label_index_;
};

} // namespace memnet
