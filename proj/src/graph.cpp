#include "memnet/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "memnet/errors.hpp"

namespace memnet {

TemporalGraph::TemporalGraph(std::vector<std::string> labels,
                             std::vector<std::vector<std::uint32_t>> series,
                             std::vector<Edge> edges,
                             std::int64_t start_epoch_hour)
    : labels_(std::move(labels)),
      series_(std::move(series)),
      edges_(std::move(edges)),
      start_epoch_hour_(start_epoch_hour) {
    const std::size_t n = labels_.size();
    if (series_.size() != n) {
        throw ShapeError("label count and series count differ");
    }
    horizon_ = series_.empty() ? 0 : static_cast<std::int64_t>(series_.front().size());
    for (const auto& s : series_) {
        if (static_cast<std::int64_t>(s.size()) != horizon_) {
            throw ShapeError("all series must share the graph horizon");
        }
    }
    for (auto& e : edges_) {
        if (e.a == e.b) throw FormatError("self-loop on node " + std::to_string(e.a));
        if (e.a >= n || e.b >= n) throw RangeError("edge endpoint out of range");
        if (e.a > e.b) std::swap(e.a, e.b);
        if (e.weight < 0.0) throw RangeError("negative edge weight");
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge& x, const Edge& y) {
        return x.a != y.a ? x.a < y.a : x.b < y.b;
    });
    for (std::size_t i = 1; i < edges_.size(); ++i) {
        if (edges_[i - 1].a == edges_[i].a && edges_[i - 1].b == edges_[i].b) {
            throw FormatError("duplicate edge " + std::to_string(edges_[i].a) + "-" +
                              std::to_string(edges_[i].b));
        }
    }
    build_index();
}

void TemporalGraph::build_index() {
    const std::size_t n = labels_.size();
    label_index_.clear();
    label_index_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto [it, fresh] = label_index_.emplace(labels_[i], static_cast<NodeId>(i));
        if (!fresh) throw FormatError("duplicate node label '" + labels_[i] + "'");
    }
    adj_offsets_.assign(n + 1, 0);
    for (const auto& e : edges_) {
        ++adj_offsets_[e.a + 1];
        ++adj_offsets_[e.b + 1];
    }
    std::partial_sum(adj_offsets_.begin(), adj_offsets_.end(), adj_offsets_.begin());
    adj_.resize(edges_.size() * 2);
    std::vector<std::size_t> cursor(adj_offsets_.begin(), adj_offsets_.end() - 1);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const auto& e = edges_[i];
        adj_[cursor[e.a]++] = {e.b, static_cast<std::uint32_t>(i)};
        adj_[cursor[e.b]++] = {e.a, static_cast<std::uint32_t>(i)};
    }
    for (std::size_t v = 0; v < n; ++v) {
        std::sort(adj_.begin() + adj_offsets_[v], adj_.begin() + adj_offsets_[v + 1],
                  [](const AdjEntry& x, const AdjEntry& y) { return x.neighbor < y.neighbor; });
    }
}

void TemporalGraph::check_node(NodeId n) const {
    if (n >= labels_.size()) {
        throw NotFoundError("node " + std::to_string(n) + " not in graph of " +
                            std::to_string(labels_.size()) + " nodes");
    }
}

const std::string& TemporalGraph::label(NodeId n) const {
    check_node(n);
    return labels_[n];
}

std::optional<NodeId> TemporalGraph::find_label(std::string_view label) const {
    auto it = label_index_.find(std::string(label));
    if (it == label_index_.end()) return std::nullopt;
    return it->second;
}

const std::vector<std::uint32_t>& TemporalGraph::series(NodeId n) const {
    check_node(n);
    return series_[n];
}

std::vector<std::pair<NodeId, double>> TemporalGraph::neighbors(NodeId n) const {
    check_node(n);
    std::vector<std::pair<NodeId, double>> out;
    const auto row = adjacency(n);
    out.reserve(row.size());
    for (const auto& entry : row) {
        out.emplace_back(entry.neighbor, edges_[entry.edge].weight);
    }
    return out;
}

std::span<const TemporalGraph::AdjEntry> TemporalGraph::adjacency(NodeId n) const {
    check_node(n);
    return {adj_.data() + adj_offsets_[n], adj_offsets_[n + 1] - adj_offsets_[n]};
}

double TemporalGraph::total_weight() const {
    double sum = 0.0;
    for (const auto& e : edges_) sum += e.weight;
    return sum;
}

double TemporalGraph::weighted_degree(NodeId n) const {
    double sum = 0.0;
    for (const auto& entry : adjacency(n)) sum += edges_[entry.edge].weight;
    return sum;
}

void TemporalGraph::set_weights(const std::vector<double>& weights) {
    if (weights.size() != edges_.size()) {
        throw ShapeError("weight vector size does not match edge count");
    }
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] < 0.0) throw RangeError("negative edge weight");
        edges_[i].weight = weights[i];
    }
}

void TemporalGraph::zero_weights() {
    for (auto& e : edges_) e.weight = 0.0;
}

TemporalGraph TemporalGraph::with_unit_weights() const {
    TemporalGraph g = *this;
    for (auto& e : g.edges_) e.weight = 1.0;
    return g;
}

TemporalGraph TemporalGraph::slice(const TimeWindow& window) const {
    check_window(window, horizon_);
    std::vector<std::vector<std::uint32_t>> sliced;
    sliced.reserve(series_.size());
    for (const auto& s : series_) {
        sliced.emplace_back(s.begin() + window.start_hour, s.begin() + window.end_hour);
    }
    std::vector<Edge> edges = edges_;
    for (auto& e : edges) e.weight = 0.0;
    return TemporalGraph(labels_, std::move(sliced), std::move(edges),
                         start_epoch_hour_ + window.start_hour);
}

TemporalGraph::PruneResult TemporalGraph::induced_subgraph(const std::vector<bool>& keep) const {
    if (keep.size() != labels_.size()) {
        throw ShapeError("keep mask size does not match node count");
    }
    PruneResult res;
    res.old_to_new.assign(labels_.size(), kNoNode);
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (keep[i]) {
            res.old_to_new[i] = static_cast<NodeId>(res.new_to_old.size());
            res.new_to_old.push_back(static_cast<NodeId>(i));
        }
    }
    std::vector<std::string> labels;
    std::vector<std::vector<std::uint32_t>> series;
    labels.reserve(res.new_to_old.size());
    series.reserve(res.new_to_old.size());
    for (NodeId old : res.new_to_old) {
        labels.push_back(labels_[old]);
        series.push_back(series_[old]);
    }
    std::vector<Edge> edges;
    for (const auto& e : edges_) {
        const NodeId na = res.old_to_new[e.a];
        const NodeId nb = res.old_to_new[e.b];
        if (na != kNoNode && nb != kNoNode) {
            edges.push_back({na, nb, e.weight});
        }
    }
    res.graph = TemporalGraph(std::move(labels), std::move(series), std::move(edges),
                              start_epoch_hour_);
    // An all-false mask on a nonzero-horizon graph still yields horizon 0 in
    // the constructor; that's fine for an empty result.
    return res;
}

TemporalGraph::PruneResult TemporalGraph::prune(std::size_t min_component_size) const {
    const std::size_t n = labels_.size();
    // Union-find over strictly positive edges.
    std::vector<NodeId> parent(n);
    for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<NodeId>(i);
    std::function<NodeId(NodeId)> find = [&](NodeId x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    std::vector<bool> has_edge(n, false);
    for (const auto& e : edges_) {
        if (e.weight == 0.0) continue;
        has_edge[e.a] = has_edge[e.b] = true;
        parent[find(e.a)] = find(e.b);
    }
    std::vector<std::size_t> comp_size(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (has_edge[i]) ++comp_size[find(static_cast<NodeId>(i))];
    }
    std::vector<bool> keep(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        keep[i] = has_edge[i] && comp_size[find(static_cast<NodeId>(i))] >= min_component_size;
    }
    // Zero-weight edges between surviving nodes must not survive either:
    // mask to the kept nodes first, then drop the zero-weight edges.
    PruneResult res = induced_subgraph(keep);
    std::vector<Edge> edges;
    edges.reserve(res.graph.edge_count());
    for (const auto& e : res.graph.edges()) {
        if (e.weight > 0.0) edges.push_back(e);
    }
    if (edges.size() != res.graph.edge_count()) {
        std::vector<std::string> labels = res.graph.labels_;
        std::vector<std::vector<std::uint32_t>> series = res.graph.series_;
        res.graph = TemporalGraph(std::move(labels), std::move(series), std::move(edges),
                                  start_epoch_hour_);
    }
    return res;
}

} // namespace memnet
