#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "memnet/graph.hpp"

namespace memnet {

/// Node -> community assignment with dense community ids 0..C-1.
struct Partition {
    std::vector<std::uint32_t> assignment;
    double resolution = 1.0;

    std::size_t community_count() const;
};

/// Weighted Newman modularity
///   Q = (1/2m) sum_ij [w_ij - gamma * k_i k_j / (2m)] delta(c_i, c_j)
/// with m the total edge weight. Throws UndefinedValueError when m = 0 and
/// ShapeError when the partition does not cover the graph.
double modularity(const TemporalGraph& graph, const Partition& partition,
                  double resolution = 1.0);

/// Greedy modularity optimization: seeded-shuffle local moves plus
/// aggregation passes until no gain. Deterministic for a fixed seed; ties
/// break toward the lowest community id; isolated nodes stay singletons.
Partition louvain(const TemporalGraph& graph, double resolution = 1.0, std::uint64_t seed = 0);

/// Community cardinalities, descending.
std::vector<std::size_t> community_sizes(const Partition& partition);

/// CSV "label,community_id" with a header row.
void save_partition_csv(const TemporalGraph& graph, const Partition& partition,
                        std::ostream& out);
void save_partition_csv(const TemporalGraph& graph, const Partition& partition,
                        const std::string& path);

/// Loads label -> community id rows (header optional skipped).
std::vector<std::pair<std::string, std::uint32_t>> load_partition_csv(std::istream& in);
std::vector<std::pair<std::string, std::uint32_t>> load_partition_csv(const std::string& path);

} // namespace memnet
