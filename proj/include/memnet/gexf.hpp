#pragma once

#include <iosfwd>
#include <string>

#include "memnet/community.hpp"
#include "memnet/graph.hpp"

namespace memnet {

/// Writes the graph as GEXF 1.2 (undirected, weighted) with node labels and,
/// when a partition is given, a per-node integer "community" attribute.
void export_gexf(const TemporalGraph& graph, std::ostream& out,
                 const Partition* partition = nullptr);
void export_gexf(const TemporalGraph& graph, const std::string& path,
                 const Partition* partition = nullptr);

} // namespace memnet
