#pragma once

#include <iosfwd>
#include <string>

#include "memnet/graph.hpp"

namespace memnet {

/// Versioned little-endian binary snapshot of a TemporalGraph:
/// header, node label table, canonical edge list, dense series block.
/// Round-trip stable; layout is internal to this library.
void save_snapshot(const TemporalGraph& graph, std::ostream& out);
void save_snapshot(const TemporalGraph& graph, const std::string& path);

TemporalGraph load_snapshot(std::istream& in);
TemporalGraph load_snapshot(const std::string& path);

} // namespace memnet
