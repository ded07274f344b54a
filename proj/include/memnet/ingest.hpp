#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "memnet/graph.hpp"

namespace memnet {

/// One hyperlink between two page labels; direction is discarded downstream.
struct EdgeRecord {
    std::string src;
    std::string dst;
};

/// Hourly grid the visit series align to.
struct TimeGrid {
    std::int64_t start_epoch_hour = 0;
    std::int64_t hours = 0; // T
};

struct EdgeParseResult {
    std::vector<EdgeRecord> records;
    std::size_t malformed = 0;
    std::size_t self_loops_dropped = 0;
};

/// Parses UTF-8 TSV "src<TAB>dst" lines. '#'-prefixed lines are comments.
/// Malformed lines are counted, not fatal; self-referencing lines are
/// dropped. Throws FormatError when more than half the data lines are
/// malformed, IoError on stream failure.
EdgeParseResult parse_edges(std::istream& in);

struct VisitParseResult {
    std::unordered_map<std::string, std::vector<std::uint32_t>> series; // each length T
    std::size_t malformed = 0;
    std::size_t out_of_grid = 0;
};

/// Parses CSV "label,iso8601_hour,count" into per-label hourly series on the
/// grid. Missing hours stay 0; duplicate (label, hour) counts are summed;
/// records outside the grid are dropped and counted.
VisitParseResult parse_visits(std::istream& in, const TimeGrid& grid);

/// Assembles a TemporalGraph: nodes are the labels touched by at least one
/// edge; labels without a visit series get an all-zero series; all weights
/// start at 0. Throws EmptyInputError when no node results.
TemporalGraph build_graph(const std::vector<EdgeRecord>& edges,
                          const std::unordered_map<std::string, std::vector<std::uint32_t>>& series,
                          const TimeGrid& grid);

/// Keeps nodes whose series exceeds `threshold` at least once (strict >) and
/// drops the rest with their incident edges.
TemporalGraph filter_min_visits(const TemporalGraph& graph, std::uint32_t threshold = 500);

} // namespace memnet
