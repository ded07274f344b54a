#pragma once

#include <cstdint>

#include "memnet/graph.hpp"

namespace memnet {

struct LearnConfig {
    double lambda = 0.5;  // similarity threshold in [0, 1]
    unsigned threads = 1;
};

/// Co-activation similarity of two hourly visit counts: 0 when both are 0,
/// otherwise min/max in [0, 1].
inline double similarity(std::uint32_t a, std::uint32_t b) {
    if (a == 0 && b == 0) return 0.0;
    const auto lo = a < b ? a : b;
    const auto hi = a < b ? b : a;
    return static_cast<double>(lo) / static_cast<double>(hi);
}

/// Thresholded weight increment: similarity when strictly above lambda, else 0.
inline double weight_delta(std::uint32_t a, std::uint32_t b, double lambda) {
    const double sim = similarity(a, b);
    return sim > lambda ? sim : 0.0;
}

/// Accumulates weight_delta over every hour for every existing edge;
/// no edge is ever created or removed and node series are untouched.
/// Edge-parallel: identical results for any thread count.
TemporalGraph learn(const TemporalGraph& graph, const LearnConfig& cfg = {});

} // namespace memnet
