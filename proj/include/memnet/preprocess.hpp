#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "memnet/graph.hpp"

namespace memnet {

struct BurstConfig {
    double n = 5.0;                    // activity rate multiplier
    std::uint32_t min_burstiness = 5;  // nodes with b <= this are discarded
};

/// Binary burst indicator: k[t] = 1 iff x[t] > n*sigma + mu, with mu and the
/// population standard deviation sigma taken over the whole input span.
/// Throws RangeError on an empty series.
std::vector<std::uint8_t> activity_indicator(std::span<const std::uint32_t> series, double n);

/// Number of burst hours: sum of the activity indicator.
std::uint32_t burstiness(std::span<const std::uint32_t> series, double n);

/// Keeps nodes with burstiness strictly above cfg.min_burstiness, computed on
/// the graph's current (already sliced) series.
TemporalGraph filter_bursty(const TemporalGraph& graph, const BurstConfig& cfg);

/// Union-of-monthly-survivors filter: a node survives if its burstiness
/// exceeds the threshold within at least one calendar month of the grid.
/// Months come from the graph's start hour; partial boundary months count.
TemporalGraph filter_bursty_monthly_union(const TemporalGraph& graph, const BurstConfig& cfg);

/// Calendar-month windows covering [0, horizon), first/last possibly partial.
std::vector<TimeWindow> calendar_months(std::int64_t start_epoch_hour, std::int64_t horizon);

} // namespace memnet
