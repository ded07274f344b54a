#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "memnet/hopfield.hpp"

namespace memnet {

struct EvalConfig {
    std::vector<double> mask_fractions; // in (0, 1]
    std::size_t trials = 20;
    std::int64_t event_start = 0;  // column offset into the pattern
    std::int64_t event_window = 72;
    std::uint64_t seed = 0;
    double theta = 0.0;
    std::size_t max_iter = 50;
    unsigned threads = 1;
};

struct EvalCell {
    double mean_error = 0.0;
    double std_error = 0.0; // population std over trials
};

/// Mean/std of error = 1 - A per mask fraction, one column per error mode.
struct EvalReport {
    std::vector<double> fractions;
    std::vector<EvalCell> full_period;    // strict, all columns
    std::vector<EvalCell> event_window;   // strict, event columns only
    std::vector<EvalCell> relaxed_window; // relaxed, event columns only
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::int64_t event_start = 0;
    std::int64_t event_len = 0;
};

/// Share of correctly recalled activations.
/// Strict: +1 cells recovered over +1 cells present, inside the window
/// (nullopt = all columns). Relaxed: a node counts as recovered when it has
/// at least one original +1 and at least one recalled +1 in the window.
/// Throws UndefinedValueError when the original has no activation in range,
/// ShapeError on mismatched patterns, RangeError on a bad window.
double recall_accuracy(const Pattern& original, const Pattern& recalled,
                       std::optional<TimeWindow> window, bool relaxed);

/// Masking experiment: per fraction f and trial, keep a seeded random
/// ceil(f*|cluster|) subset of the cluster rows, blank everything else,
/// recall, and score the three error modes on the cluster rows.
EvalReport error_curve(const TemporalGraph& graph, std::span<const NodeId> cluster,
                       const Pattern& pattern, const EvalConfig& cfg);

/// Per-month recall difference curves: each monthly graph recalls the full
/// period's pattern (rows matched by label); the curve is the per-hour count
/// of recalled activations minus the input's. Throws ShapeError when a
/// monthly node is missing from the pattern.
std::vector<std::vector<double>> monthly_recall_matrix(
    const std::vector<TemporalGraph>& monthly_graphs, const Pattern& full_pattern,
    const RecallConfig& cfg = {});

} // namespace memnet
