#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "memnet/graph.hpp"

namespace memnet {

/// Node x hour matrix over {-1, +1}. Rows align with graph nodes (labels
/// carried along); columns cover the window the source graph was sliced to.
struct Pattern {
    std::vector<std::string> labels;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::int8_t> cells; // rows * cols, row-major

    std::int8_t at(std::size_t r, std::size_t c) const { return cells[r * cols + c]; }
    void set(std::size_t r, std::size_t c, std::int8_t v) { cells[r * cols + c] = v; }

    /// Number of +1 entries in column c.
    std::size_t column_active(std::size_t c) const;

    static Pattern filled(std::vector<std::string> labels, std::size_t cols, std::int8_t value);

    bool same_cells(const Pattern& other) const {
        return rows == other.rows && cols == other.cols && cells == other.cells;
    }
};

struct RecallConfig {
    double theta = 0.0;
    std::size_t max_iter = 50;
    unsigned threads = 1;
};

struct RecallResult {
    Pattern pattern;
    std::size_t iterations = 0;
    bool converged = false;
    /// Second phase when the synchronous dynamics locked into a 2-cycle
    /// (reported with converged = false).
    std::optional<Pattern> cycle_phase;
};

/// Burst-binarized pattern: +1 where the activity indicator fires, else -1.
Pattern binarize(const TemporalGraph& graph, double n);

/// One synchronous update: out(i,t) = +1 iff sum_j w_ij * p(j,t) > theta.
/// Throws ShapeError when pattern rows do not match the graph.
Pattern recall_step(const TemporalGraph& graph, const Pattern& p, double theta,
                    unsigned threads = 1);

/// Iterates recall_step to a fixed point, a detected 2-cycle, or max_iter.
RecallResult recall(const TemporalGraph& graph, const Pattern& p0, const RecallConfig& cfg = {});

/// Keeps the given rows unchanged and forces every other row to -1.
/// Throws NotFoundError for a row index out of range.
Pattern mask_pattern(const Pattern& p, std::span<const NodeId> keep);

/// Restriction of a pattern to a subset of rows, in the given order.
Pattern extract_rows(const Pattern& p, std::span<const NodeId> rows);

/// CSV with one header row of node labels; each following row is one hour,
/// entries in {-1, 1}. (Columns are nodes, so the on-disk matrix is the
/// transpose of the in-memory one.)
void save_pattern_csv(const Pattern& p, std::ostream& out);
void save_pattern_csv(const Pattern& p, const std::string& path);
Pattern load_pattern_csv(std::istream& in);
Pattern load_pattern_csv(const std::string& path);

} // namespace memnet
