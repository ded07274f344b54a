#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "memnet/graph.hpp"

namespace memnet {

enum class Scale { linear, log };

struct Histogram {
    std::vector<double> edges;       // bins + 1, strictly ascending
    std::vector<std::size_t> counts; // one per bin; last bin closed at the top
    Scale scale = Scale::linear;

    std::size_t total() const;
    std::size_t bins() const { return counts.size(); }
};

/// Bins samples into explicit edges; samples outside [front, back] are ignored.
Histogram histogram_with_edges(std::span<const double> samples, std::vector<double> edges,
                               Scale scale);

/// Auto-ranged histogram over the samples. Log scale uses geometrically
/// spaced bins over the positive samples (non-positive samples are ignored).
/// Throws EmptyInputError when no sample is usable.
Histogram make_histogram(std::span<const double> samples, std::size_t bins, Scale scale);

/// Degree histogram on log-spaced bins; weighted degree is the sum of
/// incident weights, unweighted the incident edge count.
Histogram degree_distribution(const TemporalGraph& graph, bool weighted,
                              std::size_t bins = 30);

/// Histogram of strictly positive edge weights on log-spaced bins.
Histogram weight_distribution(const TemporalGraph& graph, std::size_t bins = 30);

/// Continuous maximum-likelihood power-law exponent
///   gamma = 1 + n / sum ln(x_i / xmin)
/// over samples >= xmin. Throws InsufficientDataError with fewer than 10
/// usable samples or a degenerate (all equal to xmin) sample set.
double powerlaw_exponent(std::span<const double> samples, double xmin);

/// Least-squares slope of log-density vs log-bin-center on a log-binned
/// histogram of the samples >= xmin; secondary to the MLE form.
double powerlaw_exponent_regression(std::span<const double> samples, double xmin,
                                    std::size_t bins = 30);

} // namespace memnet
