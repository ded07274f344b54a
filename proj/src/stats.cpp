#include "memnet/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "memnet/errors.hpp"

namespace memnet {

std::size_t Histogram::total() const {
    std::size_t sum = 0;
    for (auto c : counts) sum += c;
    return sum;
}

Histogram histogram_with_edges(std::span<const double> samples, std::vector<double> edges,
                               Scale scale) {
    if (edges.size() < 2) throw RangeError("histogram needs at least two bin edges");
    for (std::size_t i = 1; i < edges.size(); ++i) {
        if (!(edges[i] > edges[i - 1])) throw RangeError("bin edges must be strictly ascending");
    }
    Histogram h;
    h.scale = scale;
    h.counts.assign(edges.size() - 1, 0);
    h.edges = std::move(edges);
    for (double x : samples) {
        if (x < h.edges.front() || x > h.edges.back()) continue;
        if (x == h.edges.back()) {
            ++h.counts.back();
            continue;
        }
        const auto it = std::upper_bound(h.edges.begin(), h.edges.end(), x);
        ++h.counts[static_cast<std::size_t>(it - h.edges.begin()) - 1];
    }
    return h;
}

Histogram make_histogram(std::span<const double> samples, std::size_t bins, Scale scale) {
    if (bins == 0) throw RangeError("bin count must be positive");
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    std::size_t usable = 0;
    for (double x : samples) {
        if (scale == Scale::log && x <= 0.0) continue;
        lo = std::min(lo, x);
        hi = std::max(hi, x);
        ++usable;
    }
    if (usable == 0) throw EmptyInputError("no usable samples for histogram");
    if (hi <= lo) hi = lo + std::max(std::abs(lo) * 1e-9, 1e-12); // degenerate range: one bin
    std::vector<double> edges(bins + 1);
    if (scale == Scale::log) {
        const double llo = std::log(lo), lhi = std::log(hi);
        for (std::size_t i = 0; i <= bins; ++i) {
            edges[i] = std::exp(llo + (lhi - llo) * static_cast<double>(i) /
                                          static_cast<double>(bins));
        }
        edges.front() = lo;
        edges.back() = hi;
        for (std::size_t i = 1; i <= bins; ++i) { // exp rounding can collapse edges
            if (edges[i] <= edges[i - 1]) edges[i] = std::nextafter(edges[i - 1], hi * 2);
        }
    } else {
        for (std::size_t i = 0; i <= bins; ++i) {
            edges[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(bins);
        }
    }
    return histogram_with_edges(samples, std::move(edges), scale);
}

Histogram degree_distribution(const TemporalGraph& graph, bool weighted, std::size_t bins) {
    if (graph.empty()) throw EmptyInputError("degree distribution of an empty graph");
    std::vector<double> degrees(graph.node_count());
    for (std::size_t i = 0; i < graph.node_count(); ++i) {
        degrees[i] = weighted ? graph.weighted_degree(static_cast<NodeId>(i))
                              : static_cast<double>(graph.degree(static_cast<NodeId>(i)));
    }
    return make_histogram(degrees, bins, Scale::log);
}

Histogram weight_distribution(const TemporalGraph& graph, std::size_t bins) {
    if (graph.empty()) throw EmptyInputError("weight distribution of an empty graph");
    std::vector<double> ws;
    ws.reserve(graph.edge_count());
    for (const auto& e : graph.edges()) {
        if (e.weight > 0.0) ws.push_back(e.weight);
    }
    return make_histogram(ws, bins, Scale::log);
}

double powerlaw_exponent(std::span<const double> samples, double xmin) {
    if (!(xmin > 0.0)) throw RangeError("xmin must be positive");
    std::size_t n = 0;
    double log_sum = 0.0;
    for (double x : samples) {
        if (x < xmin) continue;
        ++n;
        log_sum += std::log(x / xmin);
    }
    if (n < 10) {
        throw InsufficientDataError("power-law fit needs >= 10 samples above xmin, got " +
                                    std::to_string(n));
    }
    if (log_sum <= 0.0) {
        throw InsufficientDataError("degenerate sample set: all samples at xmin");
    }
    return 1.0 + static_cast<double>(n) / log_sum;
}

double powerlaw_exponent_regression(std::span<const double> samples, double xmin,
                                    std::size_t bins) {
    if (!(xmin > 0.0)) throw RangeError("xmin must be positive");
    std::vector<double> tail;
    for (double x : samples) {
        if (x >= xmin) tail.push_back(x);
    }
    if (tail.size() < 10) {
        throw InsufficientDataError("power-law fit needs >= 10 samples above xmin");
    }
    const Histogram h = make_histogram(tail, bins, Scale::log);
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < h.bins(); ++i) {
        if (h.counts[i] == 0) continue;
        const double width = h.edges[i + 1] - h.edges[i];
        const double center = std::sqrt(h.edges[i] * h.edges[i + 1]);
        lx.push_back(std::log(center));
        ly.push_back(std::log(static_cast<double>(h.counts[i]) / width));
    }
    if (lx.size() < 2) {
        throw InsufficientDataError("not enough occupied bins for a regression fit");
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        sx += lx[i];
        sy += ly[i];
        sxx += lx[i] * lx[i];
        sxy += lx[i] * ly[i];
    }
    const double k = static_cast<double>(lx.size());
    const double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
    return -slope;
}

} // namespace memnet
