#include "memnet/preprocess.hpp"

#include <cmath>

#include "memnet/errors.hpp"

namespace memnet {

namespace {

void mean_sigma(std::span<const std::uint32_t> xs, double& mu, double& sigma) {
    if (xs.empty()) throw RangeError("activity indicator needs a non-empty series");
    double sum = 0.0;
    for (auto v : xs) sum += v;
    mu = sum / static_cast<double>(xs.size());
    double sq = 0.0;
    for (auto v : xs) {
        const double d = static_cast<double>(v) - mu;
        sq += d * d;
    }
    sigma = std::sqrt(sq / static_cast<double>(xs.size())); // population form
}

} // namespace

std::vector<std::uint8_t> activity_indicator(std::span<const std::uint32_t> series, double n) {
    double mu, sigma;
    mean_sigma(series, mu, sigma);
    const double threshold = n * sigma + mu;
    std::vector<std::uint8_t> k(series.size(), 0);
    for (std::size_t t = 0; t < series.size(); ++t) {
        k[t] = static_cast<double>(series[t]) > threshold ? 1 : 0;
    }
    return k;
}

std::uint32_t burstiness(std::span<const std::uint32_t> series, double n) {
    double mu, sigma;
    mean_sigma(series, mu, sigma);
    const double threshold = n * sigma + mu;
    std::uint32_t b = 0;
    for (auto v : series) {
        if (static_cast<double>(v) > threshold) ++b;
    }
    return b;
}

TemporalGraph filter_bursty(const TemporalGraph& graph, const BurstConfig& cfg) {
    std::vector<bool> keep(graph.node_count(), false);
    for (std::size_t i = 0; i < graph.node_count(); ++i) {
        const auto& s = graph.series(static_cast<NodeId>(i));
        keep[i] = !s.empty() && burstiness(s, cfg.n) > cfg.min_burstiness;
    }
    return graph.induced_subgraph(keep).graph;
}

std::vector<TimeWindow> calendar_months(std::int64_t start_epoch_hour, std::int64_t horizon) {
    std::vector<TimeWindow> months;
    if (horizon <= 0) return months;
    std::int64_t cursor = 0;
    while (cursor < horizon) {
        const std::int64_t abs_hour = start_epoch_hour + cursor;
        std::int64_t days = abs_hour >= 0 ? abs_hour / 24 : (abs_hour - 23) / 24;
        int y;
        unsigned m, d;
        civil_from_days(days, y, m, d);
        const int ny = m == 12 ? y + 1 : y;
        const unsigned nm = m == 12 ? 1 : m + 1;
        const std::int64_t month_end = epoch_hours(ny, nm, 1, 0) - start_epoch_hour;
        months.push_back({cursor, std::min(month_end, horizon)});
        cursor = month_end;
    }
    return months;
}

TemporalGraph filter_bursty_monthly_union(const TemporalGraph& graph, const BurstConfig& cfg) {
    const auto months = calendar_months(graph.start_epoch_hour(), graph.horizon());
    std::vector<bool> keep(graph.node_count(), false);
    for (std::size_t i = 0; i < graph.node_count(); ++i) {
        const auto& s = graph.series(static_cast<NodeId>(i));
        for (const auto& w : months) {
            std::span<const std::uint32_t> slice(s.data() + w.start_hour,
                                                 static_cast<std::size_t>(w.length()));
            if (burstiness(slice, cfg.n) > cfg.min_burstiness) {
                keep[i] = true;
                break;
            }
        }
    }
    return graph.induced_subgraph(keep).graph;
}

} // namespace memnet
