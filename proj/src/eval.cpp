#include "memnet/eval.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "memnet/errors.hpp"
#include "memnet/util.hpp"

namespace memnet {

double recall_accuracy(const Pattern& original, const Pattern& recalled,
                       std::optional<TimeWindow> window, bool relaxed) {
    if (original.rows != recalled.rows || original.cols != recalled.cols) {
        throw ShapeError("original and recalled patterns have different shapes");
    }
    std::size_t begin = 0, end = original.cols;
    if (window) {
        check_window(*window, static_cast<std::int64_t>(original.cols));
        begin = static_cast<std::size_t>(window->start_hour);
        end = static_cast<std::size_t>(window->end_hour);
    }
    if (relaxed) {
        std::size_t active_nodes = 0, recovered = 0;
        for (std::size_t r = 0; r < original.rows; ++r) {
            bool orig_any = false, rec_any = false;
            for (std::size_t t = begin; t < end; ++t) {
                orig_any = orig_any || original.at(r, t) > 0;
                rec_any = rec_any || recalled.at(r, t) > 0;
            }
            if (orig_any) {
                ++active_nodes;
                if (rec_any) ++recovered;
            }
        }
        if (active_nodes == 0) {
            throw UndefinedValueError("no original activation inside the window");
        }
        return static_cast<double>(recovered) / static_cast<double>(active_nodes);
    }
    std::size_t active = 0, hits = 0;
    for (std::size_t r = 0; r < original.rows; ++r) {
        for (std::size_t t = begin; t < end; ++t) {
            if (original.at(r, t) > 0) {
                ++active;
                if (recalled.at(r, t) > 0) ++hits;
            }
        }
    }
    if (active == 0) {
        throw UndefinedValueError("no original activation inside the window");
    }
    return static_cast<double>(hits) / static_cast<double>(active);
}

EvalReport error_curve(const TemporalGraph& graph, std::span<const NodeId> cluster,
                       const Pattern& pattern, const EvalConfig& cfg) {
    if (cluster.empty()) throw EmptyInputError("cluster is empty");
    if (cfg.trials < 1) throw ConfigError("trials must be >= 1");
    if (cfg.event_window < 1) throw ConfigError("event_window must be >= 1");
    for (double f : cfg.mask_fractions) {
        if (!(f > 0.0) || f > 1.0) throw ConfigError("mask fractions must be in (0, 1]");
    }
    const TimeWindow event{cfg.event_start,
                           std::min<std::int64_t>(cfg.event_start + cfg.event_window,
                                                  static_cast<std::int64_t>(pattern.cols))};
    check_window(event, static_cast<std::int64_t>(pattern.cols));

    std::vector<NodeId> cluster_rows(cluster.begin(), cluster.end());
    const Pattern original_cluster = extract_rows(pattern, cluster_rows);

    EvalReport report;
    report.fractions.assign(cfg.mask_fractions.begin(), cfg.mask_fractions.end());
    report.trials = cfg.trials;
    report.seed = cfg.seed;
    report.event_start = event.start_hour;
    report.event_len = event.length();

    const RecallConfig recall_cfg{cfg.theta, cfg.max_iter, cfg.threads};
    for (std::size_t fi = 0; fi < cfg.mask_fractions.size(); ++fi) {
        const double f = cfg.mask_fractions[fi];
        const auto keep_count = static_cast<std::size_t>(
            std::ceil(f * static_cast<double>(cluster_rows.size())));
        std::vector<double> err_full, err_event, err_relaxed;
        for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
            // per-(fraction, trial) stream: schedule-independent
            std::mt19937_64 rng(cfg.seed ^ (0x9e3779b97f4a7c15ULL * (fi * 1000003 + trial + 1)));
            auto order = shuffled_indices(cluster_rows.size(), rng);
            std::vector<NodeId> keep;
            keep.reserve(keep_count);
            for (std::size_t k = 0; k < keep_count; ++k) keep.push_back(cluster_rows[order[k]]);

            const Pattern masked = mask_pattern(pattern, keep);
            const RecallResult rr = recall(graph, masked, recall_cfg);
            const Pattern recalled_cluster = extract_rows(rr.pattern, cluster_rows);

            err_full.push_back(
                1.0 - recall_accuracy(original_cluster, recalled_cluster, std::nullopt, false));
            err_event.push_back(
                1.0 - recall_accuracy(original_cluster, recalled_cluster, event, false));
            err_relaxed.push_back(
                1.0 - recall_accuracy(original_cluster, recalled_cluster, event, true));
        }
        const auto mfull = mean_std(err_full);
        const auto mevent = mean_std(err_event);
        const auto mrelax = mean_std(err_relaxed);
        report.full_period.push_back({mfull.mean, mfull.stddev});
        report.event_window.push_back({mevent.mean, mevent.stddev});
        report.relaxed_window.push_back({mrelax.mean, mrelax.stddev});
    }
    return report;
}

std::vector<std::vector<double>> monthly_recall_matrix(
    const std::vector<TemporalGraph>& monthly_graphs, const Pattern& full_pattern,
    const RecallConfig& cfg) {
    std::unordered_map<std::string, std::size_t> row_of;
    row_of.reserve(full_pattern.labels.size());
    for (std::size_t r = 0; r < full_pattern.labels.size(); ++r) {
        row_of.emplace(full_pattern.labels[r], r);
    }
    std::vector<std::vector<double>> curves;
    curves.reserve(monthly_graphs.size());
    for (const auto& g : monthly_graphs) {
        std::vector<NodeId> rows;
        rows.reserve(g.node_count());
        for (std::size_t i = 0; i < g.node_count(); ++i) {
            auto it = row_of.find(g.label(static_cast<NodeId>(i)));
            if (it == row_of.end()) {
                throw ShapeError("node '" + g.label(static_cast<NodeId>(i)) +
                                 "' missing from the full pattern");
            }
            rows.push_back(static_cast<NodeId>(it->second));
        }
        const Pattern input = extract_rows(full_pattern, rows);
        const RecallResult rr = recall(g, input, cfg);
        std::vector<double> diff(input.cols);
        for (std::size_t t = 0; t < input.cols; ++t) {
            diff[t] = static_cast<double>(rr.pattern.column_active(t)) -
                      static_cast<double>(input.column_active(t));
        }
        curves.push_back(std::move(diff));
    }
    return curves;
}

} // namespace memnet
