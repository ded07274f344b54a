#include "memnet/synth.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <random>

#include "memnet/errors.hpp"
#include "memnet/util.hpp"

namespace memnet {

namespace {

std::uint32_t poisson(std::mt19937_64& rng, double mean) {
    if (mean <= 0.0) return 0;
    std::poisson_distribution<std::uint32_t> dist(mean);
    return dist(rng);
}

void validate(const SynthConfig& cfg) {
    if (cfg.n_nodes == 0) throw ConfigError("n_nodes must be positive");
    if (cfg.n_clusters == 0 || cfg.cluster_size == 0) {
        throw ConfigError("n_clusters and cluster_size must be positive");
    }
    if (cfg.n_clusters * cfg.cluster_size > cfg.n_nodes) {
        throw ConfigError("cluster_size * n_clusters exceeds n_nodes");
    }
    if (!(cfg.p_in > cfg.p_out)) throw ConfigError("p_in must exceed p_out");
    if (cfg.p_in < 0 || cfg.p_in > 1 || cfg.p_out < 0 || cfg.p_out > 1) {
        throw ConfigError("edge probabilities must be in [0, 1]");
    }
    if (cfg.horizon <= 0) throw ConfigError("horizon must be positive");
    if (cfg.event_len <= 0) throw ConfigError("event_len must be positive");
    if (cfg.baseline_rate < 0) throw ConfigError("baseline_rate must be nonnegative");
    if (cfg.event_participation <= 0.0 || cfg.event_participation > 1.0) {
        throw ConfigError("event_participation must be in (0, 1]");
    }
    if (cfg.events_per_cluster > 0) {
        const std::int64_t slots =
            static_cast<std::int64_t>(cfg.n_clusters * cfg.events_per_cluster);
        if (slots * cfg.event_len > cfg.horizon) {
            throw ConfigError("event windows do not fit in the horizon");
        }
    }
}

} // namespace

SynthResult generate(const SynthConfig& cfg) {
    validate(cfg);
    std::mt19937_64 rng(cfg.seed);

    SynthResult res;
    auto& truth = res.truth;
    truth.cluster_of.assign(cfg.n_nodes, -1);
    for (std::size_t c = 0; c < cfg.n_clusters; ++c) {
        for (std::size_t k = 0; k < cfg.cluster_size; ++k) {
            truth.cluster_of[c * cfg.cluster_size + k] = static_cast<std::int32_t>(c);
        }
    }

    // Disjoint event windows: one slot per (cluster, event), cluster-major,
    // each event centered in its slot.
    truth.event_windows.assign(cfg.n_clusters, {});
    if (cfg.events_per_cluster > 0) {
        const std::size_t slots = cfg.n_clusters * cfg.events_per_cluster;
        const std::int64_t slot_len = cfg.horizon / static_cast<std::int64_t>(slots);
        for (std::size_t c = 0; c < cfg.n_clusters; ++c) {
            for (std::size_t e = 0; e < cfg.events_per_cluster; ++e) {
                const std::size_t slot = c * cfg.events_per_cluster + e;
                const std::int64_t begin = static_cast<std::int64_t>(slot) * slot_len +
                                           (slot_len - cfg.event_len) / 2;
                truth.event_windows[c].push_back({begin, begin + cfg.event_len});
            }
        }
    }

    std::vector<std::string> labels(cfg.n_nodes);
    for (std::size_t i = 0; i < cfg.n_nodes; ++i) {
        char buf[16];
        std::snprintf(buf, sizeof(buf), "n%05zu", i);
        labels[i] = buf;
    }

    // Per-node event-hour mask, then series in node order (one RNG stream).
    std::vector<std::vector<std::uint32_t>> series(cfg.n_nodes);
    const auto T = static_cast<std::size_t>(cfg.horizon);
    std::vector<std::uint8_t> on_event(T);
    for (std::size_t i = 0; i < cfg.n_nodes; ++i) {
        std::fill(on_event.begin(), on_event.end(), 0);
        const std::int32_t c = truth.cluster_of[i];
        if (c >= 0) {
            for (const auto& w : truth.event_windows[static_cast<std::size_t>(c)]) {
                for (std::int64_t t = w.start_hour; t < w.end_hour; ++t) {
                    on_event[static_cast<std::size_t>(t)] =
                        canonical(rng) < cfg.event_participation ? 1 : 0;
                }
            }
        }
        auto& s = series[i];
        s.resize(T);
        for (std::size_t t = 0; t < T; ++t) {
            s[t] = poisson(rng, cfg.baseline_rate) + (on_event[t] ? cfg.amplitude : 0);
        }
        if (c >= 0 && cfg.solo_spikes_per_node > 0) {
            for (std::size_t k = 0; k < cfg.solo_spikes_per_node; ++k) {
                // rejection-sample an hour outside the node's own events
                for (int tries = 0; tries < 64; ++tries) {
                    const auto t = static_cast<std::size_t>(bounded_rand(rng, T));
                    bool inside = false;
                    for (const auto& w : truth.event_windows[static_cast<std::size_t>(c)]) {
                        if (static_cast<std::int64_t>(t) >= w.start_hour &&
                            static_cast<std::int64_t>(t) < w.end_hour) {
                            inside = true;
                            break;
                        }
                    }
                    if (!inside) {
                        s[t] += cfg.amplitude;
                        break;
                    }
                }
            }
        }
    }

    // Planted-partition topology over the pair stream (i < j).
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < cfg.n_nodes; ++i) {
        for (std::size_t j = i + 1; j < cfg.n_nodes; ++j) {
            const bool same = truth.cluster_of[i] >= 0 && truth.cluster_of[i] == truth.cluster_of[j];
            const double p = same ? cfg.p_in : cfg.p_out;
            if (canonical(rng) < p) {
                edges.push_back({static_cast<NodeId>(i), static_cast<NodeId>(j), 0.0});
            }
        }
    }

    res.graph = TemporalGraph(std::move(labels), std::move(series), std::move(edges),
                              cfg.start_epoch_hour);
    return res;
}

void save_truth_csv(const SynthResult& result, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    for (std::size_t c = 0; c < result.truth.event_windows.size(); ++c) {
        for (const auto& w : result.truth.event_windows[c]) {
            out << "# event,cluster=" << c << ",start=" << w.start_hour
                << ",end=" << w.end_hour << '\n';
        }
    }
    out << "label,cluster_id\n";
    for (std::size_t i = 0; i < result.graph.node_count(); ++i) {
        out << csv_escape(result.graph.label(static_cast<NodeId>(i))) << ','
            << result.truth.cluster_of[i] << '\n';
    }
    if (!out) throw IoError("truth write failed");
}

} // namespace memnet
