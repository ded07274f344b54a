#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "memnet/graph.hpp"

namespace memnet {

/// Planted-partition temporal graph with correlated event bursts per cluster.
struct SynthConfig {
    std::size_t n_nodes = 100;
    std::size_t n_clusters = 3;
    std::size_t cluster_size = 25;
    double p_in = 0.3;   // intra-cluster edge probability
    double p_out = 0.01; // all other pairs
    std::int64_t horizon = 720;
    std::size_t events_per_cluster = 1;
    std::int64_t event_len = 24;
    double baseline_rate = 0.02;      // Poisson visits/hour off-event
    std::uint32_t amplitude = 200;    // pulse height during events
    double event_participation = 1.0; // per member-hour chance of joining the pulse
    std::size_t solo_spikes_per_node = 0; // isolated high spikes outside own events
    std::uint64_t seed = 1;
    std::int64_t start_epoch_hour = 0;
};

struct GroundTruth {
    std::vector<std::int32_t> cluster_of;             // -1 for background nodes
    std::vector<std::vector<TimeWindow>> event_windows; // per cluster
};

struct SynthResult {
    TemporalGraph graph;
    GroundTruth truth;
};

/// Deterministic for a fixed seed. Cluster event windows are disjoint across
/// clusters, evenly spaced over the horizon. Members receive a rectangular
/// pulse of `amplitude` plus baseline noise at their event hours; everyone
/// gets sparse baseline noise elsewhere. Throws ConfigError on invalid cfg.
SynthResult generate(const SynthConfig& cfg);

/// Writes "label,cluster_id" rows (background nodes get -1), preceded by
/// '#'-comment lines describing the event windows.
void save_truth_csv(const SynthResult& result, const std::string& path);

} // namespace memnet
