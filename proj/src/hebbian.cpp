#include "memnet/hebbian.hpp"

#include "memnet/errors.hpp"
#include "memnet/util.hpp"

namespace memnet {

TemporalGraph learn(const TemporalGraph& graph, const LearnConfig& cfg) {
    if (cfg.lambda < 0.0 || cfg.lambda > 1.0) {
        throw ConfigError("lambda must be in [0, 1]");
    }
    const auto& edges = graph.edges();
    std::vector<double> weights(edges.size(), 0.0);
    const double lambda = cfg.lambda;
    parallel_for(edges.size(), cfg.threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t e = begin; e < end; ++e) {
            const auto& sa = graph.series(edges[e].a);
            const auto& sb = graph.series(edges[e].b);
            double w = 0.0;
            // ascending t keeps the fp accumulation order fixed
            for (std::size_t t = 0; t < sa.size(); ++t) {
                w += weight_delta(sa[t], sb[t], lambda);
            }
            weights[e] = w;
        }
    });
    TemporalGraph out = graph;
    out.set_weights(weights);
    return out;
}

} // namespace memnet
