#include "memnet/community.hpp"

#include <algorithm>
#include <fstream>
#include <unordered_map>

#include "memnet/errors.hpp"
#include "memnet/util.hpp"

namespace memnet {

namespace {

// Aggregation levels need self-loops, which TemporalGraph forbids, so the
// optimizer runs on this minimal weighted CSR form.
struct WGraph {
    std::size_t n = 0;
    std::vector<std::size_t> offsets;      // n + 1
    std::vector<std::uint32_t> neighbors;  // may include self
    std::vector<double> weights;           // parallel to neighbors; self-loop stored once
    std::vector<double> degree;            // weighted degree, self-loops counted twice
    double total_weight = 0.0;             // m: each edge once, self-loops once

    static WGraph from_temporal(const TemporalGraph& g) {
        WGraph w;
        w.n = g.node_count();
        w.offsets.assign(w.n + 1, 0);
        for (const auto& e : g.edges()) {
            ++w.offsets[e.a + 1];
            ++w.offsets[e.b + 1];
        }
        for (std::size_t i = 0; i < w.n; ++i) w.offsets[i + 1] += w.offsets[i];
        w.neighbors.resize(g.edge_count() * 2);
        w.weights.resize(g.edge_count() * 2);
        std::vector<std::size_t> cursor(w.offsets.begin(), w.offsets.end() - 1);
        for (const auto& e : g.edges()) {
            w.neighbors[cursor[e.a]] = e.b;
            w.weights[cursor[e.a]++] = e.weight;
            w.neighbors[cursor[e.b]] = e.a;
            w.weights[cursor[e.b]++] = e.weight;
        }
        w.finalize();
        return w;
    }

    void finalize() {
        degree.assign(n, 0.0);
        total_weight = 0.0;
        for (std::size_t u = 0; u < n; ++u) {
            for (std::size_t k = offsets[u]; k < offsets[u + 1]; ++k) {
                degree[u] += neighbors[k] == u ? 2.0 * weights[k] : weights[k];
            }
        }
        for (std::size_t u = 0; u < n; ++u) {
            for (std::size_t k = offsets[u]; k < offsets[u + 1]; ++k) {
                if (neighbors[k] >= u) total_weight += weights[k];
            }
        }
    }
};

// One level of local moves; returns true when at least one node moved.
bool local_moves(const WGraph& g, double gamma, std::mt19937_64& rng,
                 std::vector<std::uint32_t>& n2c) {
    const double m = g.total_weight;
    std::vector<double> tot(g.n, 0.0); // sum of degrees per community
    for (std::size_t u = 0; u < g.n; ++u) tot[n2c[u]] += g.degree[u];

    std::vector<double> comm_weight(g.n, 0.0); // scratch: weight from u to community
    std::vector<std::uint32_t> touched;
    bool any_move = false;
    bool moved = true;
    const auto order = shuffled_indices(g.n, rng);
    while (moved) {
        moved = false;
        for (std::uint32_t u : order) {
            const std::uint32_t old_c = n2c[u];
            touched.clear();
            for (std::size_t k = g.offsets[u]; k < g.offsets[u + 1]; ++k) {
                const std::uint32_t v = g.neighbors[k];
                if (v == u) continue; // self-loops move with the node

                const std::uint32_t c = n2c[v];
                if (comm_weight[c] == 0.0) touched.push_back(c);
                comm_weight[c] += g.weights[k];
            }
            if (comm_weight[old_c] == 0.0) touched.push_back(old_c);
            std::sort(touched.begin(), touched.end()); // lowest id wins ties

            tot[old_c] -= g.degree[u];
            const double base = comm_weight[old_c] - gamma * g.degree[u] * tot[old_c] / (2.0 * m);
            std::uint32_t best_c = old_c;
            double best_gain = base;
            for (std::uint32_t c : touched) {
                const double gain = comm_weight[c] - gamma * g.degree[u] * tot[c] / (2.0 * m);
                if (gain > best_gain + 1e-12) {
                    best_gain = gain;
                    best_c = c;
                }
            }
            tot[best_c] += g.degree[u];
            n2c[u] = best_c;
            if (best_c != old_c) {
                moved = true;
                any_move = true;
            }
            for (std::uint32_t c : touched) comm_weight[c] = 0.0;
        }
    }
    return any_move;
}

void renumber(std::vector<std::uint32_t>& n2c) {
    std::unordered_map<std::uint32_t, std::uint32_t> remap;
    for (auto& c : n2c) {
        auto [it, fresh] = remap.try_emplace(c, static_cast<std::uint32_t>(remap.size()));
        c = it->second;
    }
}

WGraph aggregate(const WGraph& g, const std::vector<std::uint32_t>& n2c, std::size_t n_comms) {
    // Sum edge weights between communities; intra weight becomes a self-loop.
    std::vector<std::unordered_map<std::uint32_t, double>> acc(n_comms);
    for (std::size_t u = 0; u < g.n; ++u) {
        const std::uint32_t cu = n2c[u];
        for (std::size_t k = g.offsets[u]; k < g.offsets[u + 1]; ++k) {
            const std::uint32_t v = g.neighbors[k];
            if (v < u) continue; // each undirected edge once (self-loops have v == u)
            const std::uint32_t cv = n2c[v];
            const auto a = std::min(cu, cv);
            const auto b = std::max(cu, cv);
            acc[a][b] += g.weights[k];
        }
    }
    WGraph out;
    out.n = n_comms;
    out.offsets.assign(n_comms + 1, 0);
    for (std::size_t a = 0; a < n_comms; ++a) {
        for (const auto& [b, w] : acc[a]) {
            ++out.offsets[a + 1];
            if (b != a) ++out.offsets[b + 1];
        }
    }
    for (std::size_t i = 0; i < n_comms; ++i) out.offsets[i + 1] += out.offsets[i];
    out.neighbors.resize(out.offsets.back());
    out.weights.resize(out.offsets.back());
    std::vector<std::size_t> cursor(out.offsets.begin(), out.offsets.end() - 1);
    for (std::size_t a = 0; a < n_comms; ++a) {
        // deterministic order within the row
        std::vector<std::pair<std::uint32_t, double>> row(acc[a].begin(), acc[a].end());
        std::sort(row.begin(), row.end());
        for (const auto& [b, w] : row) {
            out.neighbors[cursor[a]] = b;
            out.weights[cursor[a]++] = w;
            if (b != static_cast<std::uint32_t>(a)) {
                out.neighbors[cursor[b]] = static_cast<std::uint32_t>(a);
                out.weights[cursor[b]++] = w;
            }
        }
    }
    out.finalize();
    return out;
}

} // namespace

std::size_t Partition::community_count() const {
    std::uint32_t max_id = 0;
    if (assignment.empty()) return 0;
    for (auto c : assignment) max_id = std::max(max_id, c);
    return static_cast<std::size_t>(max_id) + 1;
}

double modularity(const TemporalGraph& graph, const Partition& partition, double resolution) {
    if (partition.assignment.size() != graph.node_count()) {
        throw ShapeError("partition does not cover the graph");
    }
    const double m = graph.total_weight();
    if (m <= 0.0) {
        throw UndefinedValueError("modularity undefined: total edge weight is zero");
    }
    const std::size_t n_comms = partition.community_count();
    std::vector<double> intra(n_comms, 0.0);
    std::vector<double> deg(n_comms, 0.0);
    for (const auto& e : graph.edges()) {
        const auto ca = partition.assignment[e.a];
        const auto cb = partition.assignment[e.b];
        deg[ca] += e.weight;
        deg[cb] += e.weight;
        if (ca == cb) intra[ca] += e.weight;
    }
    double q = 0.0;
    for (std::size_t c = 0; c < n_comms; ++c) {
        q += intra[c] / m - resolution * (deg[c] / (2.0 * m)) * (deg[c] / (2.0 * m));
    }
    return q;
}

Partition louvain(const TemporalGraph& graph, double resolution, std::uint64_t seed) {
    if (graph.empty()) throw EmptyInputError("louvain needs a non-empty graph");
    const double m = graph.total_weight();
    if (m <= 0.0) {
        throw UndefinedValueError("louvain undefined: total edge weight is zero");
    }
    std::mt19937_64 rng(seed);

    WGraph level = WGraph::from_temporal(graph);
    std::vector<std::uint32_t> full(graph.node_count()); // node -> community on the input graph
    for (std::size_t i = 0; i < full.size(); ++i) full[i] = static_cast<std::uint32_t>(i);

    for (int depth = 0; depth < 64; ++depth) {
        std::vector<std::uint32_t> n2c(level.n);
        for (std::size_t i = 0; i < level.n; ++i) n2c[i] = static_cast<std::uint32_t>(i);
        const bool improved = local_moves(level, resolution, rng, n2c);
        renumber(n2c);
        for (auto& c : full) c = n2c[c];
        if (!improved) break;
        const std::size_t n_comms = 1 + *std::max_element(n2c.begin(), n2c.end());
        if (n_comms == level.n) break;
        level = aggregate(level, n2c, n_comms);
    }

    Partition p;
    p.resolution = resolution;
    p.assignment = std::move(full);
    renumber(p.assignment);
    return p;
}

std::vector<std::size_t> community_sizes(const Partition& partition) {
    std::vector<std::size_t> sizes(partition.community_count(), 0);
    for (auto c : partition.assignment) ++sizes[c];
    std::sort(sizes.rbegin(), sizes.rend());
    return sizes;
}

void save_partition_csv(const TemporalGraph& graph, const Partition& partition,
                        std::ostream& out) {
    if (partition.assignment.size() != graph.node_count()) {
        throw ShapeError("partition does not cover the graph");
    }
    out << "label,community_id\n";
    for (std::size_t i = 0; i < graph.node_count(); ++i) {
        out << csv_escape(graph.label(static_cast<NodeId>(i))) << ','
            << partition.assignment[i] << '\n';
    }
    if (!out) throw IoError("partition write failed");
}

void save_partition_csv(const TemporalGraph& graph, const Partition& partition,
                        const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    save_partition_csv(graph, partition, out);
}

std::vector<std::pair<std::string, std::uint32_t>> load_partition_csv(std::istream& in) {
    std::vector<std::pair<std::string, std::uint32_t>> rows;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        const auto fields = split_csv_line(line);
        if (first && fields.size() >= 2 && fields[1] == "community_id") {
            first = false;
            continue; // header
        }
        first = false;
        if (fields.size() < 2) throw FormatError("partition row needs label,community_id");
        try {
            rows.emplace_back(fields[0],
                              static_cast<std::uint32_t>(std::stoul(fields[1])));
        } catch (const std::exception&) {
            throw FormatError("bad community id '" + fields[1] + "'");
        }
    }
    return rows;
}

std::vector<std::pair<std::string, std::uint32_t>> load_partition_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    return load_partition_csv(in);
}

} // namespace memnet
