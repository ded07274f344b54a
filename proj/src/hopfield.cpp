#include "memnet/hopfield.hpp"

#include <algorithm>
#include <fstream>

#include "memnet/errors.hpp"
#include "memnet/preprocess.hpp"
#include "memnet/util.hpp"

namespace memnet {

std::size_t Pattern::column_active(std::size_t c) const {
    std::size_t count = 0;
    for (std::size_t r = 0; r < rows; ++r) {
        if (at(r, c) > 0) ++count;
    }
    return count;
}

Pattern Pattern::filled(std::vector<std::string> labels, std::size_t cols, std::int8_t value) {
    Pattern p;
    p.rows = labels.size();
    p.cols = cols;
    p.labels = std::move(labels);
    p.cells.assign(p.rows * p.cols, value);
    return p;
}

Pattern binarize(const TemporalGraph& graph, double n) {
    Pattern p = Pattern::filled(graph.labels(), static_cast<std::size_t>(graph.horizon()), -1);
    if (p.cols == 0) return p; // zero-horizon graph: zero-column pattern
    for (std::size_t i = 0; i < graph.node_count(); ++i) {
        const auto k = activity_indicator(graph.series(static_cast<NodeId>(i)), n);
        for (std::size_t t = 0; t < k.size(); ++t) {
            if (k[t]) p.set(i, t, 1);
        }
    }
    return p;
}

Pattern recall_step(const TemporalGraph& graph, const Pattern& p, double theta,
                    unsigned threads) {
    if (p.rows != graph.node_count()) {
        throw ShapeError("pattern has " + std::to_string(p.rows) + " rows, graph has " +
                         std::to_string(graph.node_count()) + " nodes");
    }
    Pattern out = Pattern::filled(p.labels, p.cols, -1);
    if (p.cols == 0) return out;
    const auto& edges = graph.edges();
    parallel_for(p.rows, threads, [&](std::size_t begin, std::size_t end) {
        std::vector<double> field(p.cols);
        for (std::size_t i = begin; i < end; ++i) {
            std::fill(field.begin(), field.end(), 0.0);
            for (const auto& entry : graph.adjacency(static_cast<NodeId>(i))) {
                const double w = edges[entry.edge].weight;
                const std::int8_t* row = p.cells.data() + entry.neighbor * p.cols;
                for (std::size_t t = 0; t < p.cols; ++t) {
                    field[t] += row[t] > 0 ? w : -w;
                }
            }
            for (std::size_t t = 0; t < p.cols; ++t) {
                if (field[t] > theta) out.set(i, t, 1);
            }
        }
    });
    return out;
}

RecallResult recall(const TemporalGraph& graph, const Pattern& p0, const RecallConfig& cfg) {
    if (cfg.max_iter < 1) throw ConfigError("max_iter must be >= 1");
    RecallResult res;
    Pattern prev = p0;
    Pattern before_prev; // empty until two steps in
    for (std::size_t it = 1; it <= cfg.max_iter; ++it) {
        Pattern cur = recall_step(graph, prev, cfg.theta, cfg.threads);
        res.iterations = it;
        if (cur.same_cells(prev)) {
            res.converged = true;
            res.pattern = std::move(cur);
            return res;
        }
        if (it >= 2 && cur.same_cells(before_prev)) {
            // synchronous dynamics locked into a 2-cycle; keep both phases
            res.converged = false;
            res.cycle_phase = std::move(prev);
            res.pattern = std::move(cur);
            return res;
        }
        before_prev = std::move(prev);
        prev = std::move(cur);
    }
    res.converged = false;
    res.pattern = std::move(prev);
    return res;
}

Pattern mask_pattern(const Pattern& p, std::span<const NodeId> keep) {
    std::vector<bool> kept(p.rows, false);
    for (NodeId n : keep) {
        if (n >= p.rows) {
            throw NotFoundError("mask row " + std::to_string(n) + " out of range");
        }
        kept[n] = true;
    }
    Pattern out = Pattern::filled(p.labels, p.cols, -1);
    for (std::size_t r = 0; r < p.rows; ++r) {
        if (!kept[r]) continue;
        std::copy(p.cells.begin() + r * p.cols, p.cells.begin() + (r + 1) * p.cols,
                  out.cells.begin() + r * p.cols);
    }
    return out;
}

Pattern extract_rows(const Pattern& p, std::span<const NodeId> rows) {
    Pattern out;
    out.rows = rows.size();
    out.cols = p.cols;
    out.labels.reserve(rows.size());
    out.cells.resize(out.rows * out.cols);
    std::size_t dst = 0;
    for (NodeId r : rows) {
        if (r >= p.rows) throw NotFoundError("row " + std::to_string(r) + " out of range");
        out.labels.push_back(p.labels[r]);
        std::copy(p.cells.begin() + r * p.cols, p.cells.begin() + (r + 1) * p.cols,
                  out.cells.begin() + dst * out.cols);
        ++dst;
    }
    return out;
}

void save_pattern_csv(const Pattern& p, std::ostream& out) {
    for (std::size_t r = 0; r < p.rows; ++r) {
        if (r > 0) out << ',';
        out << csv_escape(p.labels[r]);
    }
    out << '\n';
    for (std::size_t t = 0; t < p.cols; ++t) {
        for (std::size_t r = 0; r < p.rows; ++r) {
            if (r > 0) out << ',';
            out << (p.at(r, t) > 0 ? "1" : "-1");
        }
        out << '\n';
    }
    if (!out) throw IoError("pattern write failed");
}

void save_pattern_csv(const Pattern& p, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    save_pattern_csv(p, out);
}

Pattern load_pattern_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw FormatError("empty pattern file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    Pattern p;
    p.labels = split_csv_line(line);
    p.rows = p.labels.size();

    std::vector<std::vector<std::int8_t>> columns; // one entry per hour
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto fields = split_csv_line(line);
        if (fields.size() != p.rows) {
            throw FormatError("pattern row has " + std::to_string(fields.size()) +
                              " fields, expected " + std::to_string(p.rows));
        }
        std::vector<std::int8_t> col(p.rows);
        for (std::size_t r = 0; r < p.rows; ++r) {
            if (fields[r] == "1" || fields[r] == "+1") col[r] = 1;
            else if (fields[r] == "-1") col[r] = -1;
            else throw FormatError("pattern entry '" + fields[r] + "' is not in {-1, 1}");
        }
        columns.push_back(std::move(col));
    }
    p.cols = columns.size();
    p.cells.resize(p.rows * p.cols);
    for (std::size_t t = 0; t < p.cols; ++t) {
        for (std::size_t r = 0; r < p.rows; ++r) {
            p.set(r, t, columns[t][r]);
        }
    }
    return p;
}

Pattern load_pattern_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    return load_pattern_csv(in);
}

} // namespace memnet
