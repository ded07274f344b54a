#include "memnet/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <istream>

#include "memnet/errors.hpp"
#include "memnet/util.hpp"

namespace memnet {

namespace {

void strip_cr(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
}

bool parse_count(const std::string& field, std::uint32_t& out) {
    auto [p, ec] = std::from_chars(field.data(), field.data() + field.size(), out);
    return ec == std::errc{} && p == field.data() + field.size();
}

} // namespace

EdgeParseResult parse_edges(std::istream& in) {
    EdgeParseResult res;
    std::string line;
    std::size_t data_lines = 0;
    while (std::getline(in, line)) {
        strip_cr(line);
        if (line.empty() || line.front() == '#') continue;
        ++data_lines;
        const auto tab = line.find('\t');
        if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
            ++res.malformed;
            continue;
        }
        std::string src = line.substr(0, tab);
        std::string dst = line.substr(tab + 1);
        if (src.empty() || dst.empty()) {
            ++res.malformed;
            continue;
        }
        if (src == dst) {
            ++res.self_loops_dropped;
            continue;
        }
        res.records.push_back({std::move(src), std::move(dst)});
    }
    if (in.bad()) throw IoError("edge stream read failed");
    if (data_lines > 0 && res.malformed * 2 > data_lines) {
        throw FormatError("more than half of the edge lines are malformed (" +
                          std::to_string(res.malformed) + "/" + std::to_string(data_lines) + ")");
    }
    return res;
}

VisitParseResult parse_visits(std::istream& in, const TimeGrid& grid) {
    if (grid.hours < 0) throw RangeError("negative grid length");
    VisitParseResult res;
    std::string line;
    while (std::getline(in, line)) {
        strip_cr(line);
        if (line.empty() || line.front() == '#') continue;
        const auto fields = split_csv_line(line);
        if (fields.size() != 3) {
            ++res.malformed;
            continue;
        }
        std::int64_t hour;
        try {
            hour = parse_iso_hour(fields[1]);
        } catch (const FormatError&) {
            ++res.malformed;
            continue;
        }
        std::uint32_t count;
        if (!parse_count(fields[2], count) || fields[0].empty()) {
            ++res.malformed;
            continue;
        }
        const std::int64_t offset = hour - grid.start_epoch_hour;
        if (offset < 0 || offset >= grid.hours) {
            ++res.out_of_grid;
            continue;
        }
        auto [it, fresh] = res.series.try_emplace(fields[0]);
        if (fresh) it->second.assign(static_cast<std::size_t>(grid.hours), 0);
        it->second[static_cast<std::size_t>(offset)] += count; // duplicates sum
    }
    if (in.bad()) throw IoError("visit stream read failed");
    return res;
}

TemporalGraph build_graph(
    const std::vector<EdgeRecord>& edge_records,
    const std::unordered_map<std::string, std::vector<std::uint32_t>>& series_by_label,
    const TimeGrid& grid) {
    std::vector<std::string> labels;
    std::unordered_map<std::string, NodeId> id_of;
    auto intern = [&](const std::string& label) {
        auto [it, fresh] = id_of.try_emplace(label, static_cast<NodeId>(labels.size()));
        if (fresh) labels.push_back(label);
        return it->second;
    };

    std::vector<Edge> edges;
    std::unordered_map<std::uint64_t, bool> seen;
    for (const auto& rec : edge_records) {
        if (rec.src == rec.dst) continue;
        const NodeId u = intern(rec.src);
        const NodeId v = intern(rec.dst);
        const NodeId a = std::min(u, v), b = std::max(u, v);
        const std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | b;
        if (seen.emplace(key, true).second) {
            edges.push_back({a, b, 0.0});
        }
    }
    if (labels.empty()) throw EmptyInputError("no nodes: edge list yields an empty graph");

    std::vector<std::vector<std::uint32_t>> series;
    series.reserve(labels.size());
    for (const auto& label : labels) {
        auto it = series_by_label.find(label);
        if (it != series_by_label.end()) {
            if (static_cast<std::int64_t>(it->second.size()) != grid.hours) {
                throw ShapeError("series for '" + label + "' does not match the grid length");
            }
            series.push_back(it->second);
        } else {
            series.emplace_back(static_cast<std::size_t>(grid.hours), 0);
        }
    }
    return TemporalGraph(std::move(labels), std::move(series), std::move(edges),
                         grid.start_epoch_hour);
}

TemporalGraph filter_min_visits(const TemporalGraph& graph, std::uint32_t threshold) {
    std::vector<bool> keep(graph.node_count(), false);
    for (std::size_t n = 0; n < graph.node_count(); ++n) {
        const auto& s = graph.series(static_cast<NodeId>(n));
        keep[n] = std::any_of(s.begin(), s.end(),
                              [threshold](std::uint32_t v) { return v > threshold; });
    }
    return graph.induced_subgraph(keep).graph;
}

} // namespace memnet
