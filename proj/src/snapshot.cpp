#include "memnet/snapshot.hpp"

#include <cstring>
#include <fstream>

#include "memnet/errors.hpp"

namespace memnet {

namespace {

constexpr char kMagic[8] = {'M', 'N', 'E', 'T', 'S', 'N', 'P', '1'};

template <typename T>
void put(std::ostream& out, T value) {
    out.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <typename T>
T get(std::istream& in) {
    T value{};
    in.read(reinterpret_cast<char*>(&value), sizeof(T));
    if (!in) throw IoError("truncated snapshot");
    return value;
}

} // namespace

void save_snapshot(const TemporalGraph& g, std::ostream& out) {
    out.write(kMagic, sizeof(kMagic));
    put<std::uint64_t>(out, g.node_count());
    put<std::uint64_t>(out, g.edge_count());
    put<std::uint64_t>(out, static_cast<std::uint64_t>(g.horizon()));
    put<std::int64_t>(out, g.start_epoch_hour());
    for (const auto& label : g.labels()) {
        put<std::uint32_t>(out, static_cast<std::uint32_t>(label.size()));
        out.write(label.data(), static_cast<std::streamsize>(label.size()));
    }
    for (const auto& e : g.edges()) {
        put<std::uint32_t>(out, e.a);
        put<std::uint32_t>(out, e.b);
        put<double>(out, e.weight);
    }
    for (std::size_t n = 0; n < g.node_count(); ++n) {
        const auto& s = g.series(static_cast<NodeId>(n));
        out.write(reinterpret_cast<const char*>(s.data()),
                  static_cast<std::streamsize>(s.size() * sizeof(std::uint32_t)));
    }
    if (!out) throw IoError("snapshot write failed");
}

void save_snapshot(const TemporalGraph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    save_snapshot(g, out);
}

TemporalGraph load_snapshot(std::istream& in) {
    char magic[8];
    in.read(magic, sizeof(magic));
    if (!in || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0) {
        throw FormatError("not a graph snapshot (bad magic)");
    }
    const auto n = get<std::uint64_t>(in);
    const auto m = get<std::uint64_t>(in);
    const auto horizon = get<std::uint64_t>(in);
    const auto start = get<std::int64_t>(in);

    std::vector<std::string> labels(n);
    for (auto& label : labels) {
        const auto len = get<std::uint32_t>(in);
        label.resize(len);
        in.read(label.data(), len);
        if (!in) throw IoError("truncated snapshot");
    }
    std::vector<Edge> edges(m);
    for (auto& e : edges) {
        e.a = get<std::uint32_t>(in);
        e.b = get<std::uint32_t>(in);
        e.weight = get<double>(in);
    }
    std::vector<std::vector<std::uint32_t>> series(n, std::vector<std::uint32_t>(horizon));
    for (auto& s : series) {
        in.read(reinterpret_cast<char*>(s.data()),
                static_cast<std::streamsize>(horizon * sizeof(std::uint32_t)));
        if (!in) throw IoError("truncated snapshot");
    }
    return TemporalGraph(std::move(labels), std::move(series), std::move(edges), start);
}

TemporalGraph load_snapshot(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    return load_snapshot(in);
}

} // namespace memnet
