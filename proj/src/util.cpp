#include "memnet/util.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <thread>

namespace memnet {

void parallel_for(std::size_t total, unsigned threads,
                  const std::function<void(std::size_t, std::size_t)>& fn) {
    if (total == 0) return;
    if (threads <= 1 || total == 1) {
        fn(0, total);
        return;
    }
    const std::size_t workers = std::min<std::size_t>(threads, total);
    const std::size_t chunk = (total + workers - 1) / workers;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(begin + chunk, total);
        if (begin >= end) break;
        pool.emplace_back(fn, begin, end);
    }
    for (auto& t : pool) t.join();
}

std::vector<std::string> split_csv_line(std::string_view line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur.push_back(c);
            }
        } else if (c == '"' && cur.empty()) {
            quoted = true;
        } else if (c == ',') {
            out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(std::move(cur));
    return out;
}

std::string csv_escape(std::string_view field) {
    if (field.find_first_of(",\"\n\r") == std::string_view::npos) {
        return std::string(field);
    }
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::vector<std::uint32_t> shuffled_indices(std::size_t n, std::mt19937_64& rng) {
    std::vector<std::uint32_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = static_cast<std::uint32_t>(i);
    for (std::size_t i = n; i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(bounded_rand(rng, i));
        std::swap(idx[i - 1], idx[j]);
    }
    return idx;
}

MeanStd mean_std(const std::vector<double>& xs) {
    MeanStd r;
    if (xs.empty()) return r;
    double sum = 0.0;
    for (double x : xs) sum += x;
    r.mean = sum / static_cast<double>(xs.size());
    double sq = 0.0;
    for (double x : xs) sq += (x - r.mean) * (x - r.mean);
    r.stddev = std::sqrt(sq / static_cast<double>(xs.size()));
    return r;
}

namespace log {

Level level() {
    static const Level cached = [] {
        const char* env = std::getenv("MEMNET_LOG");
        if (!env) return Level::warn;
        if (std::strcmp(env, "error") == 0) return Level::error;
        if (std::strcmp(env, "warn") == 0) return Level::warn;
        if (std::strcmp(env, "info") == 0) return Level::info;
        if (std::strcmp(env, "debug") == 0) return Level::debug;
        return Level::warn;
    }();
    return cached;
}

void vwrite(Level lvl, const char* fmt, va_list args) {
    static const char* names[] = {"error", "warn", "info", "debug"};
    std::fprintf(stderr, "[%s] ", names[static_cast<int>(lvl)]);
    std::vfprintf(stderr, fmt, args);
    std::fputc('\n', stderr);
}

void write(Level lvl, const char* fmt, ...) {
    if (level() < lvl) return;
    va_list args;
    va_start(args, fmt);
    vwrite(lvl, fmt, args);
    va_end(args);
}

} // namespace log

} // namespace memnet
