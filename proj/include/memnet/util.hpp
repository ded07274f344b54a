#pragma once

#include <cstdarg>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace memnet {

/// Runs fn(begin, end) over [0, total) split into contiguous chunks, one per
/// worker. With threads <= 1 the call happens inline. Chunk boundaries depend
/// only on (total, threads), so workers touching disjoint output slots give
/// schedule-independent results.
void parallel_for(std::size_t total, unsigned threads,
                  const std::function<void(std::size_t, std::size_t)>& fn);

/// Splits one CSV line into fields; supports RFC-4180 double-quote escaping.
std::vector<std::string> split_csv_line(std::string_view line);

/// Quotes a field if it contains a comma, quote, or newline.
std::string csv_escape(std::string_view field);

/// Uniform integer in [0, n) from a raw 64-bit generator draw.
inline std::uint64_t bounded_rand(std::mt19937_64& rng, std::uint64_t n) {
    return rng() % n; // modulo bias irrelevant for our n << 2^64
}

/// Uniform double in [0, 1).
inline double canonical(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Fisher-Yates index shuffle with an explicit generator (stable across
/// standard libraries, unlike std::shuffle).
std::vector<std::uint32_t> shuffled_indices(std::size_t n, std::mt19937_64& rng);

struct MeanStd {
    double mean = 0.0;
    double stddev = 0.0; // population form
};

MeanStd mean_std(const std::vector<double>& xs);

namespace log {

enum class Level { error = 0, warn = 1, info = 2, debug = 3 };

/// Current level, read once from MEMNET_LOG (error|warn|info|debug).
Level level();

void write(Level lvl, const char* fmt, ...);

#define MEMNET_LOG_FN(name, lvl)                                   \
    inline void name(const char* fmt, ...) {                       \
        if (level() < lvl) return;                                 \
        va_list args;                                              \
        va_start(args, fmt);                                       \
        extern void vwrite(Level, const char*, va_list);           \
        vwrite(lvl, fmt, args);                                    \
        va_end(args);                                              \
    }

MEMNET_LOG_FN(error, Level::error)
MEMNET_LOG_FN(warn, Level::warn)
MEMNET_LOG_FN(info, Level::info)
MEMNET_LOG_FN(debug, Level::debug)

#undef MEMNET_LOG_FN

} // namespace log

} // namespace memnet
