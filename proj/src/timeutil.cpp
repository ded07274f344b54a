#include "memnet/timeutil.hpp"

#include <charconv>
#include <cstdio>

#include "memnet/errors.hpp"

namespace memnet {

void check_window(const TimeWindow& w, std::int64_t horizon) {
    if (w.start_hour < 0 || w.end_hour <= w.start_hour || w.end_hour > horizon) {
        throw RangeError("invalid time window [" + std::to_string(w.start_hour) + ", " +
                         std::to_string(w.end_hour) + ") for horizon " + std::to_string(horizon));
    }
}

// Howard Hinnant's civil-date algorithms.
std::int64_t days_from_civil(int y, unsigned m, unsigned d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, int& year, unsigned& month, unsigned& day) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    day = doy - (153 * mp + 2) / 5 + 1;
    month = mp + (mp < 10 ? 3 : -9);
    year = static_cast<int>(y + (month <= 2));
}

std::int64_t epoch_hours(int year, unsigned month, unsigned day, unsigned hour) {
    return days_from_civil(year, month, day) * 24 + static_cast<std::int64_t>(hour);
}

namespace {

bool parse_uint(std::string_view s, unsigned& out) {
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && p == s.data() + s.size();
}

} // namespace

std::int64_t parse_iso_hour(std::string_view text) {
    // Accepted: YYYY-MM-DD, optionally followed by 'T' or ' ' and HH[:MM[:SS]][Z].
    if (!text.empty() && text.back() == 'Z') text.remove_suffix(1);
    if (text.size() < 10 || text[4] != '-' || text[7] != '-') {
        throw FormatError("unparsable timestamp: '" + std::string(text) + "'");
    }
    unsigned y = 0, mo = 0, d = 0, h = 0, mi = 0, se = 0;
    if (!parse_uint(text.substr(0, 4), y) || !parse_uint(text.substr(5, 2), mo) ||
        !parse_uint(text.substr(8, 2), d)) {
        throw FormatError("unparsable date: '" + std::string(text) + "'");
    }
    if (text.size() > 10) {
        if (text[10] != 'T' && text[10] != ' ') {
            throw FormatError("unparsable timestamp: '" + std::string(text) + "'");
        }
        std::string_view rest = text.substr(11);
        if (rest.size() < 2 || !parse_uint(rest.substr(0, 2), h)) {
            throw FormatError("unparsable hour: '" + std::string(text) + "'");
        }
        if (rest.size() >= 5) {
            if (rest[2] != ':' || !parse_uint(rest.substr(3, 2), mi)) {
                throw FormatError("unparsable minute: '" + std::string(text) + "'");
            }
        }
        if (rest.size() >= 8) {
            if (rest[5] != ':' || !parse_uint(rest.substr(6, 2), se)) {
                throw FormatError("unparsable second: '" + std::string(text) + "'");
            }
        }
    }
    if (mo < 1 || mo > 12 || d < 1 || d > 31 || h > 23 || mi > 59 || se > 60) {
        throw FormatError("timestamp field out of range: '" + std::string(text) + "'");
    }
    return epoch_hours(static_cast<int>(y), mo, d, h);
}

std::string format_iso_hour(std::int64_t hours) {
    std::int64_t days = hours >= 0 ? hours / 24 : (hours - 23) / 24;
    int hod = static_cast<int>(hours - days * 24);
    int y;
    unsigned m, d;
    civil_from_days(days, y, m, d);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02d:00:00Z", y, m, d, hod);
    return buf;
}

TimeWindow month_window(std::int64_t grid_start, std::int64_t horizon, int year, unsigned month) {
    if (month < 1 || month > 12) throw RangeError("month out of range");
    const std::int64_t begin = epoch_hours(year, month, 1, 0);
    const int ny = month == 12 ? year + 1 : year;
    const unsigned nm = month == 12 ? 1 : month + 1;
    const std::int64_t end = epoch_hours(ny, nm, 1, 0);
    TimeWindow w{std::max<std::int64_t>(begin - grid_start, 0),
                 std::min<std::int64_t>(end - grid_start, horizon)};
    if (w.end_hour <= w.start_hour) {
        throw RangeError("month " + std::to_string(year) + "-" + std::to_string(month) +
                         " does not intersect the grid");
    }
    return w;
}

} // namespace memnet
