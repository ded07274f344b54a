#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace memnet {

/// Half-open hour range [start_hour, end_hour) relative to a graph's grid.
struct TimeWindow {
    std::int64_t start_hour = 0;
    std::int64_t end_hour = 0;

    std::int64_t length() const { return end_hour - start_hour; }

    bool operator==(const TimeWindow&) const = default;
};

/// Throws RangeError unless 0 <= start < end <= horizon.
void check_window(const TimeWindow& w, std::int64_t horizon);

/// Days since 1970-01-01 for a proleptic Gregorian civil date.
std::int64_t days_from_civil(int year, unsigned month, unsigned day);

/// Inverse of days_from_civil.
void civil_from_days(std::int64_t days, int& year, unsigned& month, unsigned& day);

/// Hours since the Unix epoch for a civil date + hour-of-day (UTC).
std::int64_t epoch_hours(int year, unsigned month, unsigned day, unsigned hour);

/// Parses "YYYY-MM-DD[T ]HH[:MM[:SS]][Z]" to hours since the epoch.
/// Minutes/seconds below the hour are truncated. Throws FormatError.
std::int64_t parse_iso_hour(std::string_view text);

/// Formats an epoch-hour count as "YYYY-MM-DDTHH:00:00Z".
std::string format_iso_hour(std::int64_t hours);

/// Hour window of calendar month (year, month) intersected with a grid that
/// starts at grid_start (epoch hours) and spans `horizon` hours.
/// Throws RangeError when the intersection is empty.
TimeWindow month_window(std::int64_t grid_start, std::int64_t horizon, int year, unsigned month);

} // namespace memnet
