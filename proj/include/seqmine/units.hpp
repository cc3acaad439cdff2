#pragma once

#include <array>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>

#include "seqmine/time.hpp"

namespace seqmine {

enum class TimeUnit { automatic, secs, mins, hours, days, weeks, months, years };

struct UnitInfo {
    TimeUnit unit;
    std::string_view name;
    double seconds;
};

/// Fixed conversions: a month is 30.44 days and a year 365.25 days.
inline constexpr std::array<UnitInfo, 7> unit_table{{
    {TimeUnit::secs, "secs", 1.0},
    {TimeUnit::mins, "mins", 60.0},
    {TimeUnit::hours, "hours", 3600.0},
    {TimeUnit::days, "days", 86400.0},
    {TimeUnit::weeks, "weeks", 7 * 86400.0},
    {TimeUnit::months, "months", 30.44 * 86400.0},
    {TimeUnit::years, "years", 365.25 * 86400.0},
}};

inline std::optional<TimeUnit> parse_unit(std::string_view name) {
    if (name == "auto") return TimeUnit::automatic;
    for (const auto& u : unit_table)
        if (u.name == name) return u.unit;
    return std::nullopt;
}

inline std::string_view unit_name(TimeUnit unit) {
    if (unit == TimeUnit::automatic) return "auto";
    for (const auto& u : unit_table)
        if (u.unit == unit) return u.name;
    return "?";
}

/// Renders a non-negative duration with one decimal in the requested unit. `automatic` picks the
/// largest unit whose value is at least 1; anything under a second is shown as whole milliseconds.
inline std::string humanize_duration(FracDuration d, TimeUnit unit = TimeUnit::automatic) {
    const double secs = d.count() / 1000.0;
    char buf[64];

    const UnitInfo* chosen = nullptr;
    if (unit == TimeUnit::automatic) {
        for (const auto& u : unit_table)
            if (secs / u.seconds >= 1.0) chosen = &u;
        if (!chosen) {
            std::snprintf(buf, sizeof buf, "%lld ms", static_cast<long long>(std::llround(d.count())));
            return buf;
        }
    } else {
        for (const auto& u : unit_table)
            if (u.unit == unit) chosen = &u;
    }
    std::snprintf(buf, sizeof buf, "%.1f %s", secs / chosen->seconds, std::string(chosen->name).c_str());
    return buf;
}

inline std::string humanize_duration(Duration d, TimeUnit unit = TimeUnit::automatic) {
    return humanize_duration(FracDuration{d}, unit);
}

}  // namespace seqmine
