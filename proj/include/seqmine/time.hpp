#pragma once

#include <chrono>
#include <cstdint>
#include <ctime>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

namespace seqmine {

/// Timestamps are UTC instants at millisecond resolution.
using Instant = std::chrono::sys_time<std::chrono::milliseconds>;
using Duration = std::chrono::milliseconds;
/// Averages and medians of durations can fall between whole milliseconds.
using FracDuration = std::chrono::duration<double, std::milli>;

inline Instant instant_from_ms(std::int64_t ms) { return Instant{Duration{ms}}; }
inline std::int64_t to_ms(Instant t) { return t.time_since_epoch().count(); }

namespace detail {

inline bool read_digits(std::string_view s, std::size_t& pos, std::size_t count, int& out) {
    if (pos + count > s.size()) return false;
    int value = 0;
    for (std::size_t i = 0; i < count; ++i) {
        char c = s[pos + i];
        if (c < '0' || c > '9') return false;
        value = value * 10 + (c - '0');
    }
    out = value;
    pos += count;
    return true;
}

inline bool expect(std::string_view s, std::size_t& pos, char c) {
    if (pos < s.size() && s[pos] == c) {
        ++pos;
        return true;
    }
    return false;
}

inline std::optional<Instant> make_instant(int y, int mo, int d, int h, int mi, int sec, int ms) {
    using namespace std::chrono;
    year_month_day ymd{year{y}, month{static_cast<unsigned>(mo)}, day{static_cast<unsigned>(d)}};
    if (!ymd.ok() || h < 0 || h > 23 || mi < 0 || mi > 59 || sec < 0 || sec > 59) return std::nullopt;
    return sys_days{ymd} + hours{h} + minutes{mi} + seconds{sec} + milliseconds{ms};
}

// Reads ".ddd..." and returns the first three digits as milliseconds (extra digits truncated).
inline bool read_fraction(std::string_view s, std::size_t& pos, int& ms) {
    ms = 0;
    if (pos >= s.size() || (s[pos] != '.' && s[pos] != ',')) return true;
    ++pos;
    std::size_t start = pos;
    int scale = 100;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
        ms += (s[pos] - '0') * scale;
        scale /= 10;
        ++pos;
    }
    return pos > start;
}

}  // namespace detail

/// Parses RFC 3339 / ISO-8601 date-times such as `2019-01-01T01:00:00Z`,
/// `2019-01-01 01:00:00.250+02:00` or `2019-01-01T01:00`. A missing zone means UTC.
inline std::optional<Instant> parse_rfc3339(std::string_view text) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) text.remove_suffix(1);

    std::size_t pos = 0;
    int y, mo, d, h, mi, sec = 0, ms = 0;
    if (!detail::read_digits(text, pos, 4, y) || !detail::expect(text, pos, '-') ||
        !detail::read_digits(text, pos, 2, mo) || !detail::expect(text, pos, '-') ||
        !detail::read_digits(text, pos, 2, d))
        return std::nullopt;
    if (pos >= text.size() || (text[pos] != 'T' && text[pos] != 't' && text[pos] != ' ')) return std::nullopt;
    ++pos;
    if (!detail::read_digits(text, pos, 2, h) || !detail::expect(text, pos, ':') ||
        !detail::read_digits(text, pos, 2, mi))
        return std::nullopt;
    if (detail::expect(text, pos, ':')) {
        if (!detail::read_digits(text, pos, 2, sec)) return std::nullopt;
        if (!detail::read_fraction(text, pos, ms)) return std::nullopt;
    }

    std::chrono::minutes offset{0};
    if (pos < text.size()) {
        char z = text[pos];
        if (z == 'Z' || z == 'z') {
            ++pos;
        } else if (z == '+' || z == '-') {
            ++pos;
            int oh, om = 0;
            if (!detail::read_digits(text, pos, 2, oh)) return std::nullopt;
            detail::expect(text, pos, ':');
            if (pos < text.size() && !detail::read_digits(text, pos, 2, om)) return std::nullopt;
            if (oh > 23 || om > 59) return std::nullopt;
            offset = std::chrono::minutes{oh * 60 + om};
            if (z == '-') offset = -offset;
        }
    }
    if (pos != text.size()) return std::nullopt;

    auto local = detail::make_instant(y, mo, d, h, mi, sec, ms);
    if (!local) return std::nullopt;
    return *local - offset;
}

/// Parses `text` against a strftime-style pattern (`%Y-%m-%d %H:%M:%S`, `%d/%m/%Y %H:%M`...).
/// A trailing fractional-seconds part is accepted after the pattern. The result is taken as UTC.
inline std::optional<Instant> parse_with_format(std::string_view text, const std::string& format) {
    std::tm tm{};
    tm.tm_mday = 1;
    std::istringstream in{std::string(text)};
    in >> std::get_time(&tm, format.c_str());
    if (in.fail()) return std::nullopt;

    std::string rest;
    std::getline(in, rest);
    std::size_t pos = 0;
    int ms = 0;
    if (!detail::read_fraction(rest, pos, ms)) return std::nullopt;
    while (pos < rest.size() && (rest[pos] == ' ' || rest[pos] == '\t' || rest[pos] == '\r')) ++pos;
    if (pos != rest.size()) return std::nullopt;

    return detail::make_instant(tm.tm_year + 1900, tm.tm_mon + 1, tm.tm_mday, tm.tm_hour, tm.tm_min,
                                tm.tm_sec, ms);
}

/// `rfc3339` selects the built-in parser; anything else is a strftime-style pattern.
inline std::optional<Instant> parse_timestamp(std::string_view text, const std::string& format) {
    if (format == "rfc3339") return parse_rfc3339(text);
    return parse_with_format(text, format);
}

/// `YYYY-MM-DDTHH:MM:SSZ`, with `.mmm` before the zone when the instant has a millisecond part.
inline std::string format_rfc3339(Instant t) {
    using namespace std::chrono;
    auto day_point = floor<days>(t);
    year_month_day ymd{day_point};
    hh_mm_ss<milliseconds> tod{t - day_point};

    std::ostringstream out;
    out << std::setfill('0') << std::setw(4) << static_cast<int>(ymd.year()) << '-' << std::setw(2)
        << static_cast<unsigned>(ymd.month()) << '-' << std::setw(2) << static_cast<unsigned>(ymd.day()) << 'T'
        << std::setw(2) << tod.hours().count() << ':' << std::setw(2) << tod.minutes().count() << ':'
        << std::setw(2) << tod.seconds().count();
    if (auto ms = tod.subseconds().count(); ms != 0) out << '.' << std::setw(3) << ms;
    out << 'Z';
    return out.str();
}

}  // namespace seqmine
