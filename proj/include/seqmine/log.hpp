#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "seqmine/error.hpp"
#include "seqmine/time.hpp"

namespace seqmine {

struct Event {
    std::string case_id;
    std::string activity;
    Instant timestamp{};
    std::map<std::string, std::string> attributes;

    friend bool operator==(const Event&, const Event&) = default;
};

/// All events of one case, ordered by timestamp (ties keep input order).
struct Trace {
    std::string case_id;
    std::vector<Event> events;

    friend bool operator==(const Trace&, const Trace&) = default;

    std::vector<std::string> activities() const {
        std::vector<std::string> out;
        out.reserve(events.size());
        for (const auto& e : events) out.push_back(e.activity);
        return out;
    }
};

/// Case duration: last timestamp minus first. Zero for single-event traces.
inline Duration case_duration(const Trace& trace) {
    if (trace.events.empty()) return Duration{0};
    return trace.events.back().timestamp - trace.events.front().timestamp;
}

/// An immutable set of traces. Traces keep the order in which their case first appeared.
class EventLog {
public:
    EventLog() = default;

    /// Adopts already-grouped traces. Throws InvariantError if they break the log invariants
    /// (duplicate or empty case ids, empty traces, decreasing timestamps, mismatched case ids).
    static EventLog from_traces(std::vector<Trace> traces) {
        EventLog log;
        for (std::size_t i = 0; i < traces.size(); ++i) {
            const Trace& t = traces[i];
            if (t.case_id.empty()) throw InvariantError("trace with empty case id");
            if (t.events.empty()) throw InvariantError("trace '" + t.case_id + "' has no events");
            if (!log.index_.emplace(t.case_id, i).second)
                throw InvariantError("duplicate case id '" + t.case_id + "'");
            for (std::size_t j = 0; j < t.events.size(); ++j) {
                const Event& e = t.events[j];
                if (e.case_id != t.case_id) throw InvariantError("event of case '" + e.case_id + "' filed under '" + t.case_id + "'");
                if (e.activity.empty()) throw InvariantError("event with empty activity in case '" + t.case_id + "'");
                if (j > 0 && e.timestamp < t.events[j - 1].timestamp)
                    throw InvariantError("trace '" + t.case_id + "' is not time-ordered");
                log.alphabet_.insert(e.activity);
            }
            log.event_count_ += t.events.size();
        }
        log.traces_ = std::move(traces);
        return log;
    }

    const std::vector<Trace>& traces() const noexcept { return traces_; }
    const std::set<std::string>& alphabet() const noexcept { return alphabet_; }
    std::size_t event_count() const noexcept { return event_count_; }
    std::size_t case_count() const noexcept { return traces_.size(); }
    bool empty() const noexcept { return traces_.empty(); }

    const Trace* find(const std::string& case_id) const {
        auto it = index_.find(case_id);
        return it == index_.end() ? nullptr : &traces_[it->second];
    }

    friend bool operator==(const EventLog& a, const EventLog& b) { return a.traces_ == b.traces_; }

private:
    std::vector<Trace> traces_;
    std::set<std::string> alphabet_;
    std::size_t event_count_ = 0;
    std::unordered_map<std::string, std::size_t> index_;
};

/// Groups events by case id and orders each trace by timestamp. Equal timestamps keep input order.
inline EventLog build_log(std::vector<Event> events) {
    std::vector<Trace> traces;
    std::unordered_map<std::string, std::size_t> slot;
    for (auto& e : events) {
        if (e.case_id.empty() || e.activity.empty())
            throw std::invalid_argument("event needs a non-empty case id and activity");
        auto [it, inserted] = slot.emplace(e.case_id, traces.size());
        if (inserted) traces.push_back(Trace{e.case_id, {}});
        traces[it->second].events.push_back(std::move(e));
    }
    for (auto& t : traces)
        std::stable_sort(t.events.begin(), t.events.end(),
                         [](const Event& a, const Event& b) { return a.timestamp < b.timestamp; });
    return EventLog::from_traces(std::move(traces));
}

namespace detail {

// Middle order statistic; mean of the two middle values for even counts.
inline FracDuration median_of(std::vector<Duration> values) {
    if (values.empty()) return FracDuration{0};
    std::sort(values.begin(), values.end());
    std::size_t n = values.size();
    if (n % 2 == 1) return FracDuration{values[n / 2]};
    return FracDuration{(static_cast<double>(values[n / 2 - 1].count()) + static_cast<double>(values[n / 2].count())) / 2.0};
}

inline FracDuration mean_of(const std::vector<Duration>& values) {
    if (values.empty()) return FracDuration{0};
    std::int64_t total = 0;
    for (auto v : values) total += v.count();
    return FracDuration{static_cast<double>(total) / static_cast<double>(values.size())};
}

}  // namespace detail

struct LogStats {
    std::size_t event_count = 0;
    std::size_t case_count = 0;
    std::size_t activity_count = 0;
    FracDuration median_case_duration{0};
    FracDuration mean_case_duration{0};
    Instant start{};
    Instant end{};
};

inline LogStats log_statistics(const EventLog& log) {
    if (log.event_count() == 0) throw EmptyLogError();

    LogStats s;
    s.event_count = log.event_count();
    s.case_count = log.case_count();
    s.activity_count = log.alphabet().size();
    s.start = log.traces().front().events.front().timestamp;
    s.end = s.start;

    std::vector<Duration> durations;
    durations.reserve(log.case_count());
    for (const auto& t : log.traces()) {
        s.start = std::min(s.start, t.events.front().timestamp);
        s.end = std::max(s.end, t.events.back().timestamp);
        durations.push_back(case_duration(t));
    }
    s.median_case_duration = detail::median_of(durations);
    s.mean_case_duration = detail::mean_of(durations);
    return s;
}

struct FrequencyRow {
    std::string activity;
    std::size_t absolute = 0;
    double relative = 0.0;  // percent, unrounded

    friend bool operator==(const FrequencyRow&, const FrequencyRow&) = default;
};

struct FrequencyTable {
    std::vector<FrequencyRow> rows;
    std::size_t event_count = 0;
};

/// Activity occurrence counts, most frequent first, ties by name.
inline FrequencyTable activity_frequency(const EventLog& log) {
    std::map<std::string, std::size_t> counts;
    for (const auto& t : log.traces())
        for (const auto& e : t.events) ++counts[e.activity];

    FrequencyTable table;
    table.event_count = log.event_count();
    for (const auto& [activity, n] : counts)
        table.rows.push_back({activity, n, 100.0 * static_cast<double>(n) / static_cast<double>(table.event_count)});
    std::stable_sort(table.rows.begin(), table.rows.end(),
                     [](const FrequencyRow& a, const FrequencyRow& b) { return a.absolute > b.absolute; });
    return table;
}

struct CaseFilter {
    std::set<std::string> case_ids;
};

/// Inclusive on both ends.
struct TimeWindow {
    Instant from{};
    Instant to{};
};

struct ActivityFilter {
    std::set<std::string> activities;
};

using FilterCriterion = std::variant<CaseFilter, TimeWindow, ActivityFilter>;

/// Keeps whole cases (CaseFilter) or individual events (TimeWindow, ActivityFilter).
/// Traces left without events are dropped.
inline EventLog filter_log(const EventLog& log, const FilterCriterion& criterion) {
    if (const auto* w = std::get_if<TimeWindow>(&criterion); w && w->from > w->to)
        throw ConfigError("time window starts after it ends");

    std::vector<Trace> kept;
    for (const auto& t : log.traces()) {
        if (const auto* c = std::get_if<CaseFilter>(&criterion)) {
            if (c->case_ids.count(t.case_id)) kept.push_back(t);
            continue;
        }
        Trace out{t.case_id, {}};
        for (const auto& e : t.events) {
            bool keep = std::visit(
                [&e](const auto& crit) -> bool {
                    using T = std::decay_t<decltype(crit)>;
                    if constexpr (std::is_same_v<T, TimeWindow>)
                        return crit.from <= e.timestamp && e.timestamp <= crit.to;
                    else if constexpr (std::is_same_v<T, ActivityFilter>)
                        return crit.activities.count(e.activity) > 0;
                    else
                        return true;
                },
                criterion);
            if (keep) out.events.push_back(e);
        }
        if (!out.events.empty()) kept.push_back(std::move(out));
    }
    return EventLog::from_traces(std::move(kept));
}

}  // namespace seqmine
