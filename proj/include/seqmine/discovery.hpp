#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdio>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "seqmine/error.hpp"
#include "seqmine/log.hpp"
#include "seqmine/units.hpp"

namespace seqmine {

// ---------------------------------------------------------------------------
// Variants
// ---------------------------------------------------------------------------

/// Cases sharing one exact activity sequence.
struct Variant {
    std::vector<std::string> sequence;
    std::vector<std::string> case_ids;
    std::size_t case_count = 0;
    Duration min_case_duration{0};
    FracDuration median_case_duration{0};
    Duration max_case_duration{0};
};

/// Most common variant first; equal counts keep the order of their first case in the log.
inline std::vector<Variant> extract_variants(const EventLog& log) {
    std::vector<Variant> variants;
    std::vector<std::vector<Duration>> durations;
    std::map<std::vector<std::string>, std::size_t> slot;

    for (const auto& t : log.traces()) {
        auto seq = t.activities();
        auto [it, inserted] = slot.emplace(seq, variants.size());
        if (inserted) {
            variants.push_back(Variant{std::move(seq), {}, 0, {}, {}, {}});
            durations.emplace_back();
        }
        variants[it->second].case_ids.push_back(t.case_id);
        durations[it->second].push_back(case_duration(t));
    }
    for (std::size_t i = 0; i < variants.size(); ++i) {
        auto& v = variants[i];
        v.case_count = v.case_ids.size();
        const auto [lo, hi] = std::minmax_element(durations[i].begin(), durations[i].end());
        v.min_case_duration = *lo;
        v.max_case_duration = *hi;
        v.median_case_duration = detail::median_of(durations[i]);
    }
    std::stable_sort(variants.begin(), variants.end(),
                     [](const Variant& a, const Variant& b) { return a.case_count > b.case_count; });
    return variants;
}

// ---------------------------------------------------------------------------
// Directly-follows graph
// ---------------------------------------------------------------------------

enum class NodeKind { start, activity, end };

/// A DFG node: an activity, or one of the synthetic START / END nodes.
/// Orders as START < activities (by name) < END.
struct DfgNode {
    NodeKind kind = NodeKind::activity;
    std::string activity;

    static DfgNode start() { return {NodeKind::start, {}}; }
    static DfgNode end() { return {NodeKind::end, {}}; }
    static DfgNode of(std::string name) { return {NodeKind::activity, std::move(name)}; }

    bool synthetic() const { return kind != NodeKind::activity; }
    std::string label() const {
        switch (kind) {
            case NodeKind::start: return "START";
            case NodeKind::end: return "END";
            default: return activity;
        }
    }

    friend auto operator<=>(const DfgNode&, const DfgNode&) = default;
    friend bool operator==(const DfgNode&, const DfgNode&) = default;
};

struct DfgEdge {
    DfgNode from;
    DfgNode to;
    std::size_t frequency = 0;
    Duration total_duration{0};
    Duration min_duration{0};
    Duration max_duration{0};

    FracDuration mean_duration() const {
        if (frequency == 0) return FracDuration{0};
        return FracDuration{static_cast<double>(total_duration.count()) / static_cast<double>(frequency)};
    }
    bool synthetic() const { return from.synthetic() || to.synthetic(); }
};

struct DirectlyFollowsGraph {
    std::map<std::string, std::size_t> nodes;  // activity -> absolute frequency
    std::vector<DfgEdge> edges;                // sorted by (from, to)
    std::size_t trace_count = 0;

    const DfgEdge* find(const DfgNode& from, const DfgNode& to) const {
        auto it = std::lower_bound(edges.begin(), edges.end(), std::pair{from, to}, [](const DfgEdge& e, const auto& key) {
            return std::tie(e.from, e.to) < std::tie(key.first, key.second);
        });
        if (it == edges.end() || it->from != from || it->to != to) return nullptr;
        return &*it;
    }
};

/// Counts every consecutive pair inside each trace and accumulates the gap between them.
/// START/END edges mark trace boundaries and carry no duration.
inline DirectlyFollowsGraph build_dfg(const EventLog& log) {
    std::map<std::pair<DfgNode, DfgNode>, DfgEdge> acc;
    auto bump = [&acc](DfgNode from, DfgNode to, Duration gap) {
        auto [it, inserted] = acc.try_emplace({from, to});
        DfgEdge& e = it->second;
        if (inserted) {
            e.from = std::move(from);
            e.to = std::move(to);
            e.min_duration = gap;
            e.max_duration = gap;
        }
        ++e.frequency;
        e.total_duration += gap;
        e.min_duration = std::min(e.min_duration, gap);
        e.max_duration = std::max(e.max_duration, gap);
    };

    DirectlyFollowsGraph dfg;
    dfg.trace_count = log.case_count();
    for (const auto& t : log.traces()) {
        const auto& ev = t.events;
        bump(DfgNode::start(), DfgNode::of(ev.front().activity), Duration{0});
        for (std::size_t i = 0; i < ev.size(); ++i) {
            ++dfg.nodes[ev[i].activity];
            if (i + 1 < ev.size())
                bump(DfgNode::of(ev[i].activity), DfgNode::of(ev[i + 1].activity), ev[i + 1].timestamp - ev[i].timestamp);
        }
        bump(DfgNode::of(ev.back().activity), DfgNode::end(), Duration{0});
    }
    dfg.edges.reserve(acc.size());
    for (auto& [key, edge] : acc) dfg.edges.push_back(std::move(edge));
    return dfg;
}

/// Throws InvariantError unless inflow = node frequency = outflow for every activity and the
/// START and END edges each account for every trace.
inline void check_conservation(const DirectlyFollowsGraph& dfg) {
    std::map<std::string, std::size_t> in, out;
    std::size_t from_start = 0, to_end = 0;
    for (const auto& e : dfg.edges) {
        if (e.frequency == 0) throw InvariantError("DFG edge with zero frequency");
        if (e.from.kind == NodeKind::start) from_start += e.frequency;
        else out[e.from.activity] += e.frequency;
        if (e.to.kind == NodeKind::end) to_end += e.frequency;
        else in[e.to.activity] += e.frequency;
    }
    if (from_start != dfg.trace_count || to_end != dfg.trace_count)
        throw InvariantError("START/END edge frequencies do not match the trace count");
    for (const auto& [activity, freq] : dfg.nodes)
        if (in[activity] != freq || out[activity] != freq)
            throw InvariantError("flow of activity '" + activity + "' is not conserved");
}

// ---------------------------------------------------------------------------
// Bottlenecks
// ---------------------------------------------------------------------------

enum class BottleneckMode { total, mean, max };

inline FracDuration edge_score(const DfgEdge& e, BottleneckMode mode) {
    switch (mode) {
        case BottleneckMode::total: return FracDuration{e.total_duration};
        case BottleneckMode::mean: return e.mean_duration();
        default: return FracDuration{e.max_duration};
    }
}

inline const char* mode_name(BottleneckMode mode) {
    switch (mode) {
        case BottleneckMode::total: return "total";
        case BottleneckMode::mean: return "mean";
        default: return "max";
    }
}

struct BottleneckEntry {
    DfgEdge edge;
    FracDuration score{0};
    bool flagged = false;
};

struct BottleneckReport {
    BottleneckMode mode = BottleneckMode::total;
    std::vector<BottleneckEntry> entries;
    double flag_percentile = 95.0;
    FracDuration flag_threshold{0};
    std::string threshold;  // human-readable description of the flag rule
};

namespace detail {

// Linear interpolation between closest ranks.
inline double percentile(std::vector<double> values, double p) {
    if (values.empty()) return 0.0;
    std::sort(values.begin(), values.end());
    double pos = p / 100.0 * static_cast<double>(values.size() - 1);
    auto lo = static_cast<std::size_t>(std::floor(pos));
    auto hi = std::min(lo + 1, values.size() - 1);
    return values[lo] + (pos - static_cast<double>(lo)) * (values[hi] - values[lo]);
}

}  // namespace detail

/// Ranks activity-to-activity edges by the chosen idle-time statistic, descending.
/// Ties go to the more frequent edge, then to (from, to) order. An edge is flagged when its
/// score reaches the `flag_percentile` of all edge scores.
inline BottleneckReport rank_bottlenecks(const DirectlyFollowsGraph& dfg, BottleneckMode mode, std::size_t top_n,
                                         double flag_percentile = 95.0) {
    if (top_n < 1) throw std::invalid_argument("top_n must be at least 1");
    if (flag_percentile < 0.0 || flag_percentile > 100.0) throw std::invalid_argument("flag percentile outside [0, 100]");

    BottleneckReport report;
    report.mode = mode;
    report.flag_percentile = flag_percentile;

    std::vector<double> scores;
    for (const auto& e : dfg.edges) {
        if (e.synthetic()) continue;
        auto s = edge_score(e, mode);
        report.entries.push_back({e, s, false});
        scores.push_back(s.count());
    }
    report.flag_threshold = FracDuration{detail::percentile(scores, flag_percentile)};

    std::sort(report.entries.begin(), report.entries.end(), [](const BottleneckEntry& a, const BottleneckEntry& b) {
        if (a.score != b.score) return a.score > b.score;
        if (a.edge.frequency != b.edge.frequency) return a.edge.frequency > b.edge.frequency;
        return std::tie(a.edge.from, a.edge.to) < std::tie(b.edge.from, b.edge.to);
    });
    if (report.entries.size() > top_n) report.entries.resize(top_n);
    for (auto& entry : report.entries) entry.flagged = !scores.empty() && entry.score >= report.flag_threshold;

    char buf[96];
    std::snprintf(buf, sizeof buf, "%s score >= p%g of %zu edge scores", mode_name(mode), flag_percentile, scores.size());
    report.threshold = buf;
    return report;
}

// ---------------------------------------------------------------------------
// DOT export
// ---------------------------------------------------------------------------

enum class MapMode { frequency, total, mean, max };

namespace detail {

inline std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        if (c == '\n') {
            out += "\\n";
            continue;
        }
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

inline std::string dot_id(const DfgNode& n) {
    switch (n.kind) {
        case NodeKind::start: return "\"__start__\"";
        case NodeKind::end: return "\"__end__\"";
        default: return dot_quote(n.activity);
    }
}

}  // namespace detail

/// Graphviz digraph of the DFG. Edge width grows with log2 of relative frequency.
inline std::string export_dot(const DirectlyFollowsGraph& dfg, MapMode mode = MapMode::frequency,
                              TimeUnit unit = TimeUnit::automatic) {
    std::size_t max_freq = 0;
    for (const auto& e : dfg.edges) max_freq = std::max(max_freq, e.frequency);

    std::string out = "digraph process {\n";
    out += "  rankdir=TB;\n";
    out += "  node [shape=box, style=rounded];\n";
    out += "  \"__start__\" [label=\"START\", shape=circle];\n";
    for (const auto& [activity, freq] : dfg.nodes)
        out += "  " + detail::dot_quote(activity) + " [label=" + detail::dot_quote(activity + "\n" + std::to_string(freq)) + "];\n";
    out += "  \"__end__\" [label=\"END\", shape=doublecircle];\n";

    char width[32];
    for (const auto& e : dfg.edges) {
        std::string label;
        if (mode == MapMode::frequency) {
            label = std::to_string(e.frequency);
        } else if (!e.synthetic()) {
            auto bm = mode == MapMode::total ? BottleneckMode::total : mode == MapMode::mean ? BottleneckMode::mean : BottleneckMode::max;
            label = humanize_duration(edge_score(e, bm), unit);
        }
        double pen = 1.0 + 3.0 * std::log2(1.0 + static_cast<double>(e.frequency) / static_cast<double>(max_freq));
        std::snprintf(width, sizeof width, "%.3f", pen);
        out += "  " + detail::dot_id(e.from) + " -> " + detail::dot_id(e.to) + " [label=" + detail::dot_quote(label) +
               ", penwidth=" + width + (e.synthetic() ? ", style=dashed" : "") + "];\n";
    }
    out += "}\n";
    return out;
}

}  // namespace seqmine
