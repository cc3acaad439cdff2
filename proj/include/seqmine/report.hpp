#pragma once

#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "seqmine/clustering.hpp"
#include "seqmine/csv.hpp"
#include "seqmine/discovery.hpp"
#include "seqmine/log.hpp"
#include "seqmine/units.hpp"

namespace seqmine::report {

using Json = nlohmann::ordered_json;

enum class Format { text, json, csv };

namespace detail {

inline std::string fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

/// Left-aligned columns separated by two spaces.
inline std::string table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& r : rows)
        for (std::size_t c = 0; c < r.size() && c < width.size(); ++c) width[c] = std::max(width[c], r[c].size());

    auto line = [&](const std::vector<std::string>& cells) {
        std::string out;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            out += cells[c];
            if (c + 1 < cells.size()) out += std::string(width[c] - cells[c].size() + 2, ' ');
        }
        return out + "\n";
    };
    std::string out = line(header);
    for (const auto& r : rows) out += line(r);
    return out;
}

inline std::string csv_row(const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out.push_back(',');
        seqmine::detail::append_csv_field(out, cells[i]);
    }
    return out + "\n";
}

inline Json duration_json(FracDuration d, TimeUnit unit) {
    Json j;
    j["ms"] = d.count();
    j["display"] = humanize_duration(d, unit);
    return j;
}

inline Json duration_json(Duration d, TimeUnit unit) {
    Json j;
    j["ms"] = d.count();
    j["display"] = humanize_duration(d, unit);
    return j;
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace detail

// ---------------------------------------------------------------------------

inline std::string render_stats(const LogStats& s, Format fmt, TimeUnit unit) {
    if (fmt == Format::json) {
        Json j;
        j["events"] = s.event_count;
        j["cases"] = s.case_count;
        j["activities"] = s.activity_count;
        j["median_case_duration"] = detail::duration_json(s.median_case_duration, unit);
        j["mean_case_duration"] = detail::duration_json(s.mean_case_duration, unit);
        j["start"] = format_rfc3339(s.start);
        j["end"] = format_rfc3339(s.end);
        return detail::dump(j);
    }
    std::vector<std::pair<std::string, std::string>> rows{
        {"Events", std::to_string(s.event_count)},
        {"Cases", std::to_string(s.case_count)},
        {"Activities", std::to_string(s.activity_count)},
        {"Median case duration", humanize_duration(s.median_case_duration, unit)},
        {"Mean case duration", humanize_duration(s.mean_case_duration, unit)},
        {"Start", format_rfc3339(s.start)},
        {"End", format_rfc3339(s.end)},
    };
    std::string out;
    if (fmt == Format::csv) {
        out = "statistic,value,ms\n";
        for (const auto& [k, v] : rows) {
            std::string ms;
            if (k == "Median case duration") ms = detail::fixed(s.median_case_duration.count(), 1);
            if (k == "Mean case duration") ms = detail::fixed(s.mean_case_duration.count(), 3);
            out += detail::csv_row({k, v, ms});
        }
        return out;
    }
    for (const auto& [k, v] : rows) out += k + "  " + v + "\n";
    return out;
}

inline std::string render_frequency(const FrequencyTable& t, Format fmt) {
    if (fmt == Format::json) {
        Json j;
        j["events"] = t.event_count;
        j["rows"] = Json::array();
        for (const auto& r : t.rows) {
            Json row;
            row["activity"] = r.activity;
            row["frequency"] = r.absolute;
            row["relative"] = std::round(r.relative * 100.0) / 100.0;
            j["rows"].push_back(row);
        }
        return detail::dump(j);
    }
    if (fmt == Format::csv) {
        std::string out = "activity,frequency,relative\n";
        for (const auto& r : t.rows) out += detail::csv_row({r.activity, std::to_string(r.absolute), detail::fixed(r.relative, 2)});
        return out;
    }
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : t.rows) rows.push_back({r.activity, std::to_string(r.absolute), detail::fixed(r.relative, 2)});
    return detail::table({"Activity", "Frequency", "Relative frequency (%)"}, rows);
}

inline std::string render_variants(const std::vector<Variant>& variants, Format fmt, TimeUnit unit) {
    if (fmt == Format::json) {
        Json j = Json::array();
        for (std::size_t i = 0; i < variants.size(); ++i) {
            const auto& v = variants[i];
            Json row;
            row["variant"] = i + 1;
            row["cases"] = v.case_count;
            row["events"] = v.sequence.size();
            row["case_ids"] = v.case_ids;
            row["sequence"] = v.sequence;
            row["min_duration"] = detail::duration_json(v.min_case_duration, unit);
            row["median_duration"] = detail::duration_json(v.median_case_duration, unit);
            row["max_duration"] = detail::duration_json(v.max_case_duration, unit);
            j.push_back(row);
        }
        return detail::dump(j);
    }
    if (fmt == Format::csv) {
        std::string out = "variant,cases,events,min_ms,median_ms,max_ms,sequence\n";
        for (std::size_t i = 0; i < variants.size(); ++i) {
            const auto& v = variants[i];
            out += detail::csv_row({std::to_string(i + 1), std::to_string(v.case_count), std::to_string(v.sequence.size()),
                                    std::to_string(v.min_case_duration.count()), detail::fixed(v.median_case_duration.count(), 1),
                                    std::to_string(v.max_case_duration.count()), detail::join(v.sequence, ">")});
        }
        return out;
    }
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < variants.size(); ++i) {
        const auto& v = variants[i];
        rows.push_back({std::to_string(i + 1), std::to_string(v.case_count), std::to_string(v.sequence.size()),
                        humanize_duration(v.max_case_duration, unit), detail::join(v.sequence, " > ")});
    }
    return detail::table({"Variant", "Cases", "Events", "Duration", "Sequence"}, rows);
}

inline std::string render_bottlenecks(const BottleneckReport& r, Format fmt, TimeUnit unit) {
    if (fmt == Format::json) {
        Json j;
        j["mode"] = mode_name(r.mode);
        j["flag_rule"] = r.threshold;
        j["flag_threshold"] = detail::duration_json(r.flag_threshold, unit);
        j["edges"] = Json::array();
        for (std::size_t i = 0; i < r.entries.size(); ++i) {
            const auto& e = r.entries[i];
            Json row;
            row["rank"] = i + 1;
            row["from"] = e.edge.from.label();
            row["to"] = e.edge.to.label();
            row["frequency"] = e.edge.frequency;
            row["score"] = detail::duration_json(e.score, unit);
            row["total"] = detail::duration_json(e.edge.total_duration, unit);
            row["mean"] = detail::duration_json(e.edge.mean_duration(), unit);
            row["max"] = detail::duration_json(e.edge.max_duration, unit);
            row["flagged"] = e.flagged;
            j["edges"].push_back(row);
        }
        return detail::dump(j);
    }
    if (fmt == Format::csv) {
        std::string out = "rank,from,to,frequency,score_ms,total_ms,mean_ms,max_ms,flagged\n";
        for (std::size_t i = 0; i < r.entries.size(); ++i) {
            const auto& e = r.entries[i];
            out += detail::csv_row({std::to_string(i + 1), e.edge.from.label(), e.edge.to.label(), std::to_string(e.edge.frequency),
                                    detail::fixed(e.score.count(), 3), std::to_string(e.edge.total_duration.count()),
                                    detail::fixed(e.edge.mean_duration().count(), 3), std::to_string(e.edge.max_duration.count()),
                                    e.flagged ? "1" : "0"});
        }
        return out;
    }
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < r.entries.size(); ++i) {
        const auto& e = r.entries[i];
        rows.push_back({std::to_string(i + 1), e.edge.from.label(), e.edge.to.label(), std::to_string(e.edge.frequency),
                        humanize_duration(e.score, unit), e.flagged ? "*" : ""});
    }
    std::string out = std::string("Bottlenecks by ") + mode_name(r.mode) + " duration (flag: " + r.threshold + " = " +
                      humanize_duration(r.flag_threshold, unit) + ")\n";
    return out + detail::table({"Rank", "From", "To", "Frequency", "Duration", "Flag"}, rows);
}

struct ClusterParams {
    FitOptions fit;
    std::optional<double> tau;
};

inline std::string render_clusters(const ClusteringResult& result, const std::vector<ClusterSummary>& summaries,
                                   const ClusterParams& params, Format fmt, TimeUnit unit) {
    if (fmt == Format::json) {
        Json j;
        Json p;
        p["k"] = params.fit.k;
        p["seed"] = params.fit.seed;
        p["alpha"] = params.fit.alpha;
        p["restarts"] = params.fit.restarts;
        p["max_iter"] = params.fit.max_iter;
        p["tol"] = params.fit.tol;
        p["refine"] = params.fit.refine;
        p["tau"] = params.tau ? Json(*params.tau) : Json(nullptr);
        j["params"] = p;
        j["objective"] = result.objective();
        j["objective_trace"] = result.objective_trace;
        j["iterations"] = result.iterations;
        j["converged"] = result.converged;
        j["best_restart"] = result.best_restart;
        j["alphabet"] = result.model.alphabet();
        j["chains"] = Json::array();
        for (const auto& chain : result.model.chains) {
            Json c;
            c["initial"] = chain.initial;
            c["transitions"] = chain.transitions;
            j["chains"].push_back(c);
        }
        j["assignments"] = Json::array();
        for (const auto& a : result.assignments) {
            Json row;
            row["case_id"] = a.case_id;
            row["cluster"] = a.cluster;
            row["posteriors"] = a.posteriors;
            j["assignments"].push_back(row);
        }
        j["clusters"] = Json::array();
        for (std::size_t c = 0; c < summaries.size(); ++c) {
            const auto& s = summaries[c];
            Json cj;
            cj["cluster"] = c;
            cj["cases"] = s.case_count;
            cj["events"] = s.event_count;
            cj["groups"] = Json::array();
            for (const auto& g : s.groups) {
                Json gj;
                gj["instances"] = g.case_count;
                gj["case_ids"] = g.case_ids;
                gj["events_per_case"] = g.events_per_case;
                gj["max_duration"] = detail::duration_json(g.max_case_duration, unit);
                gj["sequence"] = g.sequence;
                cj["groups"].push_back(gj);
            }
            j["clusters"].push_back(cj);
        }
        return detail::dump(j);
    }
    if (fmt == Format::csv) {
        std::string out = "case_id,cluster";
        for (std::size_t c = 0; c < result.model.k(); ++c) out += ",p" + std::to_string(c);
        out += "\n";
        for (const auto& a : result.assignments) {
            std::vector<std::string> cells{a.case_id, std::to_string(a.cluster)};
            for (double p : a.posteriors) cells.push_back(detail::fixed(p, 6));
            out += detail::csv_row(cells);
        }
        return out;
    }

    std::string out;
    out += "Clusters  " + std::to_string(params.fit.k) + "\n";
    out += "Seed  " + std::to_string(params.fit.seed) + "\n";
    out += "Restarts  " + std::to_string(params.fit.restarts) + " (best " + std::to_string(result.best_restart) + ")\n";
    out += "Objective  " + detail::fixed(result.objective(), 6) + "\n";
    out += "Iterations  " + std::to_string(result.iterations) + (result.converged ? " (converged)" : " (max_iter reached)") + "\n";
    std::size_t total_events = 0;
    for (const auto& s : summaries) total_events += s.event_count;
    out += "Events over clusters  " + std::to_string(total_events) + "\n";
    for (std::size_t c = 0; c < summaries.size(); ++c) {
        const auto& s = summaries[c];
        out += "\nCluster " + std::to_string(c) + ": " + std::to_string(s.case_count) + " cases, " +
               std::to_string(s.event_count) + " events\n";
        std::vector<std::vector<std::string>> rows;
        for (const auto& g : s.groups)
            rows.push_back({std::to_string(g.case_count), detail::join(g.case_ids, ", "), std::to_string(g.events_per_case),
                            humanize_duration(g.max_case_duration, unit)});
        out += detail::table({"Instances", "Cases", "Events", "Duration"}, rows);
    }
    return out;
}

}  // namespace seqmine::report
