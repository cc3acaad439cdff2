#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "seqmine/clustering.hpp"
#include "seqmine/csv.hpp"
#include "seqmine/discovery.hpp"
#include "seqmine/error.hpp"
#include "seqmine/log.hpp"
#include "seqmine/mxml.hpp"
#include "seqmine/report.hpp"
#include "seqmine/testkit.hpp"
#include "seqmine/units.hpp"

namespace seqmine::cli {

enum ExitCode : int { ok = 0, usage_error = 1, parse_error = 2, internal_error = 3 };

/// Every knob of a run, fully resolved before anything executes.
struct RunConfig {
    std::string command;
    std::vector<std::string> inputs;
    std::string input_format = "auto";  // auto | csv | mxml
    CsvMapping mapping;
    std::vector<std::string> lifecycle{"complete"};
    bool strict = false;

    report::Format output = report::Format::text;
    TimeUnit unit = TimeUnit::automatic;
    std::string mode;  // bottlenecks: total|mean|max, map: frequency|total|mean|max
    std::size_t top_n = 10;
    double flag_percentile = 95.0;

    FitOptions fit;
    std::optional<double> tau;

    std::string out_dir = ".";
    std::string out_file;  // empty: stdout
    std::string truth_file;
};

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write '" + path + "'");
    out << content;
}

inline bool looks_like_mxml(const std::string& path) {
    auto ext = std::filesystem::path(path).extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return ext == ".mxml" || ext == ".xml";
}

inline void warn_rejections(const std::string& path, const ParseReport& report, std::ostream& err) {
    if (report.rows_rejected == 0) return;
    err << "warning: " << path << ": " << report.rows_rejected << " row(s) rejected, " << report.events_parsed
        << " event(s) parsed\n";
    for (const auto& issue : report.first_errors) err << "  " << issue.locator << ": " << issue.message << "\n";
}

inline EventLog load_log(const RunConfig& cfg, std::ostream& err) {
    if (cfg.inputs.empty()) throw ConfigError("no input file given");
    std::vector<Event> events;
    std::set<std::string> lifecycle(cfg.lifecycle.begin(), cfg.lifecycle.end());
    for (const auto& path : cfg.inputs) {
        std::string text = read_file(path);
        bool mxml = cfg.input_format == "mxml" || (cfg.input_format == "auto" && looks_like_mxml(path));
        ParseResult parsed = mxml ? parse_mxml(text, lifecycle, cfg.strict) : parse_csv(text, cfg.mapping, cfg.strict);
        warn_rejections(path, parsed.report, err);
        for (const auto& t : parsed.log.traces())
            for (const auto& e : t.events) events.push_back(e);
    }
    return build_log(std::move(events));
}

inline void emit(const RunConfig& cfg, const std::string& content, std::ostream& out) {
    if (cfg.out_file.empty())
        out << content;
    else
        write_file(cfg.out_file, content);
}

inline BottleneckMode bottleneck_mode(const std::string& mode) {
    if (mode.empty() || mode == "total") return BottleneckMode::total;
    if (mode == "mean") return BottleneckMode::mean;
    if (mode == "max") return BottleneckMode::max;
    throw ConfigError("bottleneck mode must be total, mean or max");
}

inline MapMode map_mode(const std::string& mode) {
    if (mode.empty() || mode == "frequency") return MapMode::frequency;
    if (mode == "total") return MapMode::total;
    if (mode == "mean") return MapMode::mean;
    if (mode == "max") return MapMode::max;
    throw ConfigError("map mode must be frequency, total, mean or max");
}

inline int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto& cmd = cfg.command;

    if (cmd == "gen") {
        if (cfg.inputs.size() != 1) throw ConfigError("gen takes exactly one generator spec file");
        auto spec = testkit::parse_generator_spec(read_file(cfg.inputs.front()));
        auto labeled = testkit::generate(spec);
        emit(cfg, write_csv(labeled.log), out);
        if (!cfg.truth_file.empty()) {
            std::string truth = "case_id,cluster\n";
            for (const auto& t : labeled.log.traces()) truth += t.case_id + "," + std::to_string(labeled.truth.at(t.case_id)) + "\n";
            write_file(cfg.truth_file, truth);
        }
        return ok;
    }

    EventLog log = load_log(cfg, err);

    if (cmd == "stats") {
        emit(cfg, report::render_stats(log_statistics(log), cfg.output, cfg.unit), out);
    } else if (cmd == "frequency") {
        emit(cfg, report::render_frequency(activity_frequency(log), cfg.output), out);
    } else if (cmd == "variants") {
        emit(cfg, report::render_variants(extract_variants(log), cfg.output, cfg.unit), out);
    } else if (cmd == "map") {
        auto dfg = build_dfg(log);
        check_conservation(dfg);
        emit(cfg, export_dot(dfg, map_mode(cfg.mode), cfg.unit), out);
    } else if (cmd == "bottlenecks") {
        auto dfg = build_dfg(log);
        check_conservation(dfg);
        auto ranked = rank_bottlenecks(dfg, bottleneck_mode(cfg.mode), cfg.top_n, cfg.flag_percentile);
        emit(cfg, report::render_bottlenecks(ranked, cfg.output, cfg.unit), out);
    } else if (cmd == "cluster" || cmd == "split") {
        auto result = fit(log, cfg.fit);
        check_result(result);
        auto parts = split_log(log, result, cfg.tau);
        auto summaries = summarize_clusters(parts);
        if (cmd == "cluster") {
            emit(cfg, report::render_clusters(result, summaries, {cfg.fit, cfg.tau}, cfg.output, cfg.unit), out);
            return ok;
        }
        std::filesystem::create_directories(cfg.out_dir);
        std::size_t total = 0;
        for (std::size_t c = 0; c < parts.size(); ++c) {
            auto path = (std::filesystem::path(cfg.out_dir) / ("cluster_" + std::to_string(c) + ".csv")).string();
            write_file(path, write_csv(parts[c]));
            out << path << "  " << parts[c].case_count() << " cases  " << parts[c].event_count() << " events\n";
            total += parts[c].event_count();
        }
        out << "total  " << total << " events (log has " << log.event_count() << ")\n";
    } else {
        throw ConfigError("unknown command '" + cmd + "'");
    }
    return ok;
}

}  // namespace detail

/// Runs one command line. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Event-log analytics and Markov-chain sequence clustering", "seqmine"};
    app.require_subcommand(1, 1);
    app.set_config("--config", "", "Read flag values from a key=value file; command-line flags win");

    RunConfig cfg;
    std::string format = "text", unit = "auto", delimiter = ",";
    double tau = 0.0;

    app.add_option("-i,--input", cfg.inputs, "Input event log(s)");
    app.add_option("--format", cfg.input_format, "Input format")->check(CLI::IsMember({"auto", "csv", "mxml"}));
    app.add_option("--case-column", cfg.mapping.case_column, "CSV column holding the case id");
    app.add_option("--activity-column", cfg.mapping.activity_column, "CSV column holding the activity");
    app.add_option("--timestamp-column", cfg.mapping.timestamp_column, "CSV column holding the timestamp");
    app.add_option("--timestamp-format", cfg.mapping.timestamp_format, "rfc3339 or a strftime pattern");
    app.add_option("--delimiter", delimiter, "CSV field delimiter (one character)");
    app.add_option("--lifecycle", cfg.lifecycle, "MXML EventType values to keep");
    app.add_flag("--strict", cfg.strict, "Abort on the first bad row");
    app.add_option("--output", format, "Report format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--unit", unit, "Duration unit")
        ->check(CLI::IsMember({"auto", "secs", "mins", "hours", "days", "weeks", "months", "years"}));
    app.add_option("--mode", cfg.mode, "bottlenecks: total|mean|max; map: frequency|total|mean|max");
    app.add_option("--top", cfg.top_n, "Number of bottleneck edges to list")->check(CLI::PositiveNumber);
    app.add_option("--flag-percentile", cfg.flag_percentile, "Flag edges scoring at or above this percentile")
        ->check(CLI::Range(0.0, 100.0));
    app.add_option("-k,--clusters", cfg.fit.k, "Number of clusters")->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.fit.seed, "Random seed");
    app.add_option("--alpha", cfg.fit.alpha, "Add-alpha smoothing pseudo-count")->check(CLI::NonNegativeNumber);
    auto* tau_opt = app.add_option("--tau", tau, "Posterior threshold for overlapping clusters, in (0, 1]");
    app.add_option("--restarts", cfg.fit.restarts, "Random restarts")->check(CLI::PositiveNumber);
    app.add_option("--max-iter", cfg.fit.max_iter, "Iteration cap per restart")->check(CLI::PositiveNumber);
    app.add_option("--tol", cfg.fit.tol, "Relative objective tolerance")->check(CLI::NonNegativeNumber);
    bool no_refine = false;
    app.add_flag("--no-refine", no_refine, "Skip single-case moves after convergence (faster on large logs)");
    app.add_option("-d,--out-dir", cfg.out_dir, "Directory for split output");
    app.add_option("-o,--out", cfg.out_file, "Write the report to this file instead of stdout");
    app.add_option("--truth", cfg.truth_file, "gen: also write case_id,cluster labels here");

    const std::vector<std::pair<const char*, const char*>> commands{
        {"stats", "Log statistics"},
        {"frequency", "Activity frequency table"},
        {"variants", "Trace variants"},
        {"map", "Directly-follows graph as DOT"},
        {"bottlenecks", "Idle-time ranking of directly-follows edges"},
        {"cluster", "Markov-chain mixture clustering of cases"},
        {"split", "Write one CSV sub-log per cluster"},
        {"gen", "Generate a synthetic log from a generator spec"},
    };
    std::vector<std::string> positional;
    for (const auto& [name, help] : commands) {
        auto* sub = app.add_subcommand(name, help);
        sub->fallthrough();
        sub->add_option("inputs", positional, name == std::string("gen") ? "Generator spec file" : "Input event log(s)");
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::Success&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << "run with --help for usage\n";
        return usage_error;
    }

    try {
        cfg.command = app.get_subcommands().front()->get_name();
        cfg.inputs.insert(cfg.inputs.end(), positional.begin(), positional.end());
        if (delimiter.size() != 1) throw ConfigError("--delimiter must be a single character");
        cfg.mapping.delimiter = delimiter.front();
        cfg.mapping.validate();
        cfg.output = format == "json" ? report::Format::json : format == "csv" ? report::Format::csv : report::Format::text;
        cfg.unit = *parse_unit(unit);
        if (tau_opt->count() > 0) cfg.tau = tau;
        if (cfg.tau && !(*cfg.tau > 0.0 && *cfg.tau <= 1.0)) throw ConfigError("--tau must lie in (0, 1]");
        cfg.fit.refine = !no_refine;
        cfg.fit.validate();
        return detail::execute(cfg, out, err);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return parse_error;
    } catch (const InvariantError& e) {
        err << "internal error: " << e.what() << "\n";
        return internal_error;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return internal_error;
    }
}

}  // namespace seqmine::cli
