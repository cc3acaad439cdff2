#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "seqmine/clustering.hpp"
#include "seqmine/error.hpp"
#include "seqmine/log.hpp"
#include "seqmine/random.hpp"

namespace seqmine::testkit {

using ActivityPair = std::pair<std::string, std::string>;

/// One generating cluster: a chain plus the length distribution of its cases.
/// After min_length steps a case stops with stop_probability before each further step.
struct ClusterSpec {
    MarkovChainModel chain;
    std::size_t case_count = 1;
    double stop_probability = 0.2;
    std::size_t min_length = 1;
    std::size_t max_length = 20;
};

/// Gap between two activities: base_seconds * (1 + jitter * u), u uniform in [-1, 1).
struct DelaySpec {
    double base_seconds = 60.0;
    double jitter = 0.0;
};

struct GeneratorSpec {
    std::vector<ClusterSpec> clusters;
    std::map<ActivityPair, DelaySpec> delays;
    DelaySpec default_delay{60.0, 0.1};
    std::map<ActivityPair, double> planted_bottlenecks;  // pair -> delay multiplier
    std::uint64_t seed = 0;

    void validate() const {
        if (clusters.empty()) throw ConfigError("generator spec has no clusters");
        for (std::size_t c = 0; c < clusters.size(); ++c) {
            const auto& cl = clusters[c];
            const std::string where = "cluster " + std::to_string(c) + ": ";
            if (cl.chain.alphabet.empty()) throw ConfigError(where + "empty alphabet");
            try {
                cl.chain.validate(1e-9);
            } catch (const InvariantError& e) {
                throw ConfigError(where + e.what());
            }
            if (cl.case_count < 1) throw ConfigError(where + "case count must be at least 1");
            if (!(cl.stop_probability > 0.0 && cl.stop_probability <= 1.0))
                throw ConfigError(where + "stop probability must lie in (0, 1]");
            if (cl.min_length < 1 || cl.max_length < cl.min_length)
                throw ConfigError(where + "need 1 <= min_length <= max_length");
        }
        auto check_delay = [](const DelaySpec& d) {
            if (!(d.base_seconds > 0.0)) throw ConfigError("delays must be positive");
            if (!(d.jitter >= 0.0 && d.jitter < 1.0)) throw ConfigError("jitter must lie in [0, 1)");
        };
        check_delay(default_delay);
        for (const auto& [pair, d] : delays) check_delay(d);
        for (const auto& [pair, m] : planted_bottlenecks)
            if (!(m > 0.0)) throw ConfigError("bottleneck multiplier must be positive");
    }
};

/// A generated log and the cluster that produced each case.
struct LabeledLog {
    EventLog log;
    std::map<std::string, std::size_t> truth;
};

/// Samples every case from its cluster's chain. All randomness for a step comes from a stream
/// keyed by (seed, cluster, case, step), so output depends on nothing but the spec.
inline LabeledLog generate(const GeneratorSpec& spec) {
    spec.validate();

    LabeledLog out;
    std::vector<Trace> traces;
    std::size_t serial = 0;
    for (std::size_t c = 0; c < spec.clusters.size(); ++c) {
        const ClusterSpec& cl = spec.clusters[c];
        for (std::size_t n = 0; n < cl.case_count; ++n) {
            Trace trace{"c" + std::to_string(++serial), {}};
            Instant clock{};
            std::size_t prev = 0;
            for (std::size_t step = 0; step < cl.max_length; ++step) {
                Rng rng(derive_seed({spec.seed, c, n, step}));
                if (step >= cl.min_length && rng.uniform() < cl.stop_probability) break;

                std::size_t sym = step == 0 ? rng.categorical(cl.chain.initial) : rng.categorical(cl.chain.transitions[prev]);
                if (step > 0) {
                    ActivityPair pair{cl.chain.alphabet[prev], cl.chain.alphabet[sym]};
                    auto d = spec.delays.find(pair);
                    const DelaySpec& delay = d == spec.delays.end() ? spec.default_delay : d->second;
                    auto p = spec.planted_bottlenecks.find(pair);
                    double mult = p == spec.planted_bottlenecks.end() ? 1.0 : p->second;
                    double u = 2.0 * rng.uniform() - 1.0;
                    double secs = delay.base_seconds * mult * (1.0 + delay.jitter * u);
                    clock += Duration{std::max<std::int64_t>(1, std::llround(secs * 1000.0))};
                }
                trace.events.push_back(Event{trace.case_id, cl.chain.alphabet[sym], clock, {}});
                prev = sym;
            }
            out.truth.emplace(trace.case_id, c);
            traces.push_back(std::move(trace));
        }
    }
    out.log = EventLog::from_traces(std::move(traces));
    return out;
}

/// Fraction of cases that fall in their predicted cluster's majority truth label.
inline double purity(const std::map<std::string, std::size_t>& predicted, const std::map<std::string, std::size_t>& truth) {
    if (predicted.size() != truth.size()) throw ConfigError("prediction and truth cover different cases");
    if (predicted.empty()) throw ConfigError("purity of an empty case set");

    std::map<std::size_t, std::map<std::size_t, std::size_t>> overlap;
    for (const auto& [case_id, cluster] : predicted) {
        auto t = truth.find(case_id);
        if (t == truth.end()) throw ConfigError("case '" + case_id + "' has no truth label");
        ++overlap[cluster][t->second];
    }
    std::size_t agree = 0;
    for (const auto& [cluster, labels] : overlap) {
        std::size_t best = 0;
        for (const auto& [label, count] : labels) best = std::max(best, count);
        agree += best;
    }
    return static_cast<double>(agree) / static_cast<double>(predicted.size());
}

inline double purity(const ClusteringResult& result, const std::map<std::string, std::size_t>& truth) {
    return purity(result.hard_assignment(), truth);
}

// ---------------------------------------------------------------------------
// Flat key=value spec files
// ---------------------------------------------------------------------------

namespace detail {

inline std::string trim(std::string_view s) {
    auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

inline std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

inline double to_number(const std::string& text, const std::string& key) {
    try {
        std::size_t used = 0;
        double v = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw ConfigError(key + ": '" + text + "' is not a number");
    }
}

inline std::size_t to_count(const std::string& text, const std::string& key) {
    double v = to_number(text, key);
    if (v < 0 || v != std::floor(v)) throw ConfigError(key + ": expected a non-negative integer");
    return static_cast<std::size_t>(v);
}

inline ActivityPair to_pair(const std::string& text, const std::string& key) {
    auto parts = split(text, '>');
    if (parts.size() != 2 || parts[0].empty() || parts[1].empty()) throw ConfigError(key + ": expected FROM>TO");
    return {parts[0], parts[1]};
}

inline DelaySpec to_delay(const std::string& text, const std::string& key) {
    auto parts = split(text, ',');
    if (parts.empty() || parts.size() > 2) throw ConfigError(key + ": expected BASE_SECONDS[,JITTER]");
    DelaySpec d{to_number(parts[0], key), parts.size() == 2 ? to_number(parts[1], key) : 0.0};
    return d;
}

struct RawCluster {
    std::map<std::string, double> initial;
    std::map<std::string, std::map<std::string, double>> transitions;
    ClusterSpec spec;
};

}  // namespace detail

/// Reads a generator spec written as flat `key = value` lines:
///
///     seed = 7
///     cluster.0.cases = 20
///     cluster.0.initial = A:1
///     cluster.0.transitions = A>B:1, B>A:1
///     cluster.0.stop = 0.2
///     cluster.0.min_length = 3
///     cluster.0.max_length = 10
///     delay.default = 60, 0.1
///     delay.A>B = 30, 0.1
///     plant.B>A = 100
///
/// Weights are normalized per row. Every state a chain can reach needs a transitions row.
inline GeneratorSpec parse_generator_spec(std::string_view text) {
    GeneratorSpec spec;
    std::map<std::size_t, detail::RawCluster> raw;

    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string body = detail::trim(line);
        if (body.empty() || body[0] == '#' || body[0] == ';') continue;
        auto eq = body.find('=');
        if (eq == std::string::npos) throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
        std::string key = detail::trim(std::string_view(body).substr(0, eq));
        std::string value = detail::trim(std::string_view(body).substr(eq + 1));

        if (key == "seed") {
            spec.seed = static_cast<std::uint64_t>(detail::to_count(value, key));
        } else if (key == "delay.default") {
            spec.default_delay = detail::to_delay(value, key);
        } else if (key.rfind("delay.", 0) == 0) {
            spec.delays[detail::to_pair(key.substr(6), key)] = detail::to_delay(value, key);
        } else if (key.rfind("plant.", 0) == 0) {
            spec.planted_bottlenecks[detail::to_pair(key.substr(6), key)] = detail::to_number(value, key);
        } else if (key.rfind("cluster.", 0) == 0) {
            auto dot = key.find('.', 8);
            if (dot == std::string::npos) throw ConfigError(key + ": expected cluster.<index>.<field>");
            std::size_t index = detail::to_count(key.substr(8, dot - 8), key);
            std::string field = key.substr(dot + 1);
            auto& rc = raw[index];
            if (field == "cases") {
                rc.spec.case_count = detail::to_count(value, key);
            } else if (field == "stop") {
                rc.spec.stop_probability = detail::to_number(value, key);
            } else if (field == "min_length") {
                rc.spec.min_length = detail::to_count(value, key);
            } else if (field == "max_length") {
                rc.spec.max_length = detail::to_count(value, key);
            } else if (field == "initial") {
                for (const auto& item : detail::split(value, ',')) {
                    auto kv = detail::split(item, ':');
                    if (kv.size() != 2 || kv[0].empty()) throw ConfigError(key + ": expected NAME:WEIGHT list");
                    rc.initial[kv[0]] += detail::to_number(kv[1], key);
                }
            } else if (field == "transitions") {
                for (const auto& item : detail::split(value, ',')) {
                    auto kv = detail::split(item, ':');
                    if (kv.size() != 2) throw ConfigError(key + ": expected FROM>TO:WEIGHT list");
                    auto [from, to] = detail::to_pair(kv[0], key);
                    rc.transitions[from][to] += detail::to_number(kv[1], key);
                }
            } else {
                throw ConfigError("unknown key '" + key + "'");
            }
        } else {
            throw ConfigError("unknown key '" + key + "'");
        }
    }

    std::size_t expected = 0;
    for (auto& [index, rc] : raw) {
        if (index != expected++) throw ConfigError("cluster indices must be 0, 1, 2, ... without gaps");
        std::set<std::string> names;
        for (const auto& [a, w] : rc.initial) names.insert(a);
        for (const auto& [from, row] : rc.transitions) {
            names.insert(from);
            for (const auto& [to, w] : row) names.insert(to);
        }
        const std::string where = "cluster." + std::to_string(index);
        if (names.empty()) throw ConfigError(where + ": no initial distribution");

        MarkovChainModel& chain = rc.spec.chain;
        chain.alphabet.assign(names.begin(), names.end());
        auto normalized = [&](const std::map<std::string, double>& weights, const std::string& what) {
            std::vector<double> row(chain.alphabet.size(), 0.0);
            double total = 0.0;
            for (std::size_t i = 0; i < chain.alphabet.size(); ++i) {
                auto it = weights.find(chain.alphabet[i]);
                if (it == weights.end()) continue;
                if (it->second < 0.0) throw ConfigError(what + ": negative weight");
                total += (row[i] = it->second);
            }
            if (!(total > 0.0)) throw ConfigError(what + ": weights sum to zero");
            for (auto& p : row) p /= total;
            return row;
        };
        chain.initial = normalized(rc.initial, where + ".initial");
        for (const auto& name : chain.alphabet) {
            auto row = rc.transitions.find(name);
            if (row == rc.transitions.end()) throw ConfigError(where + ".transitions: no row for '" + name + "'");
            chain.transitions.push_back(normalized(row->second, where + ".transitions row '" + name + "'"));
        }
        spec.clusters.push_back(std::move(rc.spec));
    }
    spec.validate();
    return spec;
}

}  // namespace seqmine::testkit
