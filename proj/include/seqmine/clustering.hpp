#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "seqmine/discovery.hpp"
#include "seqmine/error.hpp"
#include "seqmine/log.hpp"
#include "seqmine/random.hpp"

namespace seqmine {

// ---------------------------------------------------------------------------
// Sequences
// ---------------------------------------------------------------------------

/// A trace reduced to alphabet indices.
struct ActivitySequence {
    std::vector<std::size_t> symbols;
    std::string case_id;
};

struct EncodedLog {
    std::vector<std::string> alphabet;
    std::vector<ActivitySequence> sequences;
};

/// Encodes every trace against an explicit alphabet. Throws ConfigError if the log uses an
/// activity the alphabet lacks.
inline EncodedLog to_sequences(const EventLog& log, std::vector<std::string> alphabet) {
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < alphabet.size(); ++i) index.emplace(alphabet[i], i);

    EncodedLog out;
    out.sequences.reserve(log.case_count());
    for (const auto& t : log.traces()) {
        ActivitySequence seq{{}, t.case_id};
        seq.symbols.reserve(t.events.size());
        for (const auto& e : t.events) {
            auto it = index.find(e.activity);
            if (it == index.end()) throw ConfigError("activity '" + e.activity + "' is not in the alphabet");
            seq.symbols.push_back(it->second);
        }
        out.sequences.push_back(std::move(seq));
    }
    out.alphabet = std::move(alphabet);
    return out;
}

/// Encodes every trace; the alphabet is ordered by first appearance in the log.
inline EncodedLog to_sequences(const EventLog& log) {
    std::vector<std::string> alphabet;
    std::unordered_map<std::string, std::size_t> seen;
    for (const auto& t : log.traces())
        for (const auto& e : t.events)
            if (seen.emplace(e.activity, alphabet.size()).second) alphabet.push_back(e.activity);
    return to_sequences(log, std::move(alphabet));
}

// ---------------------------------------------------------------------------
// Markov chains
// ---------------------------------------------------------------------------

/// First-order chain: an initial distribution and a row-stochastic transition matrix,
/// transitions[i][j] = P(next = j | current = i).
struct MarkovChainModel {
    std::vector<std::string> alphabet;
    std::vector<double> initial;
    std::vector<std::vector<double>> transitions;

    std::size_t size() const { return alphabet.size(); }

    /// Throws InvariantError unless every distribution is stochastic within `tol`.
    void validate(double tol = 1e-9) const {
        const std::size_t n = alphabet.size();
        auto check = [&](const std::vector<double>& row, const std::string& what) {
            if (row.size() != n) throw InvariantError(what + " has the wrong dimension");
            double sum = 0.0;
            for (double p : row) {
                if (!(p >= 0.0 && p <= 1.0)) throw InvariantError(what + " has an entry outside [0, 1]");
                sum += p;
            }
            if (std::abs(sum - 1.0) > tol) throw InvariantError(what + " does not sum to 1");
        };
        check(initial, "initial distribution");
        if (transitions.size() != n) throw InvariantError("transition matrix has the wrong dimension");
        for (std::size_t i = 0; i < n; ++i) check(transitions[i], "transition row " + std::to_string(i));
    }
};

/// ln P(x0) + sum_i ln P(x_i | x_{i-1}) under the chain's stored parameters.
/// Returns -infinity if any factor is zero. Throws std::out_of_range for foreign symbols.
inline double sequence_log_likelihood(std::span<const std::size_t> symbols, const MarkovChainModel& chain) {
    const std::size_t n = chain.size();
    if (symbols.empty()) return 0.0;
    for (auto s : symbols)
        if (s >= n) throw std::out_of_range("symbol " + std::to_string(s) + " outside alphabet of size " + std::to_string(n));

    double ll = std::log(chain.initial[symbols[0]]);
    for (std::size_t i = 1; i < symbols.size(); ++i) ll += std::log(chain.transitions[symbols[i - 1]][symbols[i]]);
    return ll;
}

inline double sequence_log_likelihood(const ActivitySequence& x, const MarkovChainModel& chain) {
    return sequence_log_likelihood(std::span<const std::size_t>(x.symbols), chain);
}

/// K chains over one alphabet.
struct ClusterModel {
    std::vector<MarkovChainModel> chains;
    double smoothing_alpha = 0.0;

    std::size_t k() const { return chains.size(); }
    const std::vector<std::string>& alphabet() const { return chains.front().alphabet; }
};

namespace detail {

inline MarkovChainModel random_chain(const std::vector<std::string>& alphabet, std::uint64_t seed, std::uint64_t chain) {
    const std::size_t n = alphabet.size();
    MarkovChainModel m;
    m.alphabet = alphabet;
    m.transitions.reserve(n);
    for (std::size_t row = 0; row < n; ++row) {
        Rng rng(derive_seed({seed, chain, row}));
        m.transitions.push_back(rng.flat_dirichlet(n));
    }
    // The initial vector uses row index n, after the transition rows.
    Rng rng(derive_seed({seed, chain, n}));
    m.initial = rng.flat_dirichlet(n);
    return m;
}

}  // namespace detail

/// Draws every initial vector and transition row from a flat Dirichlet. Deterministic in
/// (seed, chain index, row index).
inline ClusterModel init_models(const std::vector<std::string>& alphabet, std::size_t k, std::uint64_t seed) {
    if (k < 1) throw ConfigError("cluster count must be at least 1");
    if (alphabet.empty()) throw ConfigError("alphabet is empty");
    ClusterModel model;
    model.chains.reserve(k);
    for (std::size_t c = 0; c < k; ++c) model.chains.push_back(detail::random_chain(alphabet, seed, c));
    return model;
}

// ---------------------------------------------------------------------------
// Assignment and re-estimation
// ---------------------------------------------------------------------------

struct Assignment {
    std::vector<std::size_t> hard;                // argmax cluster per sequence, ties to the lowest index
    std::vector<std::vector<double>> posteriors;  // per sequence, one entry per cluster
    std::vector<double> best_log_likelihood;      // max over clusters per sequence
    double objective = 0.0;                       // sum of best_log_likelihood
};

namespace detail {

// Summing in sorted order makes the objective independent of sequence order.
inline double ordered_sum(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    double s = 0.0;
    for (double v : values) s += v;
    return s;
}

}  // namespace detail

/// Scores each sequence under every chain and converts the log-likelihoods into posteriors
/// with uniform cluster priors. Throws AssignmentError if some sequence is impossible under all chains.
inline Assignment assign(const std::vector<ActivitySequence>& sequences, const ClusterModel& model) {
    const std::size_t k = model.k();
    Assignment out;
    out.hard.resize(sequences.size());
    out.posteriors.assign(sequences.size(), std::vector<double>(k));
    out.best_log_likelihood.resize(sequences.size());

    std::vector<double> ll(k);
    for (std::size_t s = 0; s < sequences.size(); ++s) {
        std::size_t best = 0;
        for (std::size_t c = 0; c < k; ++c) {
            ll[c] = sequence_log_likelihood(sequences[s], model.chains[c]);
            if (ll[c] > ll[best]) best = c;
        }
        const double top = ll[best];
        if (top == -std::numeric_limits<double>::infinity()) throw AssignmentError(sequences[s].case_id);

        double norm = 0.0;
        for (std::size_t c = 0; c < k; ++c) norm += (out.posteriors[s][c] = std::exp(ll[c] - top));
        for (auto& p : out.posteriors[s]) p /= norm;
        out.hard[s] = best;
        out.best_log_likelihood[s] = top;
    }
    out.objective = detail::ordered_sum(out.best_log_likelihood);
    return out;
}

namespace detail {

// Add-alpha normalization of one count row in place; a row with no mass becomes uniform.
inline void normalize_counts(std::vector<double>& counts, double alpha) {
    const std::size_t n = counts.size();
    double total = 0.0;
    for (double v : counts) total += v;
    const double denom = total + alpha * static_cast<double>(n);
    if (denom <= 0.0) {
        std::fill(counts.begin(), counts.end(), 1.0 / static_cast<double>(n));
        return;
    }
    for (auto& v : counts) v = (v + alpha) / denom;
}

}  // namespace detail

struct Reestimation {
    ClusterModel model;
    std::vector<std::size_t> reseeded;  // clusters that received no sequence and were redrawn
};

/// Add-alpha counts per cluster: initial[a] = (starts with a + alpha) / (members + alpha |S|),
/// transitions[i][j] = (i->j bigrams + alpha) / (bigrams leaving i + alpha |S|).
/// A row without data and alpha = 0 becomes uniform. Clusters without members are redrawn
/// from `reseed_seed`.
inline Reestimation reestimate(const std::vector<ActivitySequence>& sequences, const std::vector<std::size_t>& hard,
                               const std::vector<std::string>& alphabet, std::size_t k, double alpha,
                               std::uint64_t reseed_seed) {
    if (hard.size() != sequences.size()) throw std::invalid_argument("assignment does not match sequences");
    if (alpha < 0.0) throw ConfigError("smoothing alpha must be non-negative");
    const std::size_t n = alphabet.size();

    std::vector<std::size_t> members(k, 0);
    std::vector<std::vector<double>> starts(k, std::vector<double>(n, 0.0));
    std::vector<std::vector<std::vector<double>>> bigrams(k, std::vector<std::vector<double>>(n, std::vector<double>(n, 0.0)));

    for (std::size_t s = 0; s < sequences.size(); ++s) {
        const std::size_t c = hard[s];
        if (c >= k) throw std::out_of_range("cluster index out of range");
        const auto& sym = sequences[s].symbols;
        if (sym.empty()) continue;
        ++members[c];
        starts[c][sym[0]] += 1.0;
        for (std::size_t i = 1; i < sym.size(); ++i) bigrams[c][sym[i - 1]][sym[i]] += 1.0;
    }

    auto normalize = [alpha](std::vector<double>& counts) { detail::normalize_counts(counts, alpha); };

    Reestimation out;
    out.model.smoothing_alpha = alpha;
    out.model.chains.reserve(k);
    for (std::size_t c = 0; c < k; ++c) {
        if (members[c] == 0) {
            out.model.chains.push_back(detail::random_chain(alphabet, reseed_seed, c));
            out.reseeded.push_back(c);
            continue;
        }
        MarkovChainModel m;
        m.alphabet = alphabet;
        normalize(starts[c]);
        m.initial = std::move(starts[c]);
        for (auto& row : bigrams[c]) normalize(row);
        m.transitions = std::move(bigrams[c]);
        out.model.chains.push_back(std::move(m));
    }
    return out;
}

/// alpha * (sum of log parameters) over every chain: the log-density, up to a constant, of the
/// Dirichlet(alpha + 1) prior whose MAP estimate is the add-alpha rule. Zero when alpha is zero.
inline double log_prior(const ClusterModel& model, double alpha) {
    if (alpha == 0.0) return 0.0;
    double sum = 0.0;
    for (const auto& chain : model.chains) {
        for (double p : chain.initial) sum += std::log(p);
        for (const auto& row : chain.transitions)
            for (double p : row) sum += std::log(p);
    }
    return alpha * sum;
}

// ---------------------------------------------------------------------------
// Fitting
// ---------------------------------------------------------------------------

struct FitOptions {
    std::size_t k = 2;
    std::uint64_t seed = 0;
    double alpha = 0.01;
    std::size_t max_iter = 100;
    double tol = 1e-6;  // relative objective improvement
    std::size_t restarts = 10;
    bool refine = true;  // single-sequence moves after each convergence

    void validate() const {
        if (k < 1) throw ConfigError("cluster count must be at least 1");
        if (alpha < 0.0 || !std::isfinite(alpha)) throw ConfigError("smoothing alpha must be a non-negative number");
        if (max_iter < 1) throw ConfigError("max_iter must be at least 1");
        if (!(tol >= 0.0)) throw ConfigError("tolerance must be non-negative");
        if (restarts < 1) throw ConfigError("restarts must be at least 1");
    }
};

struct CaseAssignment {
    std::string case_id;
    std::size_t cluster = 0;
    std::vector<double> posteriors;
};

struct ClusteringResult {
    ClusterModel model;
    std::vector<CaseAssignment> assignments;  // log order
    std::vector<double> objective_trace;      // objective after each assignment step
    std::vector<double> penalized_trace;      // objective plus the Dirichlet(alpha + 1) log-prior of the model
    std::vector<bool> reseeded;               // per iteration: model came from a reseeding re-estimation
    std::size_t iterations = 0;
    bool converged = false;
    std::uint64_t seed = 0;
    std::size_t restarts = 0;
    std::size_t best_restart = 0;

    double objective() const { return objective_trace.empty() ? 0.0 : objective_trace.back(); }

    const CaseAssignment* find(const std::string& case_id) const {
        for (const auto& a : assignments)
            if (a.case_id == case_id) return &a;
        return nullptr;
    }

    std::map<std::string, std::size_t> hard_assignment() const {
        std::map<std::string, std::size_t> out;
        for (const auto& a : assignments) out.emplace(a.case_id, a.cluster);
        return out;
    }
};

/// Throws InvariantError if the model is not stochastic, a posterior vector does not sum to 1,
/// or a hard assignment is not the (lowest-index) posterior argmax.
inline void check_result(const ClusteringResult& r, double tol = 1e-9) {
    for (const auto& chain : r.model.chains) chain.validate(tol);
    for (const auto& a : r.assignments) {
        if (a.posteriors.size() != r.model.k()) throw InvariantError("posterior vector of wrong size");
        double sum = 0.0;
        std::size_t best = 0;
        for (std::size_t c = 0; c < a.posteriors.size(); ++c) {
            sum += a.posteriors[c];
            if (a.posteriors[c] > a.posteriors[best]) best = c;
        }
        if (std::abs(sum - 1.0) > tol) throw InvariantError("posteriors of case '" + a.case_id + "' do not sum to 1");
        if (a.posteriors[a.cluster] < a.posteriors[best])
            throw InvariantError("case '" + a.case_id + "' is not assigned to its most probable cluster");
    }
}

namespace detail {

// Sufficient statistics of one cluster and the log-parameters they imply.
struct ChainCounts {
    std::vector<double> starts;
    std::vector<std::vector<double>> bigrams;

    explicit ChainCounts(std::size_t n) : starts(n, 0.0), bigrams(n, std::vector<double>(n, 0.0)) {}

    void add(const std::vector<std::size_t>& sym, double w) {
        if (sym.empty()) return;
        starts[sym[0]] += w;
        for (std::size_t i = 1; i < sym.size(); ++i) bigrams[sym[i - 1]][sym[i]] += w;
    }

    // Same arithmetic as reestimate(), so scores match assign() bit for bit.
    void logs(double alpha, std::vector<double>& log_init, std::vector<std::vector<double>>& log_trans) const {
        log_init = starts;
        normalize_counts(log_init, alpha);
        for (auto& p : log_init) p = std::log(p);
        log_trans = bigrams;
        for (auto& row : log_trans) {
            normalize_counts(row, alpha);
            for (auto& p : row) p = std::log(p);
        }
    }
};

inline double table_score(const std::vector<std::size_t>& sym, const std::vector<double>& log_init,
                          const std::vector<std::vector<double>>& log_trans) {
    if (sym.empty()) return 0.0;
    double ll = log_init[sym[0]];
    for (std::size_t i = 1; i < sym.size(); ++i) ll += log_trans[sym[i - 1]][sym[i]];
    return ll;
}

// Best single-sequence move that keeps every cluster non-empty and lifts the objective of
// re-estimating and re-assigning above `current`. Ties go to the smaller (case id, cluster), so the
// choice does not depend on sequence order. Only the two chains touched by a move are re-scored.
inline std::optional<std::vector<std::size_t>> improving_move(const std::vector<ActivitySequence>& sequences,
                                                              const std::vector<std::size_t>& hard,
                                                              const std::vector<std::string>& alphabet, std::size_t k,
                                                              double alpha, double current) {
    const std::size_t n = sequences.size();
    const std::size_t dim = alphabet.size();
    if (k < 2 || n < 2) return std::nullopt;

    std::vector<std::size_t> members(k, 0);
    std::vector<ChainCounts> counts(k, ChainCounts(dim));
    for (std::size_t s = 0; s < n; ++s) {
        if (sequences[s].symbols.empty()) continue;
        ++members[hard[s]];
        counts[hard[s]].add(sequences[s].symbols, 1.0);
    }
    const auto empty = static_cast<std::size_t>(std::count(members.begin(), members.end(), 0));

    std::vector<std::vector<double>> ll(n, std::vector<double>(k, 0.0));
    std::vector<double> log_init;
    std::vector<std::vector<double>> log_trans;
    for (std::size_t c = 0; c < k; ++c) {
        if (members[c] == 0) continue;
        counts[c].logs(alpha, log_init, log_trans);
        for (std::size_t t = 0; t < n; ++t) ll[t][c] = table_score(sequences[t].symbols, log_init, log_trans);
    }

    std::vector<double> best(n), from_ll(n);
    std::vector<double> to_init;
    std::vector<std::vector<double>> to_trans;
    double top_value = current;
    std::optional<std::pair<std::size_t, std::size_t>> top_move;  // (sequence, cluster)
    for (std::size_t s = 0; s < n; ++s) {
        const auto& sym = sequences[s].symbols;
        const std::size_t from = hard[s];
        if (sym.empty() || members[from] < 2) continue;

        ChainCounts shrunk = counts[from];
        shrunk.add(sym, -1.0);
        shrunk.logs(alpha, log_init, log_trans);
        for (std::size_t t = 0; t < n; ++t) from_ll[t] = table_score(sequences[t].symbols, log_init, log_trans);

        for (std::size_t to = 0; to < k; ++to) {
            if (to == from || empty > (members[to] == 0 ? 1u : 0u)) continue;
            ChainCounts grown = counts[to];
            grown.add(sym, 1.0);
            grown.logs(alpha, to_init, to_trans);
            for (std::size_t t = 0; t < n; ++t) {
                double top = -std::numeric_limits<double>::infinity();
                for (std::size_t c = 0; c < k; ++c) {
                    double v = c == from ? from_ll[t] : c == to ? table_score(sequences[t].symbols, to_init, to_trans) : ll[t][c];
                    top = std::max(top, v);
                }
                best[t] = top;
            }
            const double value = ordered_sum(best);
            bool better = value > top_value;
            if (!better && top_move && value == top_value) {
                const auto& [ps, pc] = *top_move;
                better = std::tie(sequences[s].case_id, to) < std::tie(sequences[ps].case_id, pc);
            }
            if (better) {
                top_value = value;
                top_move.emplace(s, to);
            }
        }
    }
    if (!top_move) return std::nullopt;
    std::vector<std::size_t> moved = hard;
    moved[top_move->first] = top_move->second;
    return moved;
}

}  // namespace detail

/// One classification-EM run from a given starting model.
inline ClusteringResult fit_from(const std::vector<ActivitySequence>& sequences, const std::vector<std::string>& alphabet,
                                 ClusterModel model, const FitOptions& opt, std::uint64_t run_seed) {
    ClusteringResult r;
    model.smoothing_alpha = opt.alpha;
    bool came_from_reseed = false;
    std::optional<std::vector<std::size_t>> previous;

    while (true) {
        Assignment a = assign(sequences, model);
        r.objective_trace.push_back(a.objective);
        r.penalized_trace.push_back(a.objective + log_prior(model, opt.alpha));
        r.reseeded.push_back(came_from_reseed);
        ++r.iterations;

        bool done = false;
        if (previous && *previous == a.hard) {
            done = r.converged = true;
        } else if (r.objective_trace.size() >= 2) {
            double prev = r.objective_trace[r.objective_trace.size() - 2];
            double gain = a.objective - prev;
            double scale = std::abs(prev);
            if (gain == 0.0 || (scale > 0.0 && gain / scale < opt.tol)) done = r.converged = true;
        }
        if (!done && r.iterations >= opt.max_iter) done = true;

        if (done && r.converged && opt.refine && r.iterations < opt.max_iter) {
            // Moves must beat the best objective of the run, so refinement cannot cycle.
            const double bar = *std::max_element(r.objective_trace.begin(), r.objective_trace.end());
            if (auto move = detail::improving_move(sequences, a.hard, alphabet, model.k(), opt.alpha, bar)) {
                model = reestimate(sequences, *move, alphabet, model.k(), opt.alpha, 0).model;
                came_from_reseed = false;
                previous = std::move(*move);
                r.converged = false;
                continue;
            }
        }
        if (done) {
            r.assignments.reserve(sequences.size());
            for (std::size_t s = 0; s < sequences.size(); ++s)
                r.assignments.push_back({sequences[s].case_id, a.hard[s], std::move(a.posteriors[s])});
            r.model = std::move(model);
            return r;
        }

        auto next = reestimate(sequences, a.hard, alphabet, model.k(), opt.alpha, derive_seed({run_seed, r.iterations}));
        came_from_reseed = !next.reseeded.empty();
        model = std::move(next.model);
        previous = std::move(a.hard);
    }
}

/// Mixture-of-Markov-chains clustering of the log's cases by hard (classification) EM.
/// Runs `restarts` independent fits seeded by (seed, r) and keeps the one with the highest
/// final objective, the lowest restart index on ties.
inline ClusteringResult fit(const EventLog& log, const FitOptions& opt = {}) {
    opt.validate();
    if (log.empty()) throw EmptyLogError();

    // Sorted alphabet: the encoding must not depend on trace order.
    std::vector<std::string> alphabet(log.alphabet().begin(), log.alphabet().end());
    EncodedLog encoded = to_sequences(log, alphabet);

    std::optional<ClusteringResult> best;
    for (std::size_t r = 0; r < opt.restarts; ++r) {
        const std::uint64_t run_seed = derive_seed({opt.seed, r});
        ClusteringResult candidate =
            fit_from(encoded.sequences, alphabet, init_models(alphabet, opt.k, run_seed), opt, run_seed);
        candidate.best_restart = r;
        if (!best || candidate.objective() > best->objective()) best = std::move(candidate);
    }
    best->seed = opt.seed;
    best->restarts = opt.restarts;
    return std::move(*best);
}

// ---------------------------------------------------------------------------
// Splitting and summaries
// ---------------------------------------------------------------------------

/// One sub-log per cluster. Without `tau` each case goes to its hard cluster only (a partition);
/// with `tau` it is also copied into every cluster whose posterior is at least tau (a cover).
inline std::vector<EventLog> split_log(const EventLog& log, const ClusteringResult& result,
                                       std::optional<double> tau = std::nullopt) {
    if (tau && !(*tau > 0.0 && *tau <= 1.0)) throw ConfigError("tau must lie in (0, 1]");

    std::unordered_map<std::string, const CaseAssignment*> by_case;
    for (const auto& a : result.assignments) by_case.emplace(a.case_id, &a);

    const std::size_t k = result.model.k();
    std::vector<std::vector<Trace>> parts(k);
    for (const auto& t : log.traces()) {
        auto it = by_case.find(t.case_id);
        if (it == by_case.end()) throw ConfigError("case '" + t.case_id + "' is missing from the clustering result");
        const CaseAssignment& a = *it->second;
        for (std::size_t c = 0; c < k; ++c) {
            bool member = c == a.cluster || (tau && c < a.posteriors.size() && a.posteriors[c] >= *tau);
            if (member) parts[c].push_back(t);
        }
    }
    std::vector<EventLog> out;
    out.reserve(k);
    for (auto& p : parts) out.push_back(EventLog::from_traces(std::move(p)));
    return out;
}

/// Cases of one cluster that share an activity sequence.
struct InstanceGroup {
    std::vector<std::string> sequence;
    std::size_t case_count = 0;
    std::vector<std::string> case_ids;
    std::size_t events_per_case = 0;
    Duration max_case_duration{0};
};

struct ClusterSummary {
    std::vector<InstanceGroup> groups;  // most cases first, then longest
    std::size_t case_count = 0;
    std::size_t event_count = 0;
};

inline std::vector<ClusterSummary> summarize_clusters(const std::vector<EventLog>& sub_logs) {
    std::vector<ClusterSummary> out;
    out.reserve(sub_logs.size());
    for (const auto& sub : sub_logs) {
        ClusterSummary summary;
        summary.case_count = sub.case_count();
        summary.event_count = sub.event_count();
        for (auto& v : extract_variants(sub))
            summary.groups.push_back({v.sequence, v.case_count, std::move(v.case_ids), v.sequence.size(), v.max_case_duration});
        std::stable_sort(summary.groups.begin(), summary.groups.end(), [](const InstanceGroup& a, const InstanceGroup& b) {
            if (a.case_count != b.case_count) return a.case_count > b.case_count;
            return a.max_case_duration > b.max_case_duration;
        });
        out.push_back(std::move(summary));
    }
    return out;
}

}  // namespace seqmine
