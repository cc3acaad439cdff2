#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

namespace seqmine {

/// SplitMix64 finalizer.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Stream seed for a tuple such as (seed, restart, chain, row). Order matters.
inline std::uint64_t derive_seed(std::initializer_list<std::uint64_t> parts) {
    std::uint64_t h = 0x5EEDULL;
    for (auto p : parts) h = mix64(h ^ mix64(p));
    return h;
}

/// Deterministic generator. Distributions are computed here rather than with <random>'s
/// distribution classes so that streams are identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on the open interval (0, 1).
    double uniform() { return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53; }

    double exponential() { return -std::log(uniform()); }

    /// Index drawn from a discrete distribution whose weights sum to (about) one.
    std::size_t categorical(const std::vector<double>& weights) {
        double u = uniform();
        double acc = 0.0;
        for (std::size_t i = 0; i < weights.size(); ++i) {
            acc += weights[i];
            if (u < acc) return i;
        }
        for (std::size_t i = weights.size(); i-- > 0;)
            if (weights[i] > 0.0) return i;
        return 0;
    }

    /// A point drawn uniformly from the probability simplex (flat Dirichlet).
    std::vector<double> flat_dirichlet(std::size_t dim) {
        std::vector<double> v(dim);
        double sum = 0.0;
        for (auto& x : v) sum += (x = exponential());
        for (auto& x : v) x /= sum;
        return v;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace seqmine
