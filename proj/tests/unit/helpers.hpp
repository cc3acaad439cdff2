#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "seqmine/log.hpp"

namespace seqmine::test {

inline Event ev(std::string case_id, std::string activity, std::int64_t seconds) {
    return Event{std::move(case_id), std::move(activity), instant_from_ms(seconds * 1000), {}};
}

/// Random log: `cases` cases over `alphabet` activities, 1..max_len events each,
/// millisecond timestamps with frequent ties.
inline EventLog random_log(std::uint64_t seed, std::size_t cases = 12, std::size_t alphabet = 4, std::size_t max_len = 8) {
    std::mt19937_64 gen(seed);
    std::uniform_int_distribution<std::size_t> len(1, max_len), act(0, alphabet - 1);
    std::uniform_int_distribution<int> gap(0, 4);
    std::uniform_int_distribution<std::int64_t> ms(0, 999'999);
    std::vector<Event> events;
    for (std::size_t c = 0; c < cases; ++c) {
        std::int64_t t = 1'500'000'000'000 + ms(gen) * 1000;
        std::size_t n = len(gen);
        for (std::size_t i = 0; i < n; ++i) {
            t += gap(gen) == 0 ? 0 : ms(gen);
            events.push_back(Event{"case" + std::to_string(c), std::string(1, static_cast<char>('A' + act(gen))),
                                   instant_from_ms(t), {}});
        }
    }
    std::shuffle(events.begin(), events.end(), gen);
    // Shuffling breaks timestamp order but build_log re-sorts; ties then follow shuffled order.
    return build_log(std::move(events));
}

}  // namespace seqmine::test
