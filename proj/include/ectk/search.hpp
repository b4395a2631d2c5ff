#pragma once

// ------------------------------------------------------------------------
// Seeded randomized search for separating witnesses.
//
// All randomness comes from a hand-rolled SplitMix64 generator so results
// are identical across platforms and standard-library versions.  Trial i of
// a search always derives its own sub-seed from (seed, i): re-running a
// search with the same seed replays the exact same instance sequence.
// ------------------------------------------------------------------------

#include <cstdint>
#include <optional>

#include "ectk/control.hpp"
#include "ectk/elections.hpp"

namespace ectk {

struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // uniform in [0, n) by rejection
    std::uint64_t bounded(std::uint64_t n);
    // uniform in [lo, hi]
    int range(int lo, int hi);
};

// Sub-seed of trial i under master seed s (one SplitMix64 output step).
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

// Size bounds for sampled instances.  Kept within the exhaustive-decision
// guards: at most 10 candidates in the universe and 20 ballots in play.
struct SearchRanges {
    int min_candidates = 1, max_candidates = 5;
    int min_votes = 0, max_votes = 8;
    int min_spoiler_candidates = 0, max_spoiler_candidates = 2;
    int min_spoiler_votes = 0, max_spoiler_votes = 4;
    int min_limit = 0, max_limit = 3;

    void validate() const;  // throws std::invalid_argument
};

// Uniformly sampled instance of the given shape: candidate count, ballot
// count, limit and spoiler counts uniform over their ranges; each ranked
// ballot a uniform permutation; each approval ballot a uniform subset.
ReducedInstance random_instance(Rule rule, CompatClass cls, const SearchRanges& ranges,
                                std::uint64_t seed);
Election random_election(Rule rule, const SearchRanges& ranges, std::uint64_t seed);

enum class Direction {
    LeftMinusRight,      // find c succeeding under A but not B
    RightMinusLeft,
    BothOnOneInstance,   // one instance separating both ways
};

struct SearchTarget {
    Rule rule;
    ControlType a, b;
    Direction direction = Direction::BothOnOneInstance;
};

struct SearchOutcome {
    bool found = false;
    std::uint64_t trials_run = 0;
    std::uint64_t hit_trial = 0;  // trial index of the hit (when found)
    std::uint64_t hit_seed = 0;   // its sub-seed
    std::optional<ReducedInstance> instance;
    CandMask left_minus_right = 0, right_minus_left = 0;
};

// Samples up to max_trials instances and returns the first one whose focus
// sets separate the pair in the requested direction.  Every reported
// witness candidate is re-verified through decide() before returning.
SearchOutcome find_witness(const SearchTarget& target, std::uint64_t seed,
                           std::uint64_t max_trials, const SearchRanges& ranges);

}  // namespace ectk
