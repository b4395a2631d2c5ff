#include "ectk/search.hpp"

#include <stdexcept>

namespace ectk {

std::uint64_t SplitMix64::bounded(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("bounded(0)");
    // reject the tail that would bias the modulus
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n + 1) % n;
    std::uint64_t x;
    do {
        x = next();
    } while (x > limit);
    return x % n;
}

int SplitMix64::range(int lo, int hi) {
    if (lo > hi) throw std::invalid_argument("empty range");
    return lo + static_cast<int>(bounded(static_cast<std::uint64_t>(hi - lo) + 1));
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
    SplitMix64 g(seed ^ (trial * 0xA24BAED4963EE407ull));
    return g.next();
}

void SearchRanges::validate() const {
    auto ordered = [](int lo, int hi) { return 0 <= lo && lo <= hi; };
    if (!ordered(min_candidates, max_candidates) || min_candidates < 1 ||
        !ordered(min_votes, max_votes) ||
        !ordered(min_spoiler_candidates, max_spoiler_candidates) ||
        !ordered(min_spoiler_votes, max_spoiler_votes) ||
        !ordered(min_limit, max_limit))
        throw std::invalid_argument("malformed size ranges");
    if (max_candidates + max_spoiler_candidates > 10)
        throw std::invalid_argument("more than 10 candidates in the universe");
    if (max_votes + max_spoiler_votes > 20)
        throw std::invalid_argument("more than 20 ballots in play");
}

namespace {

Vote random_vote(Rule rule, int m, SplitMix64& rng) {
    if (vote_kind(rule) == VoteKind::Approval)
        return approval_vote(static_cast<CandMask>(rng.bounded(std::uint64_t{1} << m)));
    std::vector<std::uint8_t> perm(m);
    for (int i = 0; i < m; ++i) perm[i] = static_cast<std::uint8_t>(i);
    for (int i = m - 1; i > 0; --i)
        std::swap(perm[i], perm[rng.range(0, i)]);  // Fisher–Yates
    return linear_vote(std::move(perm));
}

Profile random_profile(Rule rule, int m, int n, SplitMix64& rng) {
    Profile p;
    p.kind = vote_kind(rule);
    for (int i = 0; i < n; ++i) p.votes.push_back(random_vote(rule, m, rng));
    return p;
}

std::vector<std::string> letter_names(int m) {
    std::vector<std::string> names;
    for (int i = 0; i < m; ++i) names.push_back(std::string(1, char('a' + i)));
    return names;
}

}  // namespace

Election random_election(Rule rule, const SearchRanges& ranges, std::uint64_t seed) {
    ranges.validate();
    SplitMix64 rng(seed);
    const int m = rng.range(ranges.min_candidates, ranges.max_candidates);
    const int n = rng.range(ranges.min_votes, ranges.max_votes);
    return {letter_names(m), random_profile(rule, m, n, rng)};
}

ReducedInstance random_instance(Rule rule, CompatClass cls, const SearchRanges& ranges,
                                std::uint64_t seed) {
    ranges.validate();
    SplitMix64 rng(seed);
    const int m = rng.range(ranges.min_candidates, ranges.max_candidates);
    const int n = rng.range(ranges.min_votes, ranges.max_votes);

    if (cls == CompatClass::AddCand || cls == CompatClass::UnlimitedAddCand) {
        const int s = rng.range(ranges.min_spoiler_candidates, ranges.max_spoiler_candidates);
        Election e{letter_names(m + s), random_profile(rule, m + s, n, rng)};
        if (cls == CompatClass::UnlimitedAddCand)
            return make_unlimited_add_cand_instance(std::move(e), full_mask(m));
        return make_add_cand_instance(std::move(e), full_mask(m),
                                      rng.range(ranges.min_limit, ranges.max_limit));
    }

    Election e{letter_names(m), random_profile(rule, m, n, rng)};
    switch (cls) {
        case CompatClass::Partition: return make_partition_instance(std::move(e));
        case CompatClass::Delete:
            return make_delete_instance(std::move(e),
                                        rng.range(ranges.min_limit, ranges.max_limit));
        case CompatClass::AddVoter: {
            const int w = rng.range(ranges.min_spoiler_votes, ranges.max_spoiler_votes);
            Profile spoilers = random_profile(rule, m, w, rng);
            return make_add_voter_instance(std::move(e), std::move(spoilers),
                                           rng.range(ranges.min_limit, ranges.max_limit));
        }
        default: throw std::logic_error("unreachable");
    }
}

SearchOutcome find_witness(const SearchTarget& target, std::uint64_t seed,
                           std::uint64_t max_trials, const SearchRanges& ranges) {
    if (compat_class(target.a) != compat_class(target.b))
        throw std::invalid_argument("types " + to_string(target.a) + " and " +
                                    to_string(target.b) + " are incompatible");
    const CompatClass cls = compat_class(target.a);
    SearchOutcome out;
    for (std::uint64_t trial = 0; trial < max_trials; ++trial) {
        const std::uint64_t sub = trial_seed(seed, trial);
        ReducedInstance inst = random_instance(target.rule, cls, ranges, sub);
        FocusProfile fp = focus_profile(target.rule, inst);
        const CandMask fa = fp[target.a], fb = fp[target.b];
        const CandMask ab = fa & ~fb, ba = fb & ~fa;
        const bool hit = target.direction == Direction::LeftMinusRight ? ab != 0
                         : target.direction == Direction::RightMinusLeft
                             ? ba != 0
                             : (ab != 0 && ba != 0);
        out.trials_run = trial + 1;
        if (!hit) continue;

        // cross-check the sweep result against the one-shot decision path
        for (CandMask rest = ab | ba; rest;) {
            const int c = std::countr_zero(rest);
            rest &= rest - 1;
            const bool da = decide(target.rule, target.a, inflate(inst, c)).success;
            const bool db = decide(target.rule, target.b, inflate(inst, c)).success;
            if (da != (((fa >> c) & 1u) != 0) || db != (((fb >> c) & 1u) != 0))
                throw std::logic_error("witness failed re-verification");
        }
        out.found = true;
        out.hit_trial = trial;
        out.hit_seed = sub;
        out.left_minus_right = ab;
        out.right_minus_left = ba;
        out.instance = std::move(inst);
        return out;
    }
    return out;
}

}  // namespace ectk
