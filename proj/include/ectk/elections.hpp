#pragma once

// ------------------------------------------------------------------------
// Core election model: candidates, ballots, and winner determination for
// plurality, veto, and approval voting.
//
// Candidate sets are bitmasks over a fixed declared universe (at most
// kMaxUniverse candidates), so restricting an election to a subset of its
// candidates never copies ballots: score/winners take a `present` mask and
// evaluate ballots as if the absent candidates had been struck out.
// ------------------------------------------------------------------------

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ectk {

enum class Rule : std::uint8_t { Plurality, Veto, Approval };
enum class VoteKind : std::uint8_t { Linear, Approval };

constexpr VoteKind vote_kind(Rule r) {
    return r == Rule::Approval ? VoteKind::Approval : VoteKind::Linear;
}

const char* to_string(Rule r);
std::optional<Rule> rule_from_string(std::string_view s);

// Subset of the candidate universe; bit i = candidate with declared index i.
using CandMask = std::uint32_t;

inline constexpr int kMaxUniverse = 20;

constexpr CandMask full_mask(int n) {
    return n == 0 ? 0u : (CandMask{1} << n) - 1;
}
constexpr int mask_size(CandMask m) { return std::popcount(m); }
// Index of the single set bit; only meaningful for singleton masks.
constexpr int sole_member(CandMask m) { return std::countr_zero(m); }

// One ballot.  Exactly one representation is active, per the owning
// profile's kind: a strict ranking of the full universe (best first), or an
// approval mask.
struct Vote {
    std::vector<std::uint8_t> ranking;
    CandMask approvals = 0;
};

Vote linear_vote(std::vector<std::uint8_t> ranking);
Vote approval_vote(CandMask approvals);

struct Profile {
    VoteKind kind = VoteKind::Linear;
    std::vector<Vote> votes;

    int size() const { return static_cast<int>(votes.size()); }
    bool empty() const { return votes.empty(); }
};

struct Election {
    std::vector<std::string> names;  // declared candidate order
    Profile profile;

    int universe_size() const { return static_cast<int>(names.size()); }
    CandMask all() const { return full_mask(universe_size()); }
    // Declared index of a candidate name, or -1.
    int index_of(std::string_view name) const;
};

// Throws std::invalid_argument on malformed data: duplicate/empty/illegal
// candidate names, rankings that are not permutations of the universe,
// approval masks with stray bits, or a universe larger than kMaxUniverse.
void validate(const Election& e);
bool valid_candidate_name(std::string_view name);

// Points candidate c earns from `v` when only `present` candidates run.
// Plurality: 1 point from each ballot whose top remaining choice is c.
// Veto: 1 point from each ballot not ranking c last among the remaining.
// Approval: 1 point from each ballot approving c (unaffected by `present`).
int score(Rule rule, const Profile& v, CandMask present, int c);

// All candidates in `present` with maximum score.  Empty candidate set has
// no winners; a nonempty candidate set with an empty profile is an all-way
// tie (every candidate wins with 0 points).
CandMask winners(Rule rule, const Profile& v, CandMask present);
inline CandMask winners(Rule rule, const Election& e) {
    return winners(rule, e.profile, e.all());
}
bool unique_winner(Rule rule, const Profile& v, CandMask present, int c);

// Ballots restricted to `subset` and reindexed against the smaller
// universe: rankings keep their relative order, approval masks are
// compressed.  `universe` is the size of the original universe.
Profile mask_votes(const Profile& v, CandMask subset, int universe);
Election masked(const Election& e, CandMask subset);

// Memoized winners(rule, profile, subset) over a fixed election; the
// two-stage evaluators query the same handful of subsets many times.
class SubsetWinners {
  public:
    SubsetWinners(Rule rule, const Election& e) : rule_(rule), e_(&e) {}
    CandMask operator()(CandMask present);

  private:
    Rule rule_;
    const Election* e_;
    std::unordered_map<CandMask, CandMask> memo_;
};

}  // namespace ectk
