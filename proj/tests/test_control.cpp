#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "ectk/control.hpp"
#include "ectk/elections.hpp"
#include "ectk/search.hpp"
#include "helpers.hpp"

using namespace ectk;
using testutil::approval;
using testutil::linear;
using testutil::mask_of;

namespace {

ControlType ct(const char* s) {
    auto t = control_type_from_string(s);
    REQUIRE_MESSAGE(t.has_value(), s);
    return *t;
}

// ---- reference implementations -------------------------------------------
//
// The checks below recompute everything the hard way: subelections are
// materialized with masked() and rebuilt as standalone elections instead of
// being evaluated in place through candidate masks, and decisions enumerate
// structures with none of the engine's memoization.  Slow but obviously
// faithful to the definitions.

// winners of the subelection on `subset`, reported in original coordinates
CandMask ref_winners_subset(Rule rule, const Election& e, CandMask subset) {
    const Election sub = masked(e, subset);
    const CandMask w = winners(rule, sub);
    CandMask out = 0;
    for (int i = 0; i < sub.universe_size(); ++i)
        if ((w >> i) & 1u) out |= CandMask{1} << e.index_of(sub.names[i]);
    return out;
}

CandMask ref_tie(TieRule tie, CandMask w) {
    if (tie == TieRule::Promote) return w;
    return mask_size(w) == 1 ? w : 0;
}

CandMask ref_two_stage(Rule rule, Action action, TieRule tie, const Election& e,
                       std::uint32_t side1) {
    if (action == Action::PartitionVoter) {
        Profile v1, v2;
        v1.kind = v2.kind = e.profile.kind;
        for (int i = 0; i < e.profile.size(); ++i)
            ((side1 >> i) & 1u ? v1 : v2).votes.push_back(e.profile.votes[i]);
        // semifinals run over the full candidate set
        const CandMask s1 = ref_tie(tie, winners(rule, Election{e.names, v1}));
        const CandMask s2 = ref_tie(tie, winners(rule, Election{e.names, v2}));
        return ref_winners_subset(rule, e, s1 | s2);
    }
    const CandMask c1 = static_cast<CandMask>(side1) & e.all();
    const CandMask c2 = e.all() & ~c1;
    const CandMask s1 = ref_tie(tie, ref_winners_subset(rule, e, c1));
    if (action == Action::PartitionCand) return ref_winners_subset(rule, e, s1 | c2);
    const CandMask s2 = ref_tie(tie, ref_winners_subset(rule, e, c2));
    return ref_winners_subset(rule, e, s1 | s2);
}

// every subset of `pool`, small pools only
std::vector<std::uint32_t> subsets_of(std::uint32_t pool) {
    std::vector<std::uint32_t> out;
    std::uint32_t s = 0;
    do {
        out.push_back(s);
        s = (s - pool) & pool;
    } while (s != 0);
    return out;
}

bool naive_decide(Rule rule, const ControlType& t, const ControlInstance& inst) {
    const ReducedInstance& r = inst.reduced;
    const Election& e = r.election;
    const int p = inst.focus;
    auto ok = [&](CandMask w) { return goal_holds(t.goal, t.winner, w, p); };

    switch (t.action) {
        case Action::AddCand:
        case Action::UnlimitedAddCand:
            for (std::uint32_t s : subsets_of(r.spoiler_cands())) {
                if (t.action == Action::AddCand && std::popcount(s) > r.limit) continue;
                if (ok(ref_winners_subset(rule, e, r.original | s))) return true;
            }
            return false;
        case Action::DeleteCand:
            for (std::uint32_t s : subsets_of(e.all() & ~(CandMask{1} << p)))
                if (std::popcount(s) <= r.limit &&
                    ok(ref_winners_subset(rule, e, e.all() & ~s)))
                    return true;
            return false;
        case Action::DeleteVoter:
            for (std::uint32_t s :
                 subsets_of(e.profile.empty() ? 0 : (1u << e.profile.size()) - 1)) {
                if (std::popcount(s) > r.limit) continue;
                Profile kept;
                kept.kind = e.profile.kind;
                for (int i = 0; i < e.profile.size(); ++i)
                    if (!((s >> i) & 1u)) kept.votes.push_back(e.profile.votes[i]);
                if (ok(winners(rule, Election{e.names, kept}))) return true;
            }
            return false;
        case Action::AddVoter:
            for (std::uint32_t s : subsets_of(
                     r.spoiler_votes.empty() ? 0 : (1u << r.spoiler_votes.size()) - 1)) {
                if (std::popcount(s) > r.limit) continue;
                Profile merged = e.profile;
                for (int i = 0; i < r.spoiler_votes.size(); ++i)
                    if ((s >> i) & 1u) merged.votes.push_back(r.spoiler_votes.votes[i]);
                if (ok(winners(rule, Election{e.names, merged}))) return true;
            }
            return false;
        case Action::PartitionVoter:
            for (std::uint32_t s :
                 subsets_of(e.profile.empty() ? 0 : (1u << e.profile.size()) - 1))
                if (ok(ref_two_stage(rule, t.action, t.tie, e, s))) return true;
            return false;
        case Action::PartitionCand:
        case Action::RunoffPartitionCand:
            for (std::uint32_t s : subsets_of(e.all()))
                if (ok(ref_two_stage(rule, t.action, t.tie, e, s))) return true;
            return false;
    }
    return false;
}

// replay a decide() witness through the reference evaluator
bool witness_reaches_goal(Rule rule, const ControlType& t, const ControlInstance& inst,
                          const std::vector<int>& w) {
    const ReducedInstance& r = inst.reduced;
    std::uint32_t chosen = 0;
    for (int i : w) chosen |= std::uint32_t{1} << i;
    auto ok = [&](CandMask win) { return goal_holds(t.goal, t.winner, win, inst.focus); };
    switch (t.action) {
        case Action::AddCand:
        case Action::UnlimitedAddCand:
            return (chosen & ~r.spoiler_cands()) == 0 &&
                   ok(ref_winners_subset(rule, r.election, r.original | chosen));
        case Action::DeleteCand:
            return !((chosen >> inst.focus) & 1u) &&
                   ok(ref_winners_subset(rule, r.election, r.election.all() & ~chosen));
        case Action::DeleteVoter: {
            Profile kept;
            kept.kind = r.election.profile.kind;
            for (int i = 0; i < r.election.profile.size(); ++i)
                if (!((chosen >> i) & 1u)) kept.votes.push_back(r.election.profile.votes[i]);
            return ok(winners(rule, Election{r.election.names, kept}));
        }
        case Action::AddVoter: {
            Profile merged = r.election.profile;
            for (int i = 0; i < r.spoiler_votes.size(); ++i)
                if ((chosen >> i) & 1u) merged.votes.push_back(r.spoiler_votes.votes[i]);
            return ok(winners(rule, Election{r.election.names, merged}));
        }
        case Action::PartitionVoter:
        case Action::PartitionCand:
        case Action::RunoffPartitionCand:
            return ok(ref_two_stage(rule, t.action, t.tie, r.election, chosen));
    }
    return false;
}

ReducedInstance sole_candidate_instance(Rule rule, CompatClass cls) {
    const Election e = rule == Rule::Approval ? approval({"a"}, {"1"}) : linear({"a"}, {"a"});
    switch (cls) {
        case CompatClass::Partition: return make_partition_instance(e);
        case CompatClass::AddCand: return make_add_cand_instance(e, e.all(), 1);
        case CompatClass::UnlimitedAddCand:
            return make_unlimited_add_cand_instance(e, e.all());
        case CompatClass::Delete: return make_delete_instance(e, 1);
        case CompatClass::AddVoter:
            return make_add_voter_instance(e, Profile{e.profile.kind, {}}, 1);
    }
    throw std::logic_error("unreachable");
}

const SearchRanges kTinyRanges = {
    .min_candidates = 1, .max_candidates = 3,
    .min_votes = 0, .max_votes = 4,
    .min_spoiler_candidates = 0, .max_spoiler_candidates = 2,
    .min_spoiler_votes = 0, .max_spoiler_votes = 3,
    .min_limit = 0, .max_limit = 2,
};

constexpr CompatClass kAllClasses[] = {
    CompatClass::Partition, CompatClass::AddCand, CompatClass::Delete,
    CompatClass::AddVoter, CompatClass::UnlimitedAddCand,
};

}  // namespace

TEST_CASE("the type table has 44 entries in the documented order") {
    const auto types = all_types();
    REQUIRE(types.size() == 44);

    std::set<std::string> seen;
    for (const ControlType& t : types) seen.insert(to_string(t));
    CHECK(seen.size() == 44);

    int partition = 0, destructive = 0;
    for (const ControlType& t : types) {
        partition += is_partition_action(t.action);
        destructive += t.goal == Goal::Destructive;
        CHECK((t.tie != TieRule::None) == is_partition_action(t.action));
    }
    CHECK(partition == 24);
    CHECK(destructive == 22);

    // block boundaries
    CHECK(to_string(types[0]) == "CC-PV-TE-UW");
    CHECK(to_string(types[1]) == "CC-PV-TE-NUW");
    CHECK(to_string(types[4]) == "CC-PC-TE-UW");
    CHECK(to_string(types[12]) == "DC-PV-TE-UW");
    CHECK(to_string(types[23]) == "DC-RPC-TP-NUW");
    CHECK(to_string(types[24]) == "CC-AC-UW");
    CHECK(to_string(types[28]) == "CC-DC-UW");
    CHECK(to_string(types[30]) == "CC-DV-UW");
    CHECK(to_string(types[32]) == "DC-DC-UW");
    CHECK(to_string(types[36]) == "CC-AV-UW");
    CHECK(to_string(types[40]) == "CC-UAC-UW");
    CHECK(to_string(types[43]) == "DC-UAC-NUW");

    for (int i = 0; i < 44; ++i) CHECK(canonical_index(types[i]) == i);
}

TEST_CASE("compatibility classes partition the table 24/4/8/4/4") {
    CHECK(class_size(CompatClass::Partition) == 24);
    CHECK(class_size(CompatClass::AddCand) == 4);
    CHECK(class_size(CompatClass::Delete) == 8);
    CHECK(class_size(CompatClass::AddVoter) == 4);
    CHECK(class_size(CompatClass::UnlimitedAddCand) == 4);

    int total = 0;
    for (CompatClass cls : kAllClasses) {
        const auto span = class_types(cls);
        CHECK(static_cast<int>(span.size()) == class_size(cls));
        total += static_cast<int>(span.size());
        for (int i = 0; i < static_cast<int>(span.size()); ++i) {
            CHECK(compat_class(span[i]) == cls);
            CHECK(class_index(span[i]) == i);
        }
    }
    CHECK(total == 44);

    const auto pairs = compatible_pairs();
    CHECK(pairs.size() == 322);
    for (const auto& [a, b] : pairs) CHECK(compat_class(a) == compat_class(b));
    // 44 choose 2 minus the within-class pairs
    CHECK(44 * 43 / 2 - static_cast<int>(pairs.size()) == 624);
}

TEST_CASE("canonical type strings round-trip and disambiguate the two DCs") {
    for (const ControlType& t : all_types()) {
        const auto back = control_type_from_string(to_string(t));
        REQUIRE(back.has_value());
        CHECK(*back == t);
    }

    const ControlType del = ct("DC-DC-UW");
    CHECK(del.goal == Goal::Destructive);
    CHECK(del.action == Action::DeleteCand);
    const ControlType con = ct("CC-DC-NUW");
    CHECK(con.goal == Goal::Constructive);
    CHECK(con.action == Action::DeleteCand);
    CHECK(ct("DC-RPC-TE-NUW").tie == TieRule::Eliminate);

    for (const char* bad : {"", "CC", "CC-PV-UW", "CC-AC-TE-UW", "ZZ-AC-UW",
                            "CC-AC", "cc-ac-uw", "CC-AC-UW-TE", "CC-AC-UW "})
        CHECK_FALSE(control_type_from_string(bad).has_value());
}

TEST_CASE("two-stage evaluation matches hand-worked rounds") {
    SUBCASE("ties eliminate can leave nobody standing") {
        const Election e = linear({"a", "b"}, {"a>b", "b>a"});
        // all votes on one side: that semifinal ties a-b, the other side is
        // the empty election where everyone ties as well
        CHECK(two_stage_eval(Rule::Plurality, Action::PartitionVoter,
                             TieRule::Eliminate, e, 0b11u) == 0);
        CHECK(two_stage_eval(Rule::Plurality, Action::PartitionVoter,
                             TieRule::Eliminate, e, 0) == 0);
        // split the votes: each side elects its own favorite, final ties
        CHECK(two_stage_eval(Rule::Plurality, Action::PartitionVoter,
                             TieRule::Eliminate, e, 0b01u) == e.all());
        CHECK(two_stage_eval(Rule::Plurality, Action::PartitionVoter,
                             TieRule::Promote, e, 0b11u) == e.all());
    }
    SUBCASE("one-vote candidate partition") {
        const Election e = linear({"a", "b"}, {"a>b"});
        for (TieRule tie : {TieRule::Eliminate, TieRule::Promote}) {
            CHECK(two_stage_eval(Rule::Plurality, Action::PartitionCand, tie, e,
                                 mask_of(e, {"a"})) == mask_of(e, {"a"}));
            CHECK(two_stage_eval(Rule::Plurality, Action::PartitionCand, tie, e,
                                 mask_of(e, {"b"})) == mask_of(e, {"a"}));
        }
    }
    SUBCASE("empty first group is neutral for approval runoffs") {
        const Election e = approval({"a", "b"}, {"10", "01"});
        CHECK(two_stage_eval(Rule::Approval, Action::RunoffPartitionCand,
                             TieRule::Promote, e, 0) == winners(Rule::Approval, e));
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            const Election r =
                random_election(Rule::Approval, kTinyRanges, trial_seed(51, seed));
            CHECK(two_stage_eval(Rule::Approval, Action::RunoffPartitionCand,
                                 TieRule::Promote, r, 0) == winners(Rule::Approval, r));
        }
    }
}

TEST_CASE("two-stage evaluation agrees with the reference on all partitions") {
    constexpr Action kActions[] = {Action::PartitionVoter, Action::PartitionCand,
                                   Action::RunoffPartitionCand};
    for (Rule rule : {Rule::Plurality, Rule::Veto, Rule::Approval}) {
        for (std::uint64_t seed = 0; seed < 40; ++seed) {
            const Election e = random_election(rule, kTinyRanges, trial_seed(61, seed));
            for (Action action : kActions) {
                const std::uint32_t top =
                    action == Action::PartitionVoter
                        ? (e.profile.empty() ? 0 : (1u << e.profile.size()) - 1)
                        : e.all();
                for (TieRule tie : {TieRule::Eliminate, TieRule::Promote}) {
                    SubsetWinners memo(rule, e);
                    for (std::uint32_t s = 0; s <= top; ++s)
                        CHECK(two_stage_eval(rule, action, tie, e, s, memo) ==
                              ref_two_stage(rule, action, tie, e, s));
                }
            }
        }
    }
}

TEST_CASE("swapping the groups changes nothing for vote partition and runoffs") {
    for (Rule rule : {Rule::Plurality, Rule::Veto, Rule::Approval}) {
        for (std::uint64_t seed = 0; seed < 25; ++seed) {
            const Election e = random_election(rule, kTinyRanges, trial_seed(71, seed));
            const std::uint32_t votes_all =
                e.profile.empty() ? 0 : (1u << e.profile.size()) - 1;
            for (TieRule tie : {TieRule::Eliminate, TieRule::Promote}) {
                for (std::uint32_t s = 0; s <= votes_all; ++s)
                    CHECK(two_stage_eval(rule, Action::PartitionVoter, tie, e, s) ==
                          two_stage_eval(rule, Action::PartitionVoter, tie, e,
                                         votes_all & ~s));
                for (CandMask s = 0; s <= e.all(); ++s)
                    CHECK(two_stage_eval(rule, Action::RunoffPartitionCand, tie, e, s) ==
                          two_stage_eval(rule, Action::RunoffPartitionCand, tie, e,
                                         e.all() & ~s));
            }
        }
    }
}

TEST_CASE("deleting one candidate hands the two-vote leader's rival the win") {
    // the worked introduction instance: b trails a, but deleting a moves
    // every a-first ballot to b
    const Election e = linear({"a", "b", "c"}, {"a>b>c", "a>b>c", "a>c>b", "b>c>a"});
    const ControlInstance inst = inflate(make_delete_instance(e, 1), e.index_of("b"));

    const DecideResult uw = decide(Rule::Plurality, ct("CC-DC-UW"), inst);
    CHECK(uw.success);
    REQUIRE(uw.witness.has_value());
    CHECK(*uw.witness == std::vector<int>{0});  // delete a

    const DecideResult nuw = decide(Rule::Plurality, ct("CC-DC-NUW"), inst);
    CHECK(nuw.success);

    // with no deletions allowed, b stays a loser
    const ControlInstance k0 = inflate(make_delete_instance(e, 0), e.index_of("b"));
    CHECK_FALSE(decide(Rule::Plurality, ct("CC-DC-UW"), k0).success);
    CHECK_FALSE(decide(Rule::Plurality, ct("CC-DC-NUW"), k0).success);
}

TEST_CASE("a sole candidate defeats every destructive attack and needs no help") {
    for (Rule rule : {Rule::Plurality, Rule::Veto, Rule::Approval}) {
        for (const ControlType& t : all_types()) {
            const ControlInstance inst =
                inflate(sole_candidate_instance(rule, compat_class(t)), 0);
            CHECK(decide(rule, t, inst).success == (t.goal == Goal::Constructive));
        }
    }
}

TEST_CASE("no spoilers and zero budgets reduce to the plain goal check") {
    for (Rule rule : {Rule::Plurality, Rule::Veto, Rule::Approval}) {
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            const Election e = random_election(rule, kTinyRanges, trial_seed(81, seed));
            if (e.universe_size() == 0) continue;
            const CandMask w = winners(rule, e);
            for (int p = 0; p < e.universe_size(); ++p) {
                auto expect = [&](const ControlType& t) {
                    return goal_holds(t.goal, t.winner, w, p);
                };
                for (const ControlType& t : class_types(CompatClass::AddCand))
                    CHECK(decide(rule, t, inflate(make_add_cand_instance(e, e.all(), 2), p))
                              .success == expect(t));
                for (const ControlType& t : class_types(CompatClass::UnlimitedAddCand))
                    CHECK(decide(rule, t,
                                 inflate(make_unlimited_add_cand_instance(e, e.all()), p))
                              .success == expect(t));
                for (const ControlType& t : class_types(CompatClass::Delete))
                    CHECK(decide(rule, t, inflate(make_delete_instance(e, 0), p))
                              .success == expect(t));
                for (const ControlType& t : class_types(CompatClass::AddVoter))
                    CHECK(decide(rule, t,
                                 inflate(make_add_voter_instance(
                                             e, Profile{e.profile.kind, {}}, 0),
                                         p))
                              .success == expect(t));
            }
        }
    }
}

TEST_CASE("raising the budget never turns a yes into a no") {
    for (Rule rule : {Rule::Plurality, Rule::Veto, Rule::Approval}) {
        for (CompatClass cls :
             {CompatClass::AddCand, CompatClass::Delete, CompatClass::AddVoter}) {
            for (std::uint64_t seed = 0; seed < 25; ++seed) {
                ReducedInstance r =
                    random_instance(rule, cls, kTinyRanges, trial_seed(91, seed));
                ReducedInstance more = r;
                ++more.limit;
                for (const ControlType& t : class_types(cls))
                    for (int p = 0; p < mask_size(r.registered()); ++p)
                        if (decide(rule, t, inflate(r, p)).success)
                            CHECK(decide(rule, t, inflate(more, p)).success);
            }
        }
    }
}

TEST_CASE("decide agrees with naive enumeration on every class and type") {
    for (Rule rule : {Rule::Plurality, Rule::Veto, Rule::Approval}) {
        for (CompatClass cls : kAllClasses) {
            for (std::uint64_t seed = 0; seed < 30; ++seed) {
                const ReducedInstance r =
                    random_instance(rule, cls, kTinyRanges, trial_seed(101, seed));
                for (const ControlType& t : class_types(cls)) {
                    for (int i = 0; i < r.election.universe_size(); ++i) {
                        if (!((r.registered() >> i) & 1u)) continue;
                        const ControlInstance inst = inflate(r, i);
                        const DecideResult got = decide(rule, t, inst);
                        CHECK(got.success == naive_decide(rule, t, inst));
                        if (got.success) {
                            REQUIRE(got.witness.has_value());
                            CHECK(std::is_sorted(got.witness->begin(), got.witness->end()));
                            CHECK(witness_reaches_goal(rule, t, inst, *got.witness));
                            if (t.action == Action::AddCand ||
                                t.action == Action::DeleteCand ||
                                t.action == Action::DeleteVoter ||
                                t.action == Action::AddVoter)
                                CHECK(static_cast<int>(got.witness->size()) <= r.limit);
                        } else {
                            CHECK_FALSE(got.witness.has_value());
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("focus sets enumerate exactly the candidates decide accepts") {
    const Election plur3 = linear({"a", "b"}, {"a>b"});
    const ReducedInstance r3 = make_partition_instance(plur3);
    CHECK(focus_set(Rule::Plurality, ct("CC-PC-TE-NUW"), r3) == mask_of(plur3, {"a"}));
    CHECK(focus_set(Rule::Plurality, ct("DC-PC-TE-NUW"), r3) == mask_of(plur3, {"b"}));

    const Election plur2 = linear({"a", "b"}, {"a>b", "b>a"});
    // the all-or-nothing vote split eliminates both tied semifinal winners,
    // so even the overall winners can be made losers
    CHECK(focus_set(Rule::Plurality, ct("DC-PV-TE-NUW"),
                    make_partition_instance(plur2)) == plur2.all());
}

TEST_CASE("shared-sweep focus profiles match per-candidate decisions") {
    for (Rule rule : {Rule::Plurality, Rule::Veto, Rule::Approval}) {
        for (CompatClass cls : kAllClasses) {
            for (std::uint64_t seed = 0; seed < 12; ++seed) {
                const ReducedInstance r =
                    random_instance(rule, cls, kTinyRanges, trial_seed(111, seed));
                const FocusProfile prof = focus_profile(rule, r);
                CHECK(prof.cls == cls);
                for (const ControlType& t : class_types(cls)) {
                    CandMask by_decide = 0;
                    for (int i = 0; i < r.election.universe_size(); ++i)
                        if (((r.registered() >> i) & 1u) &&
                            decide(rule, t, inflate(r, i)).success)
                            by_decide |= CandMask{1} << i;
                    CHECK(prof[t] == by_decide);
                    CHECK(focus_set(rule, t, r) == by_decide);
                }
            }
        }
    }
}

TEST_CASE("decide is indifferent to ballot order and candidate names") {
    for (Rule rule : {Rule::Plurality, Rule::Veto, Rule::Approval}) {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            ReducedInstance r = random_instance(rule, CompatClass::Partition,
                                                kTinyRanges, trial_seed(121, seed));
            const int n = r.election.universe_size();
            if (n == 0) continue;
            const FocusProfile base = focus_profile(rule, r);

            // reverse the ballot list
            ReducedInstance shuffled = r;
            std::reverse(shuffled.election.profile.votes.begin(),
                         shuffled.election.profile.votes.end());
            const FocusProfile anon = focus_profile(rule, shuffled);
            for (const ControlType& t : class_types(CompatClass::Partition))
                CHECK(anon[t] == base[t]);

            // relabel candidate i as position perm[i]
            std::vector<int> perm(n);
            for (int i = 0; i < n; ++i) perm[i] = (i + 1) % n;
            ReducedInstance renamed = r;
            for (int i = 0; i < n; ++i)
                renamed.election.names[perm[i]] = r.election.names[i];
            for (Vote& v : renamed.election.profile.votes) {
                for (std::uint8_t& x : v.ranking) x = static_cast<std::uint8_t>(perm[x]);
                CandMask moved = 0;
                for (int i = 0; i < n; ++i)
                    if ((v.approvals >> i) & 1u) moved |= CandMask{1} << perm[i];
                v.approvals = moved;
            }
            const FocusProfile neu = focus_profile(rule, renamed);
            for (const ControlType& t : class_types(CompatClass::Partition)) {
                CandMask mapped = 0;
                for (int i = 0; i < n; ++i)
                    if ((base[t] >> i) & 1u) mapped |= CandMask{1} << perm[i];
                CHECK(neu[t] == mapped);
            }
        }
    }
}

TEST_CASE("shape errors are rejected up front") {
    const Election e = linear({"a", "b"}, {"a>b"});
    const ReducedInstance part = make_partition_instance(e);

    CHECK_THROWS_AS(decide(Rule::Plurality, ct("CC-AC-UW"), inflate(part, 0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(focus_set(Rule::Plurality, ct("CC-AV-UW"), part),
                    std::invalid_argument);
    CHECK_THROWS_AS(inflate(make_add_cand_instance(e, mask_of(e, {"a"}), 1),
                            e.index_of("b")),  // b is a spoiler, not registered
                    std::invalid_argument);
    CHECK_THROWS_AS(make_delete_instance(e, -1), std::invalid_argument);
    CHECK_THROWS_AS(make_add_cand_instance(e, 0b100u, 1), std::invalid_argument);

    // spoiler ballots must use the same vote kind as the election
    CHECK_THROWS_AS(make_add_voter_instance(e, Profile{VoteKind::Approval, {}}, 1),
                    std::invalid_argument);
}
