#include "ectk/control.hpp"

#include <stdexcept>

namespace ectk {

namespace {

// Exhaustive enumeration is capped at 2^20 structures per action.
constexpr int kMaxEnumBits = 20;

const char* action_token(Action a) {
    switch (a) {
        case Action::AddCand: return "AC";
        case Action::UnlimitedAddCand: return "UAC";
        case Action::DeleteCand: return "DC";
        case Action::AddVoter: return "AV";
        case Action::DeleteVoter: return "DV";
        case Action::PartitionVoter: return "PV";
        case Action::PartitionCand: return "PC";
        case Action::RunoffPartitionCand: return "RPC";
    }
    return "?";
}

std::array<ControlType, 44> build_all_types() {
    std::array<ControlType, 44> out{};
    int i = 0;
    // the 24 partition types, CC block then DC block
    for (Goal g : {Goal::Constructive, Goal::Destructive})
        for (Action a : {Action::PartitionVoter, Action::PartitionCand,
                         Action::RunoffPartitionCand})
            for (TieRule t : {TieRule::Eliminate, TieRule::Promote})
                for (WinnerModel w : {WinnerModel::Unique, WinnerModel::Nonunique})
                    out[i++] = {g, a, t, w};
    auto block = [&](std::initializer_list<Action> actions) {
        for (Goal g : {Goal::Constructive, Goal::Destructive})
            for (Action a : actions)
                for (WinnerModel w : {WinnerModel::Unique, WinnerModel::Nonunique})
                    out[i++] = {g, a, TieRule::None, w};
    };
    block({Action::AddCand});
    block({Action::DeleteCand, Action::DeleteVoter});
    block({Action::AddVoter});
    block({Action::UnlimitedAddCand});
    return out;
}

const std::array<ControlType, 44> kAllTypes = build_all_types();

// [first, count) of each class inside kAllTypes
struct ClassSpan {
    int first, count;
};
constexpr ClassSpan class_span(CompatClass c) {
    switch (c) {
        case CompatClass::Partition: return {0, 24};
        case CompatClass::AddCand: return {24, 4};
        case CompatClass::Delete: return {28, 8};
        case CompatClass::AddVoter: return {36, 4};
        case CompatClass::UnlimitedAddCand: return {40, 4};
    }
    return {0, 0};
}

}  // namespace

std::string to_string(const ControlType& t) {
    std::string s = t.goal == Goal::Constructive ? "CC" : "DC";
    s += '-';
    s += action_token(t.action);
    if (is_partition_action(t.action))
        s += t.tie == TieRule::Eliminate ? "-TE" : "-TP";
    s += t.winner == WinnerModel::Unique ? "-UW" : "-NUW";
    return s;
}

std::optional<ControlType> control_type_from_string(std::string_view s) {
    for (const ControlType& t : kAllTypes)
        if (to_string(t) == s) return t;
    return std::nullopt;
}

const char* to_string(CompatClass c) {
    switch (c) {
        case CompatClass::Partition: return "partition";
        case CompatClass::AddCand: return "add-candidates";
        case CompatClass::Delete: return "delete";
        case CompatClass::AddVoter: return "add-voters";
        case CompatClass::UnlimitedAddCand: return "unlimited-add-candidates";
    }
    return "?";
}

CompatClass compat_class(Action a) {
    switch (a) {
        case Action::AddCand: return CompatClass::AddCand;
        case Action::UnlimitedAddCand: return CompatClass::UnlimitedAddCand;
        case Action::AddVoter: return CompatClass::AddVoter;
        case Action::DeleteCand:
        case Action::DeleteVoter: return CompatClass::Delete;
        default: return CompatClass::Partition;
    }
}

std::span<const ControlType> all_types() { return kAllTypes; }

std::span<const ControlType> class_types(CompatClass c) {
    ClassSpan s = class_span(c);
    return {kAllTypes.data() + s.first, static_cast<size_t>(s.count)};
}

int class_size(CompatClass c) { return class_span(c).count; }

int canonical_index(const ControlType& t) {
    for (int i = 0; i < 44; ++i)
        if (kAllTypes[i] == t) return i;
    throw std::invalid_argument("unknown control type");
}

int class_index(const ControlType& t) {
    return canonical_index(t) - class_span(compat_class(t)).first;
}

std::vector<std::pair<ControlType, ControlType>> compatible_pairs() {
    std::vector<std::pair<ControlType, ControlType>> out;
    for (CompatClass c : {CompatClass::Partition, CompatClass::AddCand,
                          CompatClass::Delete, CompatClass::AddVoter,
                          CompatClass::UnlimitedAddCand}) {
        auto types = class_types(c);
        for (size_t i = 0; i < types.size(); ++i)
            for (size_t j = i + 1; j < types.size(); ++j)
                out.emplace_back(types[i], types[j]);
    }
    return out;
}

// ---- instances -----------------------------------------------------------

namespace {

void check_spoiler_profile(const Election& e, const Profile& w) {
    if (w.kind != e.profile.kind)
        throw std::invalid_argument("spoiler ballots have a different kind");
    Election probe{e.names, w};
    validate(probe);
}

}  // namespace

ReducedInstance make_partition_instance(Election e) {
    validate(e);
    ReducedInstance r;
    r.cls = CompatClass::Partition;
    r.original = e.all();
    r.election = std::move(e);
    return r;
}

ReducedInstance make_add_cand_instance(Election universe, CandMask original, int k) {
    validate(universe);
    if (original & ~universe.all())
        throw std::invalid_argument("registered candidates outside the universe");
    if (k < 0) throw std::invalid_argument("negative addition limit");
    ReducedInstance r;
    r.cls = CompatClass::AddCand;
    r.original = original;
    r.limit = k;
    r.election = std::move(universe);
    return r;
}

ReducedInstance make_unlimited_add_cand_instance(Election universe, CandMask original) {
    ReducedInstance r = make_add_cand_instance(std::move(universe), original, 0);
    r.cls = CompatClass::UnlimitedAddCand;
    return r;
}

ReducedInstance make_delete_instance(Election e, int k) {
    validate(e);
    if (k < 0) throw std::invalid_argument("negative deletion limit");
    ReducedInstance r;
    r.cls = CompatClass::Delete;
    r.original = e.all();
    r.limit = k;
    r.election = std::move(e);
    return r;
}

ReducedInstance make_add_voter_instance(Election e, Profile spoilers, int k) {
    validate(e);
    check_spoiler_profile(e, spoilers);
    if (k < 0) throw std::invalid_argument("negative addition limit");
    ReducedInstance r;
    r.cls = CompatClass::AddVoter;
    r.original = e.all();
    r.limit = k;
    r.election = std::move(e);
    r.spoiler_votes = std::move(spoilers);
    return r;
}

ControlInstance inflate(ReducedInstance r, int focus) {
    if (focus < 0 || !((r.original >> focus) & 1u))
        throw std::invalid_argument("focus is not a registered candidate");
    return {std::move(r), focus};
}

// ---- two-stage evaluation ------------------------------------------------

namespace {

constexpr CandMask tie_filter(TieRule tie, CandMask w) {
    return tie == TieRule::Promote ? w : (mask_size(w) == 1 ? w : 0);
}

// Candidates this ballot gives one point to, relative to the full universe.
CandMask ballot_points(Rule rule, const Vote& v, CandMask present) {
    switch (rule) {
        case Rule::Plurality:
            for (std::uint8_t x : v.ranking)
                if (present & (CandMask{1} << x)) return CandMask{1} << x;
            return 0;
        case Rule::Veto:
            for (auto it = v.ranking.rbegin(); it != v.ranking.rend(); ++it)
                if (present & (CandMask{1} << *it))
                    return present & ~(CandMask{1} << *it);
            return 0;
        case Rule::Approval: return v.approvals & present;
    }
    return 0;
}

CandMask winners_from_scores(const int* sc, CandMask present) {
    int best = -1;
    CandMask win = 0;
    for (CandMask rest = present; rest;) {
        int x = std::countr_zero(rest);
        rest &= rest - 1;
        if (sc[x] > best) {
            best = sc[x];
            win = CandMask{1} << x;
        } else if (sc[x] == best) {
            win |= CandMask{1} << x;
        }
    }
    return win;
}

// Winners over the full candidate set when only the ballots in `voteMask`
// (plus those in `extra` from the spoiler profile, if given) are cast.
CandMask winners_votes(Rule rule, const Election& e, std::uint32_t voteMask,
                       const Profile* spoilers = nullptr, std::uint32_t extra = 0) {
    int sc[kMaxUniverse] = {};
    const CandMask all = e.all();
    auto tally = [&](const Profile& pr, std::uint32_t mask) {
        for (std::uint32_t rest = mask; rest;) {
            int i = std::countr_zero(rest);
            rest &= rest - 1;
            for (CandMask pts = ballot_points(rule, pr.votes[i], all); pts;) {
                ++sc[std::countr_zero(pts)];
                pts &= pts - 1;
            }
        }
    };
    tally(e.profile, voteMask);
    if (spoilers) tally(*spoilers, extra);
    return winners_from_scores(sc, all);
}

void check_partition_args(Action action, TieRule tie) {
    if (!is_partition_action(action))
        throw std::invalid_argument("not a partition action");
    if (tie == TieRule::None)
        throw std::invalid_argument("partition actions need a tie-handling rule");
}

}  // namespace

CandMask two_stage_eval(Rule rule, Action action, TieRule tie, const Election& e,
                        std::uint32_t side1, SubsetWinners& memo) {
    check_partition_args(action, tie);
    const CandMask all = e.all();
    if (action == Action::PartitionVoter) {
        const int n = e.profile.size();
        if (n > 31) throw std::invalid_argument("too many ballots to partition");
        const std::uint32_t votes = n == 0 ? 0 : (std::uint32_t{1} << n) - 1;
        if (side1 & ~votes) throw std::invalid_argument("ballot group out of range");
        CandMask s1 = tie_filter(tie, winners_votes(rule, e, side1));
        CandMask s2 = tie_filter(tie, winners_votes(rule, e, votes & ~side1));
        return memo(s1 | s2);
    }
    if (side1 & ~all) throw std::invalid_argument("candidate group out of range");
    CandMask s1 = tie_filter(tie, memo(side1));
    if (action == Action::PartitionCand) return memo(s1 | (all & ~side1));
    CandMask s2 = tie_filter(tie, memo(all & ~side1));
    return memo(s1 | s2);
}

CandMask two_stage_eval(Rule rule, Action action, TieRule tie, const Election& e,
                        std::uint32_t side1) {
    SubsetWinners memo(rule, e);
    return two_stage_eval(rule, action, tie, e, side1, memo);
}

// ---- decide ----------------------------------------------------------------

namespace {

void check_instance(Rule rule, const ReducedInstance& r) {
    if (r.election.profile.kind != vote_kind(rule))
        throw std::invalid_argument("ballot kind does not match the voting system");
    if (r.cls == CompatClass::AddVoter && r.spoiler_votes.kind != vote_kind(rule))
        throw std::invalid_argument("spoiler ballot kind does not match the voting system");
}

void check_enum_width(int bits, const char* what) {
    if (bits > kMaxEnumBits)
        throw std::invalid_argument(std::string("instance too large to enumerate: ") + what);
}

std::vector<int> mask_indices(std::uint32_t m) {
    std::vector<int> out;
    for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
}

}  // namespace

DecideResult decide(Rule rule, const ControlType& type, const ControlInstance& inst) {
    const ReducedInstance& r = inst.reduced;
    if (compat_class(type) != r.cls)
        throw std::invalid_argument("instance shape does not fit control type " +
                                    to_string(type));
    check_instance(rule, r);
    const Election& e = r.election;
    const CandMask all = e.all();
    const int p = inst.focus;
    auto ok = [&](CandMask w) { return goal_holds(type.goal, type.winner, w, p); };
    auto hit = [](std::uint32_t chosen) {
        return DecideResult{true, mask_indices(chosen)};
    };

    switch (type.action) {
        case Action::AddCand:
        case Action::UnlimitedAddCand: {
            const CandMask pool = r.spoiler_cands();
            check_enum_width(mask_size(pool), "spoiler candidates");
            const bool bounded = type.action == Action::AddCand;
            SubsetWinners memo(rule, e);
            for (CandMask s = 0;; s = (s - pool) & pool) {
                if ((!bounded || mask_size(s) <= r.limit) && ok(memo(r.original | s)))
                    return hit(s);
                if (s == pool) break;
            }
            return {};
        }
        case Action::DeleteCand: {
            const CandMask pool = all & ~(CandMask{1} << p);
            check_enum_width(mask_size(pool), "candidates");
            SubsetWinners memo(rule, e);
            for (CandMask s = 0;; s = (s - pool) & pool) {
                if (mask_size(s) <= r.limit && ok(memo(all & ~s))) return hit(s);
                if (s == pool) break;
            }
            return {};
        }
        case Action::DeleteVoter: {
            const int n = e.profile.size();
            check_enum_width(n, "ballots");
            const std::uint32_t votes = n == 0 ? 0 : (std::uint32_t{1} << n) - 1;
            for (std::uint32_t s = 0;; ++s) {
                if (std::popcount(s) <= r.limit && ok(winners_votes(rule, e, votes & ~s)))
                    return hit(s);
                if (s == votes) break;
            }
            return {};
        }
        case Action::AddVoter: {
            const int n = r.spoiler_votes.size();
            check_enum_width(n, "spoiler ballots");
            const std::uint32_t base =
                e.profile.size() == 0 ? 0 : (std::uint32_t{1} << e.profile.size()) - 1;
            const std::uint32_t pool = n == 0 ? 0 : (std::uint32_t{1} << n) - 1;
            if (e.profile.size() > 31) throw std::invalid_argument("too many ballots");
            for (std::uint32_t s = 0;; ++s) {
                if (std::popcount(s) <= r.limit &&
                    ok(winners_votes(rule, e, base, &r.spoiler_votes, s)))
                    return hit(s);
                if (s == pool) break;
            }
            return {};
        }
        case Action::PartitionVoter: {
            const int n = e.profile.size();
            check_enum_width(n, "ballots");
            const std::uint32_t votes = n == 0 ? 0 : (std::uint32_t{1} << n) - 1;
            SubsetWinners memo(rule, e);
            for (std::uint32_t s = 0;; ++s) {
                if (ok(two_stage_eval(rule, type.action, type.tie, e, s, memo)))
                    return hit(s);
                if (s == votes) break;
            }
            return {};
        }
        case Action::PartitionCand:
        case Action::RunoffPartitionCand: {
            check_enum_width(e.universe_size(), "candidates");
            SubsetWinners memo(rule, e);
            for (CandMask s = 0;; ++s) {
                if (ok(two_stage_eval(rule, type.action, type.tie, e, s, memo)))
                    return hit(s);
                if (s == all) break;
            }
            return {};
        }
    }
    return {};
}

// ---- focus profiles --------------------------------------------------------

namespace {

// Per-structure goal bookkeeping.  `won` is the final winner set, `eligible`
// the candidates allowed as focus for that structure.  One OR per goal/model
// pair replaces a loop over candidates.
struct GoalAcc {
    CandMask cc_uw = 0, cc_nuw = 0, dc_uw = 0, dc_nuw = 0;

    void add(CandMask won, CandMask eligible) {
        const CandMask sole = mask_size(won) == 1 ? won : 0;
        cc_nuw |= won & eligible;
        dc_nuw |= eligible & ~won;
        cc_uw |= sole & eligible;
        dc_uw |= eligible & ~sole;
    }
    CandMask get(Goal g, WinnerModel w) const {
        if (g == Goal::Constructive)
            return w == WinnerModel::Unique ? cc_uw : cc_nuw;
        return w == WinnerModel::Unique ? dc_uw : dc_nuw;
    }
};

void store(FocusProfile& fp, const ControlType& t, CandMask set) {
    fp.sets[class_index(t)] = set;
}

// One pass over all 2^|V| ballot splits evaluates PV under both tie rules.
// Group scores are maintained incrementally along a Gray-code walk.
void sweep_partition_voter(Rule rule, const Election& e, SubsetWinners& memo,
                           GoalAcc& te, GoalAcc& tp) {
    const int n = e.profile.size();
    check_enum_width(n, "ballots");
    const CandMask all = e.all();
    std::vector<CandMask> points(n);
    int sc1[kMaxUniverse] = {}, scAll[kMaxUniverse] = {};
    for (int i = 0; i < n; ++i) {
        points[i] = ballot_points(rule, e.profile.votes[i], all);
        for (CandMask m = points[i]; m; m &= m - 1) ++scAll[std::countr_zero(m)];
    }
    int sc2[kMaxUniverse];
    for (int i = 0; i < kMaxUniverse; ++i) sc2[i] = scAll[i];

    auto visit = [&]() {
        const CandMask w1 = winners_from_scores(sc1, all);
        const CandMask w2 = winners_from_scores(sc2, all);
        te.add(memo(tie_filter(TieRule::Eliminate, w1) |
                    tie_filter(TieRule::Eliminate, w2)),
               all);
        tp.add(memo(w1 | w2), all);
    };
    visit();  // empty first group
    std::uint32_t cur = 0;
    for (std::uint64_t g = 1; g < (std::uint64_t{1} << n); ++g) {
        const int bit = std::countr_zero(g);  // Gray-code step flips this ballot
        cur ^= std::uint32_t{1} << bit;
        const int dir = (cur >> bit) & 1u ? 1 : -1;
        for (CandMask m = points[bit]; m; m &= m - 1) {
            sc1[std::countr_zero(m)] += dir;
            sc2[std::countr_zero(m)] -= dir;
        }
        visit();
    }
}

// One pass over all 2^|C| candidate splits evaluates PC and RPC under both
// tie rules.
void sweep_partition_cand(Rule rule, const Election& e, SubsetWinners& memo,
                          GoalAcc& pc_te, GoalAcc& pc_tp, GoalAcc& rpc_te,
                          GoalAcc& rpc_tp) {
    const int m = e.universe_size();
    check_enum_width(m, "candidates");
    const CandMask all = e.all();
    for (CandMask s = 0;; ++s) {
        const CandMask w1 = memo(s);
        const CandMask w2 = memo(all & ~s);
        const CandMask rest = all & ~s;
        pc_te.add(memo(tie_filter(TieRule::Eliminate, w1) | rest), all);
        pc_tp.add(memo(w1 | rest), all);
        rpc_te.add(memo(tie_filter(TieRule::Eliminate, w1) |
                        tie_filter(TieRule::Eliminate, w2)),
                   all);
        rpc_tp.add(memo(w1 | w2), all);
        if (s == all) break;
    }
}

}  // namespace

CandMask FocusProfile::operator[](const ControlType& t) const {
    if (compat_class(t) != cls)
        throw std::invalid_argument("type " + to_string(t) +
                                    " is outside this instance's class");
    return sets[class_index(t)];
}

FocusProfile focus_profile(Rule rule, const ReducedInstance& r) {
    check_instance(rule, r);
    FocusProfile fp;
    fp.cls = r.cls;
    const Election& e = r.election;
    const CandMask all = e.all();

    switch (r.cls) {
        case CompatClass::Partition: {
            SubsetWinners memo(rule, e);
            GoalAcc pv_te, pv_tp, pc_te, pc_tp, rpc_te, rpc_tp;
            sweep_partition_voter(rule, e, memo, pv_te, pv_tp);
            sweep_partition_cand(rule, e, memo, pc_te, pc_tp, rpc_te, rpc_tp);
            for (const ControlType& t : class_types(CompatClass::Partition)) {
                const GoalAcc* acc = nullptr;
                if (t.action == Action::PartitionVoter)
                    acc = t.tie == TieRule::Eliminate ? &pv_te : &pv_tp;
                else if (t.action == Action::PartitionCand)
                    acc = t.tie == TieRule::Eliminate ? &pc_te : &pc_tp;
                else
                    acc = t.tie == TieRule::Eliminate ? &rpc_te : &rpc_tp;
                store(fp, t, acc->get(t.goal, t.winner));
            }
            break;
        }
        case CompatClass::AddCand:
        case CompatClass::UnlimitedAddCand: {
            const CandMask pool = r.spoiler_cands();
            check_enum_width(mask_size(pool), "spoiler candidates");
            const bool bounded = r.cls == CompatClass::AddCand;
            SubsetWinners memo(rule, e);
            GoalAcc acc;
            for (CandMask s = 0;; s = (s - pool) & pool) {
                if (!bounded || mask_size(s) <= r.limit)
                    acc.add(memo(r.original | s), r.original);
                if (s == pool) break;
            }
            for (const ControlType& t : class_types(r.cls))
                store(fp, t, acc.get(t.goal, t.winner));
            break;
        }
        case CompatClass::Delete: {
            check_enum_width(e.universe_size(), "candidates");
            check_enum_width(e.profile.size(), "ballots");
            SubsetWinners memo(rule, e);
            GoalAcc cand, vote;
            for (CandMask s = 0;; ++s) {
                // deleted candidates are not eligible as focus
                if (mask_size(s) <= r.limit) cand.add(memo(all & ~s), all & ~s);
                if (s == all) break;
            }
            const int n = e.profile.size();
            const std::uint32_t votes = n == 0 ? 0 : (std::uint32_t{1} << n) - 1;
            for (std::uint32_t s = 0;; ++s) {
                if (std::popcount(s) <= r.limit)
                    vote.add(winners_votes(rule, e, votes & ~s), all);
                if (s == votes) break;
            }
            for (const ControlType& t : class_types(CompatClass::Delete)) {
                const GoalAcc& acc = t.action == Action::DeleteCand ? cand : vote;
                store(fp, t, acc.get(t.goal, t.winner));
            }
            break;
        }
        case CompatClass::AddVoter: {
            const int n = r.spoiler_votes.size();
            check_enum_width(n, "spoiler ballots");
            if (e.profile.size() > 31) throw std::invalid_argument("too many ballots");
            const std::uint32_t base =
                e.profile.size() == 0 ? 0 : (std::uint32_t{1} << e.profile.size()) - 1;
            const std::uint32_t pool = n == 0 ? 0 : (std::uint32_t{1} << n) - 1;
            GoalAcc acc;
            for (std::uint32_t s = 0;; ++s) {
                if (std::popcount(s) <= r.limit)
                    acc.add(winners_votes(rule, e, base, &r.spoiler_votes, s), all);
                if (s == pool) break;
            }
            for (const ControlType& t : class_types(CompatClass::AddVoter))
                store(fp, t, acc.get(t.goal, t.winner));
            break;
        }
    }
    return fp;
}

CandMask focus_set(Rule rule, const ControlType& type, const ReducedInstance& inst) {
    if (compat_class(type) != inst.cls)
        throw std::invalid_argument("instance shape does not fit control type " +
                                    to_string(type));
    return focus_profile(rule, inst)[type];
}

}  // namespace ectk
