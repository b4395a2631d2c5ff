#pragma once

// ------------------------------------------------------------------------
// The 44 standard electoral control types and their exact decision
// procedures.
//
// A control type combines a goal (constructive CC / destructive DC), one of
// eight attack actions, a tie-handling rule for the two-stage partition
// actions (TE = ties eliminate, TP = ties promote), and a winner model
// (UW = unique winner, NUW = nonunique winner).  Canonical names look like
// "CC-AV-UW" or "DC-RPC-TE-NUW"; the deleting-candidates action prints as
// "DC" and is told apart from the destructive goal by position.
//
// Types that consume the same input shape form a compatibility class; only
// types in the same class can be compared on a common instance.
// ------------------------------------------------------------------------

#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ectk/elections.hpp"

namespace ectk {

enum class Action : std::uint8_t {
    AddCand,           // AC:  add up to k spoiler candidates
    UnlimitedAddCand,  // UAC: add any subset of spoiler candidates
    DeleteCand,        // DC:  delete up to k candidates (never the focus)
    AddVoter,          // AV:  add up to k spoiler votes
    DeleteVoter,       // DV:  delete up to k votes
    PartitionVoter,    // PV:  two-stage election over a vote split
    PartitionCand,     // PC:  one semifinal against a bye group
    RunoffPartitionCand,  // RPC: two semifinals
};

enum class Goal : std::uint8_t { Constructive, Destructive };
enum class TieRule : std::uint8_t { None, Eliminate, Promote };
enum class WinnerModel : std::uint8_t { Unique, Nonunique };

constexpr bool is_partition_action(Action a) {
    return a == Action::PartitionVoter || a == Action::PartitionCand ||
           a == Action::RunoffPartitionCand;
}

struct ControlType {
    Goal goal = Goal::Constructive;
    Action action = Action::AddCand;
    TieRule tie = TieRule::None;  // None exactly for non-partition actions
    WinnerModel winner = WinnerModel::Unique;

    friend bool operator==(const ControlType&, const ControlType&) = default;
};

std::string to_string(const ControlType& t);
std::optional<ControlType> control_type_from_string(std::string_view s);

enum class CompatClass : std::uint8_t {
    Partition,         // input (C, V): PV, PC, RPC under both goals/ties/models
    AddCand,           // input (C, A, V, k)
    Delete,            // input (C, V, k): deleting candidates or voters
    AddVoter,          // input (C, V, W, k)
    UnlimitedAddCand,  // input (C, A, V)
};

const char* to_string(CompatClass c);
CompatClass compat_class(Action a);
inline CompatClass compat_class(const ControlType& t) { return compat_class(t.action); }

// All 44 types in canonical order: the 24 partition types (CC then DC; PV,
// PC, RPC; TE before TP; UW before NUW), then the AC, deleting, AV, and UAC
// blocks.
std::span<const ControlType> all_types();
std::span<const ControlType> class_types(CompatClass c);
int class_size(CompatClass c);
int canonical_index(const ControlType& t);            // position in all_types()
int class_index(const ControlType& t);                // position in class_types()
std::vector<std::pair<ControlType, ControlType>> compatible_pairs();  // 322

// A control problem input without the focus candidate.  One flat struct
// stands in for the per-class input shapes; `cls` says which fields are
// live and the make_* constructors enforce it.
//   Partition:        election
//   AddCand:          election over C ∪ A, original = C, limit = k
//   Delete:           election, limit = k
//   AddVoter:         election, spoiler_votes = W, limit = k
//   UnlimitedAddCand: election over C ∪ A, original = C
struct ReducedInstance {
    CompatClass cls = CompatClass::Partition;
    Election election;
    CandMask original = 0;  // the qualified candidates C (focus range)
    Profile spoiler_votes;
    int limit = 0;

    CandMask registered() const { return original; }
    CandMask spoiler_cands() const { return election.all() & ~original; }
};

ReducedInstance make_partition_instance(Election e);
ReducedInstance make_add_cand_instance(Election universe, CandMask original, int k);
ReducedInstance make_unlimited_add_cand_instance(Election universe, CandMask original);
ReducedInstance make_delete_instance(Election e, int k);
ReducedInstance make_add_voter_instance(Election e, Profile spoilers, int k);

struct ControlInstance {
    ReducedInstance reduced;
    int focus = 0;  // candidate index within reduced.original
};

// Attaches a focus candidate; throws if it is not a registered candidate.
ControlInstance inflate(ReducedInstance r, int focus);

// Does the focus candidate meet the goal given this winner set?
//   CC-UW: sole winner    CC-NUW: a winner
//   DC-UW: not sole winner  DC-NUW: not a winner
constexpr bool goal_holds(Goal g, WinnerModel w, CandMask winners, int focus) {
    const bool member = (winners >> focus) & 1u;
    const bool sole = winners == (CandMask{1} << focus);
    if (g == Goal::Constructive) return w == WinnerModel::Unique ? sole : member;
    return w == WinnerModel::Unique ? !sole : !member;
}

// Final-round winners of a two-stage election.  `side1` is the first group
// of the partition: a vote-index mask for PV, a candidate mask for PC/RPC.
// Under TE a semifinal forwards its winner only when unique; under TP all
// semifinal winners advance.  The final round runs the full profile over
// the advancing candidates; PC additionally gives the second group a bye.
CandMask two_stage_eval(Rule rule, Action action, TieRule tie, const Election& e,
                        std::uint32_t side1, SubsetWinners& memo);
CandMask two_stage_eval(Rule rule, Action action, TieRule tie, const Election& e,
                        std::uint32_t side1);

// Exact decision by exhaustive enumeration (subsets and partitions in
// binary-counter order, so the reported witness is reproducible).  On
// success, `witness` lists the chosen elements by index: spoiler candidates
// added, candidates/votes deleted, spoiler votes added, or — for partition
// actions — the members of the first group.
struct DecideResult {
    bool success = false;
    std::optional<std::vector<int>> witness;
};

DecideResult decide(Rule rule, const ControlType& type, const ControlInstance& inst);

// All registered candidates the controller can reach the goal for.
CandMask focus_set(Rule rule, const ControlType& type, const ReducedInstance& inst);

// focus_set for every type in the instance's class, sharing one
// enumeration sweep per action so cross-type comparisons stay cheap.
struct FocusProfile {
    CompatClass cls = CompatClass::Partition;
    std::array<CandMask, 24> sets{};

    CandMask operator[](const ControlType& t) const;
};

FocusProfile focus_profile(Rule rule, const ReducedInstance& inst);

}  // namespace ectk
