#pragma once

// ------------------------------------------------------------------------
// Relations between control types: corpus-driven classification of focus-set
// inclusions, the matrix of established collapses/containments, the claim
// registry behind the verification suites, and the self-consistency
// properties (Property α, immunity).
// ------------------------------------------------------------------------

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ectk/control.hpp"
#include "ectk/corpus.hpp"
#include "ectk/elections.hpp"

namespace ectk {

// What a corpus of instances shows about a compatible pair (A, B).
// "Subset" reads left-to-right: evidence that A's focus sets sit strictly
// inside B's.  Strong incomparability means one single instance separated
// the pair in both directions.
enum class Verdict {
    CollapseConsistent,
    StrictSubsetEvidence,
    StrictSupersetEvidence,
    IncomparableEvidence,
    StronglyIncomparableEvidence,
};
const char* to_string(Verdict v);

struct DirectionWitness {
    int instance = 0;   // index into the corpus passed to classify_*
    int candidate = 0;  // focus candidate separating the pair
};

struct RelationEvidence {
    std::optional<DirectionWitness> left_minus_right;  // f(A) ∖ f(B) seen here
    std::optional<DirectionWitness> right_minus_left;
    std::optional<int> strong_instance;  // both directions on this instance

    Verdict verdict() const;
};

// Focus sets of two compatible types on one instance.
std::pair<CandMask, CandMask> compare_on_instance(Rule rule, const ControlType& a,
                                                  const ControlType& b,
                                                  const ReducedInstance& inst);

RelationEvidence classify_pair(Rule rule, const ControlType& a, const ControlType& b,
                               std::span<const CorpusEntry> corpus);

struct PairReport {
    ControlType a, b;
    RelationEvidence evidence;
};

// Every compatible pair, classified against the instances of its class.
// Focus profiles are computed once per instance and shared.
std::vector<PairReport> classify_all(Rule rule, std::span<const CorpusEntry> corpus);

// Deterministic text form of a classify_all run, one line per pair:
//   <system> <A> <B> <verdict> [a-b:<id>] [b-a:<id>] [strong:<id>]
std::string render_report(Rule rule, std::span<const PairReport> reports,
                          std::span<const CorpusEntry> corpus);

// ---- established relations ------------------------------------------------

enum class KnownRelation {
    Collapse,           // equal focus sets on every instance
    LeftSubsetOfRight,  // strict containment
    RightSubsetOfLeft,
    SeparationOnly,     // compatible, known separated, no containment
    Incompatible,
};

// Per-system matrix of established results over all 44 types: the collapse
// equivalence classes plus one-directional containments, closed under
// transitivity.
class KnownRelationMatrix {
  public:
    static const KnownRelationMatrix& of(Rule rule);

    KnownRelation relation(const ControlType& a, const ControlType& b) const;
    const std::vector<std::vector<ControlType>>& collapse_classes() const {
        return classes_;
    }
    int collapse_pair_count() const;
    int separation_pair_count() const;  // compatible pairs minus collapses

    // Does corpus evidence contradict the established relation?  (A strict
    // subset must never show a left-minus-right witness, a collapse must
    // show none at all.)
    bool consistent(const ControlType& a, const ControlType& b,
                    const RelationEvidence& ev) const;

  private:
    explicit KnownRelationMatrix(Rule rule);
    bool reach_[44][44] = {};  // reach_[i][j]: f_i ⊆ f_j established
    std::vector<std::vector<ControlType>> classes_;
};

// ---- claim registry ---------------------------------------------------------

// A checkable statement about focus sets under one voting system: either all
// listed types coincide, or types[0] is contained in types[1] (strict when a
// separating witness is known to exist).
struct Claim {
    std::string name;
    Rule rule;
    std::vector<ControlType> types;
    bool equality = false;
    bool strict = false;

    CompatClass cls() const { return compat_class(types.front()); }
};

const std::vector<Claim>& collapse_claims();
const std::vector<Claim>& containment_claims();

using InstanceSampler = std::function<ReducedInstance(std::uint64_t trial)>;

struct ClaimViolation {
    std::uint64_t trial = 0;
    ReducedInstance instance;
    ControlType a, b;
    CandMask fa = 0, fb = 0;
};

// Tests the claim on `trials` sampled instances; returns the first violation.
std::optional<ClaimViolation> check_claim(const Claim& claim,
                                          const InstanceSampler& sampler,
                                          std::uint64_t trials);

// ---- structural properties --------------------------------------------------

// Property α: every (unique) winner stays a (unique) winner in every
// subelection it takes part in.  Enumerates all candidate subsets; requires
// at most kMaxUniverse candidates.
bool property_alpha(Rule rule, const Election& e, WinnerModel model);

// Control types the voting system provably cannot benefit from: reaching
// the goal via the action implies the goal already held beforehand.
std::span<const ControlType> immune_types(Rule rule);

struct ImmunityViolation {
    int instance = 0;
    int candidate = 0;
};

// Checks "decide = yes implies the goal held with no action" over a corpus.
std::optional<ImmunityViolation> immunity_check(Rule rule, const ControlType& type,
                                                std::span<const CorpusEntry> corpus);

}  // namespace ectk
