#include "ectk/relations.hpp"

#include <stdexcept>

namespace ectk {

namespace {

ControlType T(const char* s) {
    auto t = control_type_from_string(s);
    if (!t) throw std::logic_error(std::string("bad type literal ") + s);
    return *t;
}

}  // namespace

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::CollapseConsistent: return "CollapseConsistent";
        case Verdict::StrictSubsetEvidence: return "StrictSubsetEvidence";
        case Verdict::StrictSupersetEvidence: return "StrictSupersetEvidence";
        case Verdict::IncomparableEvidence: return "IncomparableEvidence";
        case Verdict::StronglyIncomparableEvidence:
            return "StronglyIncomparableEvidence";
    }
    return "?";
}

Verdict RelationEvidence::verdict() const {
    if (strong_instance) return Verdict::StronglyIncomparableEvidence;
    if (left_minus_right && right_minus_left) return Verdict::IncomparableEvidence;
    if (right_minus_left) return Verdict::StrictSubsetEvidence;
    if (left_minus_right) return Verdict::StrictSupersetEvidence;
    return Verdict::CollapseConsistent;
}

std::pair<CandMask, CandMask> compare_on_instance(Rule rule, const ControlType& a,
                                                  const ControlType& b,
                                                  const ReducedInstance& inst) {
    if (compat_class(a) != compat_class(b))
        throw std::invalid_argument("types " + to_string(a) + " and " + to_string(b) +
                                    " are incompatible");
    FocusProfile fp = focus_profile(rule, inst);
    const CandMask fa = fp[a], fb = fp[b];
    return {fa & ~fb, fb & ~fa};
}

namespace {

void accumulate(RelationEvidence& ev, int index, CandMask ab, CandMask ba) {
    if (ab && !ev.left_minus_right)
        ev.left_minus_right = DirectionWitness{index, std::countr_zero(ab)};
    if (ba && !ev.right_minus_left)
        ev.right_minus_left = DirectionWitness{index, std::countr_zero(ba)};
    if (ab && ba && !ev.strong_instance) ev.strong_instance = index;
}

}  // namespace

RelationEvidence classify_pair(Rule rule, const ControlType& a, const ControlType& b,
                               std::span<const CorpusEntry> corpus) {
    if (compat_class(a) != compat_class(b))
        throw std::invalid_argument("types " + to_string(a) + " and " + to_string(b) +
                                    " are incompatible");
    RelationEvidence ev;
    for (size_t i = 0; i < corpus.size(); ++i) {
        if (corpus[i].instance.cls != compat_class(a)) continue;
        auto [ab, ba] = compare_on_instance(rule, a, b, corpus[i].instance);
        accumulate(ev, static_cast<int>(i), ab, ba);
    }
    return ev;
}

std::vector<PairReport> classify_all(Rule rule, std::span<const CorpusEntry> corpus) {
    // one focus profile per instance, shared across its class's pairs
    std::vector<FocusProfile> profiles;
    profiles.reserve(corpus.size());
    for (const CorpusEntry& entry : corpus)
        profiles.push_back(focus_profile(rule, entry.instance));

    std::vector<PairReport> out;
    for (auto& [a, b] : compatible_pairs()) {
        RelationEvidence ev;
        for (size_t i = 0; i < corpus.size(); ++i) {
            if (corpus[i].instance.cls != compat_class(a)) continue;
            const CandMask fa = profiles[i][a], fb = profiles[i][b];
            accumulate(ev, static_cast<int>(i), fa & ~fb, fb & ~fa);
        }
        out.push_back({a, b, ev});
    }
    return out;
}

std::string render_report(Rule rule, std::span<const PairReport> reports,
                          std::span<const CorpusEntry> corpus) {
    std::string out;
    for (const PairReport& r : reports) {
        out += to_string(rule);
        out += ' ';
        out += to_string(r.a);
        out += ' ';
        out += to_string(r.b);
        out += ' ';
        out += to_string(r.evidence.verdict());
        if (r.evidence.left_minus_right)
            out += " a-b:" + corpus[r.evidence.left_minus_right->instance].id;
        if (r.evidence.right_minus_left)
            out += " b-a:" + corpus[r.evidence.right_minus_left->instance].id;
        if (r.evidence.strong_instance)
            out += " strong:" + corpus[*r.evidence.strong_instance].id;
        out += '\n';
    }
    return out;
}

// ---- established relations ---------------------------------------------------

KnownRelationMatrix::KnownRelationMatrix(Rule rule) {
    for (int i = 0; i < 44; ++i) reach_[i][i] = true;

    auto contain = [&](const char* sub, const char* super) {
        reach_[canonical_index(T(sub))][canonical_index(T(super))] = true;
    };
    auto equal_class = [&](std::initializer_list<const char*> types) {
        for (const char* x : types)
            for (const char* y : types) {
                reach_[canonical_index(T(x))][canonical_index(T(y))] = true;
            }
    };

    // Holds for every election system:
    //  - destructive TE candidate-partition collapse (4 types) and the
    //    TP-NUW pair
    //  - the unique-winner focus set sits inside the nonunique one for
    //    constructive types, and the other way around for destructive ones
    //  - DC-RPC-TP-UW and DC-PC-TP-UW are contained in DC-RPC-TE-NUW
    equal_class({"DC-RPC-TE-NUW", "DC-RPC-TE-UW", "DC-PC-TE-NUW", "DC-PC-TE-UW"});
    equal_class({"DC-RPC-TP-NUW", "DC-PC-TP-NUW"});
    for (const ControlType& t : all_types()) {
        if (t.winner != WinnerModel::Unique) continue;
        ControlType nu = t;
        nu.winner = WinnerModel::Nonunique;
        int i = canonical_index(t), j = canonical_index(nu);
        if (t.goal == Goal::Constructive)
            reach_[i][j] = true;
        else
            reach_[j][i] = true;
    }
    contain("DC-RPC-TP-UW", "DC-RPC-TE-NUW");
    contain("DC-PC-TP-UW", "DC-RPC-TE-NUW");

    if (rule == Rule::Veto) {
        equal_class({"DC-PV-TE-UW", "DC-PV-TE-NUW"});
        contain("DC-PV-TP-UW", "DC-PV-TE-NUW");
        contain("DC-PV-TP-NUW", "DC-PV-TE-NUW");
        contain("DC-RPC-TE-NUW", "DC-PV-TE-NUW");
        contain("DC-RPC-TP-UW", "DC-PV-TE-NUW");
        contain("DC-RPC-TP-NUW", "DC-PV-TE-NUW");
        contain("DC-PC-TP-UW", "DC-PV-TE-NUW");
    }

    if (rule == Rule::Approval) {
        equal_class({"DC-PC-TP-UW", "DC-PC-TE-UW", "DC-RPC-TE-UW", "DC-RPC-TE-NUW",
                     "DC-PC-TE-NUW", "DC-RPC-TP-UW"});
        equal_class({"DC-PV-TE-UW", "DC-PV-TE-NUW"});
        equal_class({"CC-PC-TP-UW", "CC-RPC-TP-UW"});
        equal_class({"CC-PC-TP-NUW", "CC-RPC-TP-NUW"});
        equal_class({"CC-PC-TE-UW", "CC-RPC-TE-UW"});
        equal_class({"CC-PC-TE-NUW", "CC-RPC-TE-NUW"});
        contain("DC-DC-UW", "DC-DV-UW");
        contain("DC-DC-NUW", "DC-DV-NUW");
        contain("DC-DC-NUW", "DC-DV-UW");
        for (const char* t : {"CC-PC-TE-UW", "CC-PC-TE-NUW", "CC-RPC-TE-UW",
                              "CC-RPC-TE-NUW", "CC-PV-TE-UW", "CC-PV-TE-NUW",
                              "CC-PV-TP-UW", "CC-PV-TP-NUW"})
            contain("CC-PC-TP-UW", t);
        for (const char* t : {"CC-PC-TE-NUW", "CC-RPC-TE-NUW", "CC-PV-TP-NUW"})
            contain("CC-PC-TP-NUW", t);
        contain("DC-PV-TP-UW", "DC-PV-TE-NUW");
        contain("DC-RPC-TE-NUW", "DC-PV-TP-UW");
        contain("DC-RPC-TE-NUW", "DC-PV-TE-NUW");
    }

    // transitive closure
    for (int k = 0; k < 44; ++k)
        for (int i = 0; i < 44; ++i) {
            if (!reach_[i][k]) continue;
            for (int j = 0; j < 44; ++j)
                if (reach_[k][j]) reach_[i][j] = true;
        }

    // collapse classes: strongly connected pairs within a compatibility class
    bool seen[44] = {};
    for (int i = 0; i < 44; ++i) {
        if (seen[i]) continue;
        std::vector<ControlType> cls{all_types()[i]};
        seen[i] = true;
        for (int j = i + 1; j < 44; ++j)
            if (reach_[i][j] && reach_[j][i]) {
                cls.push_back(all_types()[j]);
                seen[j] = true;
            }
        if (cls.size() > 1) classes_.push_back(std::move(cls));
    }
}

const KnownRelationMatrix& KnownRelationMatrix::of(Rule rule) {
    static const KnownRelationMatrix plurality(Rule::Plurality);
    static const KnownRelationMatrix veto(Rule::Veto);
    static const KnownRelationMatrix approval(Rule::Approval);
    switch (rule) {
        case Rule::Plurality: return plurality;
        case Rule::Veto: return veto;
        case Rule::Approval: return approval;
    }
    throw std::logic_error("unreachable");
}

KnownRelation KnownRelationMatrix::relation(const ControlType& a,
                                            const ControlType& b) const {
    if (compat_class(a) != compat_class(b)) return KnownRelation::Incompatible;
    const int i = canonical_index(a), j = canonical_index(b);
    if (reach_[i][j] && reach_[j][i]) return KnownRelation::Collapse;
    if (reach_[i][j]) return KnownRelation::LeftSubsetOfRight;
    if (reach_[j][i]) return KnownRelation::RightSubsetOfLeft;
    return KnownRelation::SeparationOnly;
}

int KnownRelationMatrix::collapse_pair_count() const {
    int n = 0;
    for (const auto& cls : classes_) {
        const int s = static_cast<int>(cls.size());
        n += s * (s - 1) / 2;
    }
    return n;
}

int KnownRelationMatrix::separation_pair_count() const {
    return static_cast<int>(compatible_pairs().size()) - collapse_pair_count();
}

bool KnownRelationMatrix::consistent(const ControlType& a, const ControlType& b,
                                     const RelationEvidence& ev) const {
    switch (relation(a, b)) {
        case KnownRelation::Collapse:
            return !ev.left_minus_right && !ev.right_minus_left;
        case KnownRelation::LeftSubsetOfRight: return !ev.left_minus_right;
        case KnownRelation::RightSubsetOfLeft: return !ev.right_minus_left;
        default: return true;
    }
}

// ---- claim registry ----------------------------------------------------------

namespace {

Claim equality_claim(Rule rule, std::initializer_list<const char*> types) {
    Claim c;
    c.rule = rule;
    c.equality = true;
    for (const char* s : types) {
        if (!c.name.empty()) c.name += " = ";
        c.name += s;
        c.types.push_back(T(s));
    }
    return c;
}

Claim subset_claim(Rule rule, const char* sub, const char* super, bool strict) {
    Claim c;
    c.rule = rule;
    c.name = std::string(sub) + (strict ? " < " : " <= ") + super;
    c.types = {T(sub), T(super)};
    c.strict = strict;
    return c;
}

std::vector<Claim> build_collapse_claims() {
    std::vector<Claim> out;
    for (Rule rule : {Rule::Plurality, Rule::Veto, Rule::Approval}) {
        out.push_back(equality_claim(
            rule, {"DC-RPC-TE-NUW", "DC-RPC-TE-UW", "DC-PC-TE-NUW", "DC-PC-TE-UW"}));
        out.push_back(equality_claim(rule, {"DC-RPC-TP-NUW", "DC-PC-TP-NUW"}));
    }
    out.push_back(equality_claim(Rule::Veto, {"DC-PV-TE-UW", "DC-PV-TE-NUW"}));
    out.push_back(equality_claim(
        Rule::Approval, {"DC-PC-TP-UW", "DC-PC-TE-UW", "DC-RPC-TE-UW",
                         "DC-RPC-TE-NUW", "DC-PC-TE-NUW"}));
    out.push_back(equality_claim(Rule::Approval, {"DC-RPC-TP-UW", "DC-PC-TP-UW"}));
    out.push_back(equality_claim(Rule::Approval, {"CC-PC-TP-UW", "CC-RPC-TP-UW"}));
    out.push_back(equality_claim(Rule::Approval, {"CC-PC-TP-NUW", "CC-RPC-TP-NUW"}));
    out.push_back(equality_claim(Rule::Approval, {"DC-PV-TE-UW", "DC-PV-TE-NUW"}));
    out.push_back(equality_claim(Rule::Approval, {"CC-PC-TE-NUW", "CC-RPC-TE-NUW"}));
    out.push_back(equality_claim(Rule::Approval, {"CC-PC-TE-UW", "CC-RPC-TE-UW"}));
    return out;
}

std::vector<Claim> build_containment_claims() {
    std::vector<Claim> out;
    for (Rule rule : {Rule::Plurality, Rule::Veto, Rule::Approval}) {
        out.push_back(subset_claim(rule, "DC-RPC-TP-UW", "DC-RPC-TE-NUW", false));
        out.push_back(subset_claim(rule, "DC-PC-TP-UW", "DC-RPC-TE-NUW", false));
        // unique-winner success implies nonunique success (and dually for
        // destructive goals), for each of the 11 action variants
        for (const ControlType& t : all_types()) {
            if (t.winner != WinnerModel::Unique) continue;
            ControlType nu = t;
            nu.winner = WinnerModel::Nonunique;
            if (t.goal == Goal::Constructive)
                out.push_back(
                    subset_claim(rule, to_string(t).c_str(), to_string(nu).c_str(), false));
            else
                out.push_back(
                    subset_claim(rule, to_string(nu).c_str(), to_string(t).c_str(), false));
        }
    }
    out.push_back(subset_claim(Rule::Veto, "DC-PV-TP-UW", "DC-PV-TE-NUW", true));
    out.push_back(subset_claim(Rule::Veto, "DC-PV-TP-NUW", "DC-PV-TE-NUW", true));
    out.push_back(subset_claim(Rule::Veto, "DC-RPC-TE-NUW", "DC-PV-TE-NUW", true));
    out.push_back(subset_claim(Rule::Veto, "DC-RPC-TP-UW", "DC-PV-TE-NUW", true));
    out.push_back(subset_claim(Rule::Veto, "DC-RPC-TP-NUW", "DC-PV-TE-NUW", true));
    out.push_back(subset_claim(Rule::Veto, "DC-PC-TP-UW", "DC-PV-TE-NUW", true));

    out.push_back(subset_claim(Rule::Approval, "DC-DC-UW", "DC-DV-UW", true));
    out.push_back(subset_claim(Rule::Approval, "DC-DC-NUW", "DC-DV-NUW", true));
    out.push_back(subset_claim(Rule::Approval, "DC-DC-NUW", "DC-DV-UW", true));
    for (const char* t : {"CC-PC-TE-UW", "CC-PC-TE-NUW", "CC-RPC-TE-UW",
                          "CC-RPC-TE-NUW", "CC-PV-TE-UW", "CC-PV-TE-NUW",
                          "CC-PV-TP-UW", "CC-PV-TP-NUW"})
        out.push_back(subset_claim(Rule::Approval, "CC-PC-TP-UW", t, true));
    for (const char* t : {"CC-PC-TE-NUW", "CC-RPC-TE-NUW", "CC-PV-TP-NUW"})
        out.push_back(subset_claim(Rule::Approval, "CC-PC-TP-NUW", t, true));
    out.push_back(subset_claim(Rule::Approval, "DC-PV-TP-UW", "DC-PV-TE-NUW", true));
    out.push_back(subset_claim(Rule::Approval, "DC-RPC-TE-NUW", "DC-PV-TP-UW", true));
    out.push_back(subset_claim(Rule::Approval, "DC-RPC-TE-NUW", "DC-PV-TE-NUW", true));
    return out;
}

}  // namespace

const std::vector<Claim>& collapse_claims() {
    static const std::vector<Claim> claims = build_collapse_claims();
    return claims;
}

const std::vector<Claim>& containment_claims() {
    static const std::vector<Claim> claims = build_containment_claims();
    return claims;
}

std::optional<ClaimViolation> check_claim(const Claim& claim,
                                          const InstanceSampler& sampler,
                                          std::uint64_t trials) {
    if (claim.types.size() < 2) throw std::invalid_argument("claim needs two types");
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        ReducedInstance inst = sampler(trial);
        if (inst.cls != claim.cls())
            throw std::invalid_argument("sampler produced the wrong instance shape");
        FocusProfile fp = focus_profile(claim.rule, inst);
        if (claim.equality) {
            const CandMask first = fp[claim.types[0]];
            for (size_t i = 1; i < claim.types.size(); ++i)
                if (fp[claim.types[i]] != first)
                    return ClaimViolation{trial, std::move(inst), claim.types[0],
                                          claim.types[i], first, fp[claim.types[i]]};
        } else {
            const CandMask fa = fp[claim.types[0]], fb = fp[claim.types[1]];
            if (fa & ~fb)
                return ClaimViolation{trial, std::move(inst), claim.types[0],
                                      claim.types[1], fa, fb};
        }
    }
    return std::nullopt;
}

// ---- structural properties ---------------------------------------------------

bool property_alpha(Rule rule, const Election& e, WinnerModel model) {
    const int m = e.universe_size();
    if (m > kMaxUniverse)
        throw std::length_error("too many candidates for subset enumeration");
    const CandMask all = e.all();
    const CandMask top = winners(rule, e.profile, all);
    // Unique model: quantifies over the unique winner, if there is one.
    if (model == WinnerModel::Unique && mask_size(top) != 1) return true;
    if (!top) return true;
    for (CandMask present = 1; present && present <= all; ++present) {
        const CandMask running = present & top;
        if (!running) continue;
        const CandMask w = winners(rule, e.profile, present);
        if (model == WinnerModel::Unique) {
            if (w != top) return false;  // must stay the sole winner
        } else {
            if (running & ~w) return false;  // every winner present must still win
        }
    }
    return true;
}

std::span<const ControlType> immune_types(Rule rule) {
    static const std::vector<ControlType> approval = {
        T("CC-PC-TP-NUW"), T("CC-RPC-TP-NUW"), T("CC-PC-TP-UW"), T("CC-RPC-TP-UW"),
        T("DC-PC-TP-UW"),  T("DC-PC-TE-UW"),   T("DC-RPC-TP-UW"), T("DC-RPC-TE-UW"),
        T("DC-DC-UW"),     T("DC-DC-NUW"),
    };
    static const std::vector<ControlType> none;
    return rule == Rule::Approval ? approval : none;
}

std::optional<ImmunityViolation> immunity_check(Rule rule, const ControlType& type,
                                                std::span<const CorpusEntry> corpus) {
    bool known = false;
    for (const ControlType& t : immune_types(rule)) known |= t == type;
    if (!known)
        throw std::invalid_argument(std::string(to_string(rule)) +
                                    " is not known to be immune to " + to_string(type));
    for (size_t i = 0; i < corpus.size(); ++i) {
        const ReducedInstance& inst = corpus[i].instance;
        if (inst.cls != compat_class(type)) continue;
        const CandMask reachable = focus_set(rule, type, inst);
        // the goal must already hold, untouched, for every reachable focus
        const CandMask base = winners(rule, inst.election.profile, inst.election.all());
        for (CandMask rest = reachable; rest;) {
            const int c = std::countr_zero(rest);
            rest &= rest - 1;
            if (!goal_holds(type.goal, type.winner, base, c))
                return ImmunityViolation{static_cast<int>(i), c};
        }
    }
    return std::nullopt;
}

}  // namespace ectk
