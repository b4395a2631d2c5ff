// Acceptance gate for the release: ten end-to-end checks covering the type
// table, the established relation matrix, winner determination, the decision
// engine, the embedded witness corpus, the randomized verification suites,
// strictness witnesses, subset-stability/immunity, and reproducibility.
// Prints one PASS/FAIL line per check; exits nonzero if any fail.

#include <cstdint>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "ectk/control.hpp"
#include "ectk/corpus.hpp"
#include "ectk/elections.hpp"
#include "ectk/relations.hpp"
#include "ectk/search.hpp"
#include "ectk/verify.hpp"

using namespace ectk;

namespace {

constexpr std::uint64_t kSeed = 20260814;
constexpr std::uint64_t kTrials = 1000;

ControlType ct(const char* s) { return *control_type_from_string(s); }

Election make_linear(std::vector<std::string> names,
                     const std::vector<std::vector<int>>& rankings) {
    Election e;
    e.names = std::move(names);
    e.profile.kind = VoteKind::Linear;
    for (const auto& r : rankings) {
        std::vector<std::uint8_t> v(r.begin(), r.end());
        e.profile.votes.push_back(linear_vote(std::move(v)));
    }
    validate(e);
    return e;
}

// independent winner computation: plain loops, no bitmask shortcuts
int slow_score(Rule rule, const Profile& p, CandMask present, int c) {
    if (!((present >> c) & 1u)) return 0;
    int total = 0;
    for (const Vote& v : p.votes) {
        if (rule == Rule::Approval) {
            total += (v.approvals >> c) & 1u;
            continue;
        }
        int top = -1, bottom = -1;
        for (std::uint8_t x : v.ranking) {
            if (!((present >> x) & 1u)) continue;
            if (top < 0) top = x;
            bottom = x;
        }
        total += rule == Rule::Plurality ? top == c : bottom != c;
    }
    return total;
}

CandMask slow_winners(Rule rule, const Profile& p, CandMask present) {
    int best = -1;
    CandMask w = 0;
    for (int c = 0; c < kMaxUniverse; ++c) {
        if (!((present >> c) & 1u)) continue;
        const int s = slow_score(rule, p, present, c);
        if (s > best) {
            best = s;
            w = 0;
        }
        if (s == best) w |= CandMask{1} << c;
    }
    return w;
}

// ---- the ten checks -------------------------------------------------------

bool structural_counts(std::string& why) {
    if (all_types().size() != 44) {
        why = "type count " + std::to_string(all_types().size());
        return false;
    }
    const int compatible = static_cast<int>(compatible_pairs().size());
    const int total = 44 * 43 / 2;
    if (compatible != 322 || total != 946 || total - compatible != 624) {
        why = "pair counts " + std::to_string(total) + "/" + std::to_string(compatible);
        return false;
    }
    const int sizes[] = {class_size(CompatClass::Partition), class_size(CompatClass::AddCand),
                         class_size(CompatClass::Delete), class_size(CompatClass::AddVoter),
                         class_size(CompatClass::UnlimitedAddCand)};
    if (sizes[0] != 24 || sizes[1] != 4 || sizes[2] != 8 || sizes[3] != 4 || sizes[4] != 4) {
        why = "class sizes";
        return false;
    }
    return true;
}

bool collapse_counts(std::string& why) {
    const int pairs[] = {KnownRelationMatrix::of(Rule::Plurality).collapse_pair_count(),
                         KnownRelationMatrix::of(Rule::Veto).collapse_pair_count(),
                         KnownRelationMatrix::of(Rule::Approval).collapse_pair_count()};
    const int seps[] = {KnownRelationMatrix::of(Rule::Plurality).separation_pair_count(),
                        KnownRelationMatrix::of(Rule::Veto).separation_pair_count(),
                        KnownRelationMatrix::of(Rule::Approval).separation_pair_count()};
    if (pairs[0] != 7 || pairs[1] != 8 || pairs[2] != 21) {
        why = "collapse pairs " + std::to_string(pairs[0]) + "/" +
              std::to_string(pairs[1]) + "/" + std::to_string(pairs[2]);
        return false;
    }
    if (seps[0] != 315 || seps[1] != 314 || seps[2] != 301) {
        why = "separations " + std::to_string(seps[0]) + "/" + std::to_string(seps[1]) +
              "/" + std::to_string(seps[2]);
        return false;
    }
    return true;
}

bool winner_oracles(std::string& why) {
    const Election plur =
        make_linear({"a", "b", "c"}, {{0, 1, 2}, {0, 1, 2}, {0, 2, 1}, {1, 2, 0}});
    if (score(Rule::Plurality, plur.profile, plur.all(), 0) != 3 ||
        winners(Rule::Plurality, plur) != 0b001u ||
        !unique_winner(Rule::Plurality, plur.profile, plur.all(), 0)) {
        why = "three-candidate plurality example";
        return false;
    }
    const Election veto = make_linear({"a", "b", "c"}, {{0, 1, 2}, {2, 0, 1}});
    if (score(Rule::Veto, veto.profile, veto.all(), 0) != 2 ||
        winners(Rule::Veto, veto) != 0b001u) {
        why = "two-vote veto example";
        return false;
    }
    Election appr;
    appr.names = {"a", "b"};
    appr.profile.kind = VoteKind::Approval;
    appr.profile.votes.push_back(approval_vote(0b01u));
    if (score(Rule::Approval, appr.profile, appr.all(), 1) != 0 ||
        winners(Rule::Approval, appr) != 0b01u) {
        why = "single-ballot approval example";
        return false;
    }

    SearchRanges ranges;
    for (Rule rule : {Rule::Plurality, Rule::Veto, Rule::Approval}) {
        for (std::uint64_t i = 0; i < kTrials; ++i) {
            const Election e = random_election(rule, ranges, trial_seed(kSeed, i));
            SplitMix64 rng(trial_seed(kSeed ^ 1, i));
            const CandMask subs[2] = {e.all(), static_cast<CandMask>(rng.next()) & e.all()};
            for (CandMask present : subs) {
                if (winners(rule, e.profile, present) !=
                    slow_winners(rule, e.profile, present)) {
                    why = std::string("winner mismatch under ") + to_string(rule);
                    return false;
                }
                for (int c = 0; c < e.universe_size(); ++c)
                    if (((present >> c) & 1u) &&
                        score(rule, e.profile, present, c) !=
                            slow_score(rule, e.profile, present, c)) {
                        why = std::string("score mismatch under ") + to_string(rule);
                        return false;
                    }
            }
        }
    }
    return true;
}

bool membership_facts(std::string& why) {
    const Election e =
        make_linear({"a", "b", "c"}, {{0, 1, 2}, {0, 1, 2}, {0, 2, 1}, {1, 2, 0}});
    const ControlInstance inst = inflate(make_delete_instance(e, 1), 1);
    if (!decide(Rule::Plurality, ct("CC-DC-UW"), inst).success) {
        why = "unique-winner variant said no";
        return false;
    }
    if (!decide(Rule::Plurality, ct("CC-DC-NUW"), inst).success) {
        why = "nonunique-winner variant said no";
        return false;
    }
    return true;
}

bool corpus_separations(std::string& why) {
    const struct {
        Rule rule;
        int expected;
    } want[] = {{Rule::Plurality, 50}, {Rule::Veto, 46}, {Rule::Approval, 32}};
    for (const auto& g : want) {
        const auto corpus = corpus_for(g.rule);
        if (static_cast<int>(corpus.size()) != g.expected) {
            why = std::string(to_string(g.rule)) + " corpus size " +
                  std::to_string(corpus.size());
            return false;
        }
        for (const CorpusEntry& entry : corpus) {
            const FocusProfile prof = focus_profile(g.rule, entry.instance);
            const auto types = class_types(entry.instance.cls);
            bool separates = false;
            for (std::size_t i = 0; i < types.size() && !separates; ++i)
                for (std::size_t j = i + 1; j < types.size() && !separates; ++j)
                    separates = prof[types[i]] != prof[types[j]];
            if (!separates) {
                why = entry.id + " separates nothing";
                return false;
            }
        }
    }

    // the one-vote two-candidate election splits every constructive /
    // destructive partition pair in both directions at once
    const auto plur = corpus_for(Rule::Plurality);
    const ReducedInstance* plur3 = nullptr;
    for (const CorpusEntry& entry : plur)
        if (entry.id == "Plur.3") plur3 = &entry.instance;
    if (!plur3) {
        why = "Plur.3 missing";
        return false;
    }
    const FocusProfile prof = focus_profile(Rule::Plurality, *plur3);
    int strong = 0;
    for (const ControlType& a : class_types(CompatClass::Partition)) {
        if (a.goal != Goal::Constructive) continue;
        for (const ControlType& b : class_types(CompatClass::Partition)) {
            if (b.goal != Goal::Destructive) continue;
            if ((prof[a] & ~prof[b]) && (prof[b] & ~prof[a])) ++strong;
        }
    }
    if (strong != 144) {
        why = "strong pairs on Plur.3: " + std::to_string(strong);
        return false;
    }
    return true;
}

bool suite_passes(const SuiteResult& result, std::string& why) {
    for (const SuiteLine& line : result.lines)
        if (!line.pass) {
            why = line.text;
            return false;
        }
    return true;
}

bool collapse_suite(std::string& why) {
    for (Rule rule : {Rule::Plurality, Rule::Veto, Rule::Approval})
        if (!suite_passes(verify_collapses(rule, kTrials, kSeed), why)) return false;
    return true;
}

bool containment_suite(std::string& why) {
    for (Rule rule : {Rule::Plurality, Rule::Veto, Rule::Approval})
        if (!suite_passes(verify_containments(rule, kTrials, kSeed), why)) return false;
    return true;
}

bool strictness_witnesses(std::string& why) {
    for (const Claim& claim : containment_claims()) {
        if (!claim.strict) continue;
        SearchTarget target;
        target.rule = claim.rule;
        target.a = claim.types[0];
        target.b = claim.types[1];
        target.direction = Direction::RightMinusLeft;
        const SearchOutcome out = find_witness(target, kSeed, 100000, suite_ranges());
        if (!out.found) {
            why = std::string(to_string(claim.rule)) + " " + claim.name + ": exhausted";
            return false;
        }
        // independent replay of the reported difference
        const auto [ab, ba] =
            compare_on_instance(claim.rule, target.a, target.b, *out.instance);
        if (ab != 0 || ba != out.right_minus_left || ba == 0) {
            why = std::string(to_string(claim.rule)) + " " + claim.name +
                  ": witness failed replay";
            return false;
        }
    }
    return true;
}

bool alpha_and_immunity(std::string& why) {
    for (const WitnessRecord& rec : witness_library()) {
        if (rec.rule != Rule::Approval) continue;
        const Election& e = rec.to_reduced().election;
        if (!property_alpha(Rule::Approval, e, WinnerModel::Nonunique) ||
            !property_alpha(Rule::Approval, e, WinnerModel::Unique)) {
            why = "approval corpus election " + rec.id + " lost a winner";
            return false;
        }
    }
    SearchRanges small;
    small.max_candidates = 5;
    for (std::uint64_t i = 0; i < kTrials; ++i) {
        const Election e = random_election(Rule::Approval, small, trial_seed(kSeed ^ 2, i));
        if (!property_alpha(Rule::Approval, e, WinnerModel::Nonunique) ||
            !property_alpha(Rule::Approval, e, WinnerModel::Unique)) {
            why = "approval random election lost a winner, trial " + std::to_string(i);
            return false;
        }
    }

    if (!suite_passes(verify_immunity(Rule::Approval, kTrials, kSeed), why)) return false;

    const Election plur = make_linear(
        {"a", "b", "c"}, {{0, 1, 2}, {0, 2, 1}, {1, 2, 0}, {1, 2, 0}, {2, 0, 1}});
    if (property_alpha(Rule::Plurality, plur, WinnerModel::Nonunique)) {
        why = "plurality counterexample not detected";
        return false;
    }
    const Election veto = make_linear({"a", "b", "c"}, {{0, 1, 2}, {0, 1, 2}});
    if (property_alpha(Rule::Veto, veto, WinnerModel::Nonunique)) {
        why = "veto counterexample not detected";
        return false;
    }
    // search must also be able to stumble on a veto counterexample
    SearchRanges ranges;
    bool found = false;
    for (std::uint64_t i = 0; i < 100000 && !found; ++i)
        found = !property_alpha(Rule::Veto,
                                random_election(Rule::Veto, ranges, trial_seed(kSeed ^ 3, i)),
                                WinnerModel::Nonunique);
    if (!found) {
        why = "no veto counterexample within budget";
        return false;
    }
    return true;
}

bool reproducibility(std::string& why) {
    for (Rule rule : {Rule::Plurality, Rule::Veto, Rule::Approval}) {
        const auto corpus = corpus_for(rule);
        const std::string one = render_report(rule, classify_all(rule, corpus), corpus);
        const std::string two = render_report(rule, classify_all(rule, corpus), corpus);
        if (one != two) {
            why = std::string("classification of ") + to_string(rule) + " drifted";
            return false;
        }
    }

    const SearchTarget target = {Rule::Plurality, ct("CC-PC-TE-NUW"), ct("DC-PC-TE-NUW"),
                                 Direction::BothOnOneInstance};
    auto run = [&] {
        const SearchOutcome out = find_witness(target, kSeed, 5000, suite_ranges());
        std::string text = "trial=" + std::to_string(out.hit_trial) +
                           " seed=" + std::to_string(out.hit_seed) +
                           " result=" + (out.found ? "found" : "no") + "\n";
        if (out.instance)
            text += serialize_instance(record_from_reduced(target.rule, *out.instance));
        return text;
    };
    const std::string first = run(), second = run();
    if (first != second) {
        why = "search report drifted";
        return false;
    }
    if (first.find("result=found") == std::string::npos) {
        why = "search found nothing";
        return false;
    }
    return true;
}

}  // namespace

int main() {
    const struct {
        const char* name;
        std::function<bool(std::string&)> check;
    } checks[] = {
        {"structural counts: 44 types, 946/322/624 pairs, classes 24/4/8/4/4",
         structural_counts},
        {"established collapses 7/8/21 and separations 315/314/301", collapse_counts},
        {"winner rules match brute-force recomputation", winner_oracles},
        {"deleting one candidate promotes the runner-up (worked instance)",
         membership_facts},
        {"all 128 corpus records separate; 144 strong pairs on Plur.3",
         corpus_separations},
        {"collapse claims hold on 1000 seeded instances each", collapse_suite},
        {"containment claims hold on 1000 seeded instances each", containment_suite},
        {"every strict containment has a search-found witness", strictness_witnesses},
        {"subset stability and immunity behave per system", alpha_and_immunity},
        {"classification and search reports are byte-stable", reproducibility},
    };

    int failures = 0;
    int number = 0;
    for (const auto& c : checks) {
        ++number;
        std::string why;
        bool ok = false;
        try {
            ok = c.check(why);
        } catch (const std::exception& ex) {
            why = ex.what();
        }
        std::printf("[%s] %2d: %s\n", ok ? "PASS" : "FAIL", number, c.name);
        if (!ok && !why.empty()) std::printf("           %s\n", why.c_str());
        failures += !ok;
    }
    if (failures) std::printf("%d of 10 checks failed\n", failures);
    return failures == 0 ? 0 : 1;
}
