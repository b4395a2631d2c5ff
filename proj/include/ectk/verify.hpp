#pragma once

// ------------------------------------------------------------------------
// Named verification suites over the claim registry: each suite runs a
// batch of checks and reports one pass/fail line per check.  The `verify`
// subcommand and the acceptance tests are thin wrappers around these.
// ------------------------------------------------------------------------

#include <cstdint>
#include <string>
#include <vector>

#include "ectk/elections.hpp"
#include "ectk/search.hpp"

namespace ectk {

struct SuiteLine {
    bool pass = false;
    std::string text;
};

struct SuiteResult {
    std::vector<SuiteLine> lines;

    bool pass() const {
        for (const SuiteLine& l : lines)
            if (!l.pass) return false;
        return true;
    }
};

// Every collapse claim for the system: exact focus-set equality on `trials`
// seeded random instances per claim.
SuiteResult verify_collapses(Rule rule, std::uint64_t trials, std::uint64_t seed);

// Every containment claim for the system, same sampling scheme.
SuiteResult verify_containments(Rule rule, std::uint64_t trials, std::uint64_t seed);

// Immunity of each recorded immune type, over the built-in corpus plus
// seeded random instances.
SuiteResult verify_immunity(Rule rule, std::uint64_t trials, std::uint64_t seed);

// Property α / Unique-α: holds for approval everywhere (corpus + random);
// plurality and veto are checked against their recorded counterexamples and
// a seeded search must find one.
SuiteResult verify_alpha(Rule rule, std::uint64_t trials, std::uint64_t seed);

// Library integrity for the system: record count, serialization round-trip,
// exhaustive classification consistent with the established relations, and
// every record separating at least one pair.
SuiteResult verify_corpus(Rule rule);

// The sampling bounds used by all suites.
SearchRanges suite_ranges();

}  // namespace ectk
