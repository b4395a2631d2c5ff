#pragma once

// ------------------------------------------------------------------------
// Election file format and the built-in witness library.
//
// A record is UTF-8 text, one datum per line, sections in this order:
//
//   system: plurality            (or veto / approval)
//   candidates: a b c            (registered candidates, declared order)
//   spoiler-candidates: d        (optional; may be empty)
//   k: 1                         (optional action limit)
//   votes:                       (ballots, one per line)
//   a>b>c>d
//   spoiler-votes:               (optional; ballots one per line)
//   b>a>c
//
// Ranked ballots are written best-first with '>'; approval ballots are 0/1
// strings in declared candidate order (registered then spoiler).  Which
// optional sections appear determines the compatibility class:
// neither spoilers nor k = partition; spoiler-candidates + k = add
// candidates; spoiler-candidates alone = unlimited add candidates; k alone
// = delete; spoiler-votes + k = add voters.
// ------------------------------------------------------------------------

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ectk/control.hpp"
#include "ectk/elections.hpp"

namespace ectk {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what),
          line(line_) {}
};

struct WitnessRecord {
    std::string id;  // not stored in the file format; carried by filename
    Rule rule = Rule::Plurality;
    bool computer_generated = false;  // in-memory provenance note only

    std::vector<std::string> candidates;
    std::optional<std::vector<std::string>> spoiler_candidates;
    Profile votes;  // over candidates ∪ spoiler_candidates, declared order
    std::optional<Profile> spoiler_votes;  // over candidates
    std::optional<int> limit;

    CompatClass compat_class() const;
    ReducedInstance to_reduced() const;
};

WitnessRecord parse_instance(const std::string& text);  // throws ParseError
std::string serialize_instance(const WitnessRecord& rec);

// Conversion helpers between records and plain elections.
WitnessRecord record_from_reduced(Rule rule, const ReducedInstance& r);

// The built-in library: 50 plurality, 46 veto, and 32 approval elections.
std::span<const WitnessRecord> witness_library();
std::vector<const WitnessRecord*> witness_library(Rule rule);

// Reduced instances (plus ids) for one voting system, in library order.
struct CorpusEntry {
    std::string id;
    ReducedInstance instance;
};
std::vector<CorpusEntry> corpus_for(Rule rule);

// Writes <dir>/<system>/<id>.election for every library record; returns the
// number of files written.  Throws std::runtime_error on I/O failure.
int export_corpus(const std::string& dir);

}  // namespace ectk
