#include "ectk/corpus.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "corpus_raw.hpp"

namespace ectk {

namespace {

std::vector<std::string> split_tokens(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

// universe = registered ++ spoiler candidates; ballots name everything
Vote parse_vote(Rule rule, const std::string& text, const std::vector<std::string>& names,
                int line) {
    const int m = static_cast<int>(names.size());
    auto index_of = [&](const std::string& n) {
        for (int i = 0; i < m; ++i)
            if (names[i] == n) return i;
        return -1;
    };
    if (vote_kind(rule) == VoteKind::Approval) {
        if (static_cast<int>(text.size()) != m)
            throw ParseError(line, "approval ballot must have one 0/1 per candidate");
        CandMask appr = 0;
        for (int i = 0; i < m; ++i) {
            if (text[i] == '1')
                appr |= CandMask{1} << i;
            else if (text[i] != '0')
                throw ParseError(line, "approval ballot may contain only 0 and 1");
        }
        return approval_vote(appr);
    }
    std::vector<std::uint8_t> ranking;
    CandMask seen = 0;
    size_t pos = 0;
    while (true) {
        size_t next = text.find('>', pos);
        std::string name = text.substr(pos, next == std::string::npos ? next : next - pos);
        int idx = index_of(name);
        if (idx < 0) throw ParseError(line, "unknown candidate '" + name + "' in ballot");
        if (seen & (CandMask{1} << idx))
            throw ParseError(line, "candidate '" + name + "' ranked twice");
        seen |= CandMask{1} << idx;
        ranking.push_back(static_cast<std::uint8_t>(idx));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    if (static_cast<int>(ranking.size()) != m)
        throw ParseError(line, "ballot must rank every candidate");
    return linear_vote(std::move(ranking));
}

}  // namespace

CompatClass WitnessRecord::compat_class() const {
    const bool s = spoiler_candidates.has_value();
    const bool u = spoiler_votes.has_value();
    const bool k = limit.has_value();
    if (!s && !u && !k) return CompatClass::Partition;
    if (s && k && !u) return CompatClass::AddCand;
    if (s && !k && !u) return CompatClass::UnlimitedAddCand;
    if (!s && k && !u) return CompatClass::Delete;
    if (!s && k && u) return CompatClass::AddVoter;
    throw std::invalid_argument("record '" + id + "' fits no control input shape");
}

ReducedInstance WitnessRecord::to_reduced() const {
    Election e;
    e.names = candidates;
    if (spoiler_candidates)
        e.names.insert(e.names.end(), spoiler_candidates->begin(),
                       spoiler_candidates->end());
    e.profile = votes;
    switch (compat_class()) {
        case CompatClass::Partition: return make_partition_instance(std::move(e));
        case CompatClass::AddCand:
            return make_add_cand_instance(std::move(e),
                                          full_mask(static_cast<int>(candidates.size())),
                                          *limit);
        case CompatClass::UnlimitedAddCand:
            return make_unlimited_add_cand_instance(
                std::move(e), full_mask(static_cast<int>(candidates.size())));
        case CompatClass::Delete: return make_delete_instance(std::move(e), *limit);
        case CompatClass::AddVoter:
            return make_add_voter_instance(std::move(e), *spoiler_votes, *limit);
    }
    throw std::logic_error("unreachable");
}

WitnessRecord record_from_reduced(Rule rule, const ReducedInstance& r) {
    WitnessRecord rec;
    rec.rule = rule;
    const Election& e = r.election;
    if (r.cls == CompatClass::AddCand || r.cls == CompatClass::UnlimitedAddCand)
        rec.spoiler_candidates.emplace();
    for (int i = 0; i < e.universe_size(); ++i) {
        if ((r.original >> i) & 1u)
            rec.candidates.push_back(e.names[i]);
        else
            rec.spoiler_candidates->push_back(e.names[i]);
    }
    rec.votes = e.profile;
    if (r.cls == CompatClass::AddVoter) rec.spoiler_votes = r.spoiler_votes;
    if (r.cls == CompatClass::AddCand || r.cls == CompatClass::Delete ||
        r.cls == CompatClass::AddVoter)
        rec.limit = r.limit;
    return rec;
}

WitnessRecord parse_instance(const std::string& text) {
    std::vector<std::string> lines;
    {
        std::string cur;
        for (char c : text) {
            if (c == '\n') {
                lines.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        if (!cur.empty()) lines.push_back(cur);
    }
    for (size_t i = 0; i < lines.size(); ++i) {
        const std::string& ln = lines[i];
        if (!ln.empty() && (ln.back() == ' ' || ln.back() == '\t' || ln.back() == '\r'))
            throw ParseError(static_cast<int>(i + 1), "trailing whitespace");
    }

    WitnessRecord rec;
    size_t at = 0;
    auto want = [&](const std::string& key, bool required) -> std::optional<std::string> {
        if (at >= lines.size()) {
            if (required)
                throw ParseError(static_cast<int>(lines.size() + 1),
                                 "missing '" + key + ":' line");
            return std::nullopt;
        }
        const std::string& ln = lines[at];
        if (ln.rfind(key + ":", 0) != 0) {
            if (required)
                throw ParseError(static_cast<int>(at + 1), "expected '" + key + ":'");
            return std::nullopt;
        }
        std::string val = ln.substr(key.size() + 1);
        if (!val.empty() && val[0] == ' ') val = val.substr(1);
        ++at;
        return val;
    };

    auto sys = want("system", true);
    auto rule = rule_from_string(*sys);
    if (!rule) throw ParseError(1, "unknown voting system '" + *sys + "'");
    rec.rule = *rule;

    auto check_names = [&](const std::vector<std::string>& names) {
        for (const std::string& n : names)
            if (!valid_candidate_name(n))
                throw ParseError(static_cast<int>(at), "bad candidate name '" + n + "'");
    };
    auto cands = want("candidates", true);
    rec.candidates = split_tokens(*cands);
    if (rec.candidates.empty())
        throw ParseError(static_cast<int>(at), "at least one candidate is required");
    check_names(rec.candidates);

    if (auto sp = want("spoiler-candidates", false)) {
        rec.spoiler_candidates = split_tokens(*sp);
        check_names(*rec.spoiler_candidates);
    }

    if (auto kv = want("k", false)) {
        try {
            size_t used = 0;
            int k = std::stoi(*kv, &used);
            if (used != kv->size() || k < 0) throw std::invalid_argument("");
            rec.limit = k;
        } catch (...) {
            throw ParseError(static_cast<int>(at), "k must be a nonnegative integer");
        }
    }

    std::vector<std::string> universe = rec.candidates;
    if (rec.spoiler_candidates)
        universe.insert(universe.end(), rec.spoiler_candidates->begin(),
                        rec.spoiler_candidates->end());
    for (size_t i = 0; i < universe.size(); ++i)
        for (size_t j = i + 1; j < universe.size(); ++j)
            if (universe[i] == universe[j])
                throw ParseError(static_cast<int>(at),
                                 "duplicate candidate '" + universe[i] + "'");

    if (auto hdr = want("votes", true); !hdr->empty())
        throw ParseError(static_cast<int>(at), "ballots go on their own lines");
    rec.votes.kind = vote_kind(rec.rule);
    while (at < lines.size() && lines[at].rfind("spoiler-votes:", 0) != 0) {
        if (lines[at].empty())
            throw ParseError(static_cast<int>(at + 1), "blank line in ballot section");
        rec.votes.votes.push_back(
            parse_vote(rec.rule, lines[at], universe, static_cast<int>(at + 1)));
        ++at;
    }

    if (at < lines.size()) {
        if (lines[at] != "spoiler-votes:")
            throw ParseError(static_cast<int>(at + 1), "ballots go on their own lines");
        ++at;  // consume "spoiler-votes:" header
        Profile sv;
        sv.kind = vote_kind(rec.rule);
        while (at < lines.size()) {
            if (lines[at].empty())
                throw ParseError(static_cast<int>(at + 1), "blank line in ballot section");
            // spoiler ballots range over the registered candidates only
            sv.votes.push_back(parse_vote(rec.rule, lines[at], rec.candidates,
                                          static_cast<int>(at + 1)));
            ++at;
        }
        rec.spoiler_votes = std::move(sv);
    }

    try {
        rec.compat_class();      // rejects field combinations that fit no class
        (void)rec.to_reduced();  // full structural validation
    } catch (const std::invalid_argument& ex) {
        throw ParseError(static_cast<int>(lines.size()), ex.what());
    }
    return rec;
}

namespace {

std::string vote_to_string(Rule rule, const Vote& v,
                           const std::vector<std::string>& names) {
    std::string out;
    if (vote_kind(rule) == VoteKind::Approval) {
        for (size_t i = 0; i < names.size(); ++i)
            out += (v.approvals >> i) & 1u ? '1' : '0';
    } else {
        for (size_t i = 0; i < v.ranking.size(); ++i) {
            if (i) out += '>';
            out += names[v.ranking[i]];
        }
    }
    return out;
}

}  // namespace

std::string serialize_instance(const WitnessRecord& rec) {
    std::string out = "system: " + std::string(to_string(rec.rule)) + "\n";
    out += "candidates:";
    for (const std::string& c : rec.candidates) out += " " + c;
    out += "\n";
    std::vector<std::string> universe = rec.candidates;
    if (rec.spoiler_candidates) {
        out += "spoiler-candidates:";
        for (const std::string& c : *rec.spoiler_candidates) {
            out += " " + c;
            universe.push_back(c);
        }
        out += "\n";
    }
    if (rec.limit) out += "k: " + std::to_string(*rec.limit) + "\n";
    out += "votes:\n";
    for (const Vote& v : rec.votes.votes)
        out += vote_to_string(rec.rule, v, universe) + "\n";
    if (rec.spoiler_votes) {
        out += "spoiler-votes:\n";
        for (const Vote& v : rec.spoiler_votes->votes)
            out += vote_to_string(rec.rule, v, rec.candidates) + "\n";
    }
    return out;
}

std::span<const WitnessRecord> witness_library() {
    static const std::vector<WitnessRecord> lib = [] {
        std::vector<WitnessRecord> out;
        out.reserve(detail::kWitnessLibrarySize);
        for (int i = 0; i < detail::kWitnessLibrarySize; ++i) {
            const detail::RawRecord& raw = detail::kWitnessLibrary[i];
            WitnessRecord rec = parse_instance(raw.text);
            rec.id = raw.id;
            rec.computer_generated = raw.computer_generated;
            out.push_back(std::move(rec));
        }
        return out;
    }();
    return lib;
}

std::vector<const WitnessRecord*> witness_library(Rule rule) {
    std::vector<const WitnessRecord*> out;
    for (const WitnessRecord& rec : witness_library())
        if (rec.rule == rule) out.push_back(&rec);
    return out;
}

std::vector<CorpusEntry> corpus_for(Rule rule) {
    std::vector<CorpusEntry> out;
    for (const WitnessRecord* rec : witness_library(rule))
        out.push_back({rec->id, rec->to_reduced()});
    return out;
}

int export_corpus(const std::string& dir) {
    namespace fs = std::filesystem;
    int written = 0;
    for (const WitnessRecord& rec : witness_library()) {
        fs::path sub = fs::path(dir) / to_string(rec.rule);
        fs::create_directories(sub);
        fs::path file = sub / (rec.id + ".election");
        std::ofstream out(file, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + file.string());
        out << serialize_instance(rec);
        if (!out) throw std::runtime_error("write failed for " + file.string());
        ++written;
    }
    return written;
}

}  // namespace ectk
