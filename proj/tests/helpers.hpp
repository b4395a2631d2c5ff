#pragma once

// Shorthand used across the test files for building small elections inline
// and converting winner masks back to names.  Ballot text mirrors the file
// format ("a>b>c" rankings, "101" approval rows) but is parsed here with a
// separate bare-bones reader so the tests do not lean on the corpus module.

#include <cstdint>
#include <initializer_list>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ectk/elections.hpp"

namespace testutil {

inline ectk::Vote ranked(const ectk::Election& e, const std::string& text) {
    std::vector<std::uint8_t> order;
    std::string tok;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == '>') {
            order.push_back(static_cast<std::uint8_t>(e.index_of(tok)));
            tok.clear();
        } else {
            tok += text[i];
        }
    }
    return ectk::linear_vote(std::move(order));
}

inline ectk::Vote approvals(const ectk::Election& e, const std::string& bits) {
    ectk::CandMask m = 0;
    for (std::size_t i = 0; i < bits.size() && i < e.names.size(); ++i)
        if (bits[i] == '1') m |= ectk::CandMask{1} << i;
    return ectk::approval_vote(m);
}

// linear({"a","b","c"}, {"a>b>c", "b>a>c"})
inline ectk::Election linear(std::vector<std::string> names,
                             std::initializer_list<const char*> ballots) {
    ectk::Election e;
    e.names = std::move(names);
    e.profile.kind = ectk::VoteKind::Linear;
    for (const char* b : ballots) e.profile.votes.push_back(ranked(e, b));
    validate(e);
    return e;
}

// approval({"a","b"}, {"10", "01"})
inline ectk::Election approval(std::vector<std::string> names,
                               std::initializer_list<const char*> rows) {
    ectk::Election e;
    e.names = std::move(names);
    e.profile.kind = ectk::VoteKind::Approval;
    for (const char* r : rows) e.profile.votes.push_back(approvals(e, r));
    validate(e);
    return e;
}

inline ectk::CandMask mask_of(const ectk::Election& e,
                              std::initializer_list<const char*> names) {
    ectk::CandMask m = 0;
    for (const char* n : names) m |= ectk::CandMask{1} << e.index_of(n);
    return m;
}

inline std::set<std::string> name_set(const ectk::Election& e, ectk::CandMask m) {
    std::set<std::string> out;
    for (int i = 0; i < e.universe_size(); ++i)
        if ((m >> i) & 1u) out.insert(e.names[i]);
    return out;
}

}  // namespace testutil
