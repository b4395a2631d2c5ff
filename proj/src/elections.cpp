#include "ectk/elections.hpp"

#include <algorithm>
#include <stdexcept>

namespace ectk {

const char* to_string(Rule r) {
    switch (r) {
        case Rule::Plurality: return "plurality";
        case Rule::Veto: return "veto";
        case Rule::Approval: return "approval";
    }
    return "?";
}

std::optional<Rule> rule_from_string(std::string_view s) {
    if (s == "plurality") return Rule::Plurality;
    if (s == "veto") return Rule::Veto;
    if (s == "approval") return Rule::Approval;
    return std::nullopt;
}

Vote linear_vote(std::vector<std::uint8_t> ranking) {
    Vote v;
    v.ranking = std::move(ranking);
    return v;
}

Vote approval_vote(CandMask approvals) {
    Vote v;
    v.approvals = approvals;
    return v;
}

int Election::index_of(std::string_view name) const {
    for (int i = 0; i < universe_size(); ++i)
        if (names[i] == name) return i;
    return -1;
}

bool valid_candidate_name(std::string_view name) {
    if (name.empty()) return false;
    for (char c : name)
        if (c == '>' || c == ' ' || c == '\t' || c == '\r' || c == '\n') return false;
    return true;
}

void validate(const Election& e) {
    const int m = e.universe_size();
    if (m > kMaxUniverse)
        throw std::invalid_argument("too many candidates (limit " +
                                    std::to_string(kMaxUniverse) + ")");
    for (int i = 0; i < m; ++i) {
        if (!valid_candidate_name(e.names[i]))
            throw std::invalid_argument("bad candidate name '" + e.names[i] + "'");
        for (int j = i + 1; j < m; ++j)
            if (e.names[i] == e.names[j])
                throw std::invalid_argument("duplicate candidate '" + e.names[i] + "'");
    }
    for (const Vote& v : e.profile.votes) {
        if (e.profile.kind == VoteKind::Linear) {
            if (static_cast<int>(v.ranking.size()) != m)
                throw std::invalid_argument("ranking length != candidate count");
            CandMask seen = 0;
            for (std::uint8_t c : v.ranking) {
                if (c >= m || (seen & (CandMask{1} << c)))
                    throw std::invalid_argument("ranking is not a permutation");
                seen |= CandMask{1} << c;
            }
        } else {
            if (v.approvals & ~e.all())
                throw std::invalid_argument("approval mask has unknown candidates");
        }
    }
}

int score(Rule rule, const Profile& v, CandMask present, int c) {
    const CandMask cbit = CandMask{1} << c;
    if (!(present & cbit)) return 0;
    int pts = 0;
    for (const Vote& vote : v.votes) {
        switch (rule) {
            case Rule::Plurality: {
                for (std::uint8_t x : vote.ranking) {
                    if (!(present & (CandMask{1} << x))) continue;
                    pts += (x == c);
                    break;
                }
                break;
            }
            case Rule::Veto: {
                // everyone but the bottom remaining candidate gets a point;
                // with one candidate left, top == bottom and no point is given
                for (auto it = vote.ranking.rbegin(); it != vote.ranking.rend(); ++it) {
                    if (!(present & (CandMask{1} << *it))) continue;
                    pts += (*it != c);
                    break;
                }
                break;
            }
            case Rule::Approval:
                pts += (vote.approvals & cbit) != 0;
                break;
        }
    }
    return pts;
}

CandMask winners(Rule rule, const Profile& v, CandMask present) {
    if (!present) return 0;
    int sc[kMaxUniverse] = {};
    for (const Vote& vote : v.votes) {
        switch (rule) {
            case Rule::Plurality:
                for (std::uint8_t x : vote.ranking) {
                    if (present & (CandMask{1} << x)) {
                        ++sc[x];
                        break;
                    }
                }
                break;
            case Rule::Veto: {
                int bottom = -1;
                for (auto it = vote.ranking.rbegin(); it != vote.ranking.rend(); ++it) {
                    if (present & (CandMask{1} << *it)) {
                        bottom = *it;
                        break;
                    }
                }
                for (CandMask rest = present; rest;) {
                    int x = std::countr_zero(rest);
                    rest &= rest - 1;
                    if (x != bottom) ++sc[x];
                }
                break;
            }
            case Rule::Approval:
                for (CandMask appr = vote.approvals & present; appr;) {
                    ++sc[std::countr_zero(appr)];
                    appr &= appr - 1;
                }
                break;
        }
    }
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

bool unique_winner(Rule rule, const Profile& v, CandMask present, int c) {
    return winners(rule, v, present) == (CandMask{1} << c);
}

Profile mask_votes(const Profile& v, CandMask subset, int universe) {
    // new index of old candidate i = number of kept candidates below i
    std::uint8_t newIndex[kMaxUniverse];
    for (int i = 0; i < universe; ++i)
        newIndex[i] = static_cast<std::uint8_t>(std::popcount(subset & (full_mask(i))));
    Profile out;
    out.kind = v.kind;
    out.votes.reserve(v.votes.size());
    for (const Vote& vote : v.votes) {
        Vote nv;
        if (v.kind == VoteKind::Linear) {
            for (std::uint8_t x : vote.ranking)
                if (subset & (CandMask{1} << x)) nv.ranking.push_back(newIndex[x]);
        } else {
            for (CandMask kept = vote.approvals & subset; kept;) {
                int x = std::countr_zero(kept);
                kept &= kept - 1;
                nv.approvals |= CandMask{1} << newIndex[x];
            }
        }
        out.votes.push_back(std::move(nv));
    }
    return out;
}

Election masked(const Election& e, CandMask subset) {
    Election out;
    for (int i = 0; i < e.universe_size(); ++i)
        if (subset & (CandMask{1} << i)) out.names.push_back(e.names[i]);
    out.profile = mask_votes(e.profile, subset, e.universe_size());
    return out;
}

CandMask SubsetWinners::operator()(CandMask present) {
    auto it = memo_.find(present);
    if (it != memo_.end()) return it->second;
    CandMask w = winners(rule_, e_->profile, present);
    memo_.emplace(present, w);
    return w;
}

}  // namespace ectk
