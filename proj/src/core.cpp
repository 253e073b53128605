#include "stablelattice/core.hpp"

#include <algorithm>
#include <deque>

#include "text_util.hpp"

namespace stablelattice {

namespace {

// Validates one side's lists and builds its flattened rank table.
std::vector<int> build_ranks(const std::vector<std::vector<int>>& prefs, int n, const char* side) {
    if (static_cast<int>(prefs.size()) != n)
        throw DomainError(std::string(side) + " preference lists: expected " + std::to_string(n) +
                          " lists, got " + std::to_string(prefs.size()));
    std::vector<int> rank(static_cast<std::size_t>(n) * n, -1);
    for (int a = 0; a < n; ++a) {
        const auto& list = prefs[a];
        if (static_cast<int>(list.size()) != n)
            throw DomainError(std::string(side) + " list " + std::to_string(a + 1) +
                              ": expected " + std::to_string(n) + " entries, got " +
                              std::to_string(list.size()));
        for (int r = 0; r < n; ++r) {
            int x = list[r];
            if (x < 0 || x >= n)
                throw DomainError(std::string(side) + " list " + std::to_string(a + 1) +
                                  ": index out of range");
            if (rank[a * n + x] != -1)
                throw DomainError(std::string(side) + " list " + std::to_string(a + 1) +
                                  ": duplicate entry (not a permutation)");
            rank[a * n + x] = r;
        }
    }
    return rank;
}

}  // namespace

Instance::Instance(std::vector<std::vector<int>> boy_prefs, std::vector<std::vector<int>> girl_prefs)
    : n_(static_cast<int>(boy_prefs.size())),
      boy_prefs_(std::move(boy_prefs)),
      girl_prefs_(std::move(girl_prefs)) {
    if (n_ < 1) throw DomainError("instance needs at least one agent per side");
    boy_rank_ = build_ranks(boy_prefs_, n_, "boy");
    girl_rank_ = build_ranks(girl_prefs_, n_, "girl");
}

std::vector<int> partner_of_girl(const Matching& m) {
    int n = m.n();
    std::vector<int> inv(n, -1);
    for (int b = 0; b < n; ++b) {
        int g = m.partner_of_boy[b];
        if (g < 0 || g >= n || inv[g] != -1)
            throw DomainError("partner_of_boy is not a permutation (not a perfect matching)");
        inv[g] = b;
    }
    return inv;
}

Instance parse_instance(std::string_view text) {
    auto lines = detail::effective_lines(text);
    if (lines.empty()) throw ParseError("empty instance file");

    auto head = detail::tokens_of(lines[0]);
    if (head.size() != 1)
        throw ParseError("line 1: expected a single value n, got " + std::to_string(head.size()) +
                         " tokens");
    int n = 0;
    try {
        n = std::stoi(head[0]);
    } catch (const std::exception&) {
        throw ParseError("line 1: n is not a number: '" + head[0] + "'");
    }
    if (n < 1) throw ParseError("line 1: n must be positive");

    if (static_cast<int>(lines.size()) != 2 * n + 1)
        throw ParseError("expected " + std::to_string(2 * n + 1) + " effective lines (n plus " +
                         std::to_string(n) + " boys' and " + std::to_string(n) +
                         " girls' lists), got " + std::to_string(lines.size()));

    std::vector<std::vector<int>> boys, girls;
    boys.reserve(n);
    girls.reserve(n);
    for (int b = 0; b < n; ++b)
        boys.push_back(detail::parse_pref_tokens(detail::tokens_of(lines[1 + b]), n,
                                                 "boy " + format_agent(b, Side::boys, n)));
    for (int g = 0; g < n; ++g)
        girls.push_back(detail::parse_pref_tokens(detail::tokens_of(lines[1 + n + g]), n,
                                                  "girl " + format_agent(g, Side::girls, n)));

    try {
        return Instance(std::move(boys), std::move(girls));
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

std::vector<BlockingPair> blocking_pairs(const Instance& inst, const Matching& m) {
    int n = inst.n();
    if (m.n() != n) throw DomainError("matching size does not match instance");
    auto girl_of = m.partner_of_boy;
    auto boy_of = partner_of_girl(m);
    std::vector<BlockingPair> out;
    for (int b = 0; b < n; ++b) {
        // Girls b prefers to his partner appear before her in his list.
        int limit = inst.boy_rank(b, girl_of[b]);
        for (int r = 0; r < limit; ++r) {
            int g = inst.boy_pref(b)[r];
            if (inst.girl_prefers(g, b, boy_of[g])) out.push_back({b, g});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_stable(const Instance& inst, const Matching& m) {
    return blocking_pairs(inst, m).empty();
}

namespace {

// One proposal pass: proposers work down their lists, acceptors keep their
// best offer so far. Returns proposer-indexed partners.
std::vector<int> propose(const std::vector<std::vector<int>>& proposer_prefs,
                         const std::vector<std::vector<int>>& acceptor_prefs) {
    int n = static_cast<int>(proposer_prefs.size());
    std::vector<int> acceptor_rank(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int r = 0; r < n; ++r) acceptor_rank[a * n + acceptor_prefs[a][r]] = r;

    std::vector<int> next(n, 0);              // next list position to propose to
    std::vector<int> engaged_to(n, -1);       // acceptor -> proposer
    std::vector<int> partner(n, -1);          // proposer -> acceptor
    std::deque<int> free;
    for (int p = 0; p < n; ++p) free.push_back(p);

    while (!free.empty()) {
        int p = free.front();
        free.pop_front();
        int a = proposer_prefs[p][next[p]++];
        int cur = engaged_to[a];
        if (cur == -1) {
            engaged_to[a] = p;
            partner[p] = a;
        } else if (acceptor_rank[a * n + p] < acceptor_rank[a * n + cur]) {
            engaged_to[a] = p;
            partner[p] = a;
            partner[cur] = -1;
            free.push_back(cur);
        } else {
            free.push_back(p);
        }
    }
    return partner;
}

}  // namespace

Matching deferred_acceptance(const Instance& inst, Side proposing) {
    int n = inst.n();
    if (proposing == Side::boys) {
        return Matching{propose(inst.boy_prefs(), inst.girl_prefs())};
    }
    auto girl_partner = propose(inst.girl_prefs(), inst.boy_prefs());
    std::vector<int> boy_partner(n, -1);
    for (int g = 0; g < n; ++g) boy_partner[girl_partner[g]] = g;
    return Matching{boy_partner};
}

namespace {

Matching pick_per_boy(const Instance& inst, const Matching& m1, const Matching& m2, bool better) {
    int n = inst.n();
    if (m1.n() != n || m2.n() != n) throw DomainError("matching size does not match instance");
    std::vector<int> out(n);
    for (int b = 0; b < n; ++b) {
        int g1 = m1.partner_of_boy[b], g2 = m2.partner_of_boy[b];
        bool first = inst.boy_rank(b, g1) <= inst.boy_rank(b, g2);
        out[b] = (first == better) ? g1 : g2;
    }
    Matching m{std::move(out)};
    partner_of_girl(m);  // throws if the per-boy choice is not a matching
    return m;
}

}  // namespace

Matching meet(const Instance& inst, const Matching& m1, const Matching& m2) {
    return pick_per_boy(inst, m1, m2, /*better=*/true);
}

Matching join(const Instance& inst, const Matching& m1, const Matching& m2) {
    return pick_per_boy(inst, m1, m2, /*better=*/false);
}

bool dominates(const Instance& inst, const Matching& m1, const Matching& m2) {
    for (int b = 0; b < inst.n(); ++b)
        if (inst.boy_rank(b, m1.partner_of_boy[b]) > inst.boy_rank(b, m2.partner_of_boy[b]))
            return false;
    return true;
}

std::string format_agent(int index, Side side, int n) {
    if (n <= 26 && side == Side::boys) return std::string(1, static_cast<char>('a' + index));
    return std::to_string(index + 1);
}

std::string format_matching(const Instance& inst, const Matching& m) {
    int n = inst.n();
    std::string out = "{";
    for (int b = 0; b < n; ++b) {
        if (b) out += ",";
        out += format_agent(b, Side::boys, n);
        if (n > 26) out += ":";
        out += format_agent(m.partner_of_boy[b], Side::girls, n);
    }
    out += "}";
    return out;
}

std::string format_instance(const Instance& inst) {
    int n = inst.n();
    std::string out = std::to_string(n) + "\n";
    for (int b = 0; b < n; ++b) {
        for (int r = 0; r < n; ++r) {
            if (r) out += " ";
            out += format_agent(inst.boy_pref(b)[r], Side::girls, n);
        }
        out += "\n";
    }
    for (int g = 0; g < n; ++g) {
        for (int r = 0; r < n; ++r) {
            if (r) out += " ";
            out += format_agent(inst.girl_pref(g)[r], Side::boys, n);
        }
        out += "\n";
    }
    return out;
}

}  // namespace stablelattice
