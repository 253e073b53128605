#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "stablelattice/errors.hpp"

namespace stablelattice {

enum class Side { boys, girls };

// A complete strict preference profile for n boys and n girls. Indices are
// 0-based everywhere in the library; the text format is 1-based with optional
// letter labels (a..z for 1..26). Immutable after construction.
class Instance {
public:
    // Each side must hold exactly n lists, each a permutation of 0..n-1.
    // Throws DomainError otherwise.
    Instance(std::vector<std::vector<int>> boy_prefs, std::vector<std::vector<int>> girl_prefs);

    int n() const { return n_; }
    const std::vector<std::vector<int>>& boy_prefs() const { return boy_prefs_; }
    const std::vector<std::vector<int>>& girl_prefs() const { return girl_prefs_; }
    const std::vector<int>& boy_pref(int b) const { return boy_prefs_[b]; }
    const std::vector<int>& girl_pref(int g) const { return girl_prefs_[g]; }

    // Rank 0 is the most preferred partner.
    int boy_rank(int b, int g) const { return boy_rank_[b * n_ + g]; }
    int girl_rank(int g, int b) const { return girl_rank_[g * n_ + b]; }
    bool boy_prefers(int b, int g1, int g2) const { return boy_rank(b, g1) < boy_rank(b, g2); }
    bool girl_prefers(int g, int b1, int b2) const { return girl_rank(g, b1) < girl_rank(g, b2); }

    bool operator==(const Instance& o) const {
        return boy_prefs_ == o.boy_prefs_ && girl_prefs_ == o.girl_prefs_;
    }

private:
    int n_ = 0;
    std::vector<std::vector<int>> boy_prefs_, girl_prefs_;
    std::vector<int> boy_rank_, girl_rank_;  // flattened n*n rank tables
};

// A perfect matching, stored boy-side: partner_of_boy[b] is b's girl.
struct Matching {
    std::vector<int> partner_of_boy;

    int n() const { return static_cast<int>(partner_of_boy.size()); }
    int partner(int b) const { return partner_of_boy[b]; }
    bool operator==(const Matching&) const = default;
    auto operator<=>(const Matching&) const = default;
};

// Inverse view: result[g] is g's boy. Throws DomainError if m is not a
// permutation of 0..n-1.
std::vector<int> partner_of_girl(const Matching& m);

struct BlockingPair {
    int boy;
    int girl;
    bool operator==(const BlockingPair&) const = default;
    auto operator<=>(const BlockingPair&) const = default;
};

// Reads the instance text format: first effective line n, then n boys' lists,
// then n girls' lists; tokens are 1-based numbers or letters a..z; lines whose
// first non-blank character is '#' are comments. Throws ParseError.
Instance parse_instance(std::string_view text);

// All pairs (b,g) not matched in m where b and g strictly prefer each other to
// their m-partners, sorted by (boy, girl). Empty iff m is stable.
std::vector<BlockingPair> blocking_pairs(const Instance& inst, const Matching& m);

bool is_stable(const Instance& inst, const Matching& m);

// Gale-Shapley proposal algorithm. Boys proposing yields the boy-optimal
// stable matching M0, girls proposing the girl-optimal Mz. The result is
// independent of proposal order, so no tie-breaking is needed.
Matching deferred_acceptance(const Instance& inst, Side proposing);

// Lattice operations over stable matchings: meet gives every boy the more
// preferred of his two partners, join the less preferred. For stable inputs
// the result is stable; if the per-boy choice fails to form a matching the
// inputs violated the precondition and DomainError is thrown.
Matching meet(const Instance& inst, const Matching& m1, const Matching& m2);
Matching join(const Instance& inst, const Matching& m1, const Matching& m2);

// True iff every boy weakly prefers his m1-partner to his m2-partner.
bool dominates(const Instance& inst, const Matching& m1, const Matching& m2);

// Text helpers shared by the CLI and the tests. Boys print as letters and
// girls as 1-based numbers while n <= 26 (the instance-format labels); both
// fall back to 1-based numbers beyond that.
std::string format_agent(int index, Side side, int n);
std::string format_matching(const Instance& inst, const Matching& m);

// Serializes an instance back to the text format parse_instance reads.
std::string format_instance(const Instance& inst);

}  // namespace stablelattice
