#pragma once

#include <vector>

#include "stablelattice/core.hpp"
#include "stablelattice/robust.hpp"

namespace stablelattice {

// Exhaustively computed ground truth for one instance: every stable matching
// plus the full dominance relation. Deliberately naive; the production path
// is the rotation machinery, which the property suites compare against this.
struct LatticeSnapshot {
    std::vector<Matching> matchings;             // sorted by partner vector
    std::vector<std::vector<bool>> dominance;    // dominance[i][j]: i dominates j
    int top = -1;                                // index of the boy-optimal matching
    int bottom = -1;                             // index of the girl-optimal matching

    int index_of(const Matching& m) const;       // -1 when absent
    bool contains(const Matching& m) const { return index_of(m) >= 0; }
};

inline constexpr int kDefaultExhaustiveBound = 8;

// Scans all n! perfect matchings and keeps the stable ones. Throws DomainError
// when n exceeds the bound (8! = 40320 candidates is the intended ceiling).
LatticeSnapshot enumerate_stable(const Instance& inst, int bound = kDefaultExhaustiveBound);

// Closure checks for a subset of the stable lattice. The subset must consist
// of snapshot members (DomainError otherwise). A set is a sublattice iff it is
// both a join and a meet semi-sublattice; the empty set passes vacuously.
bool is_join_semi(const Instance& inst, const LatticeSnapshot& snap,
                  const std::vector<Matching>& subset);
bool is_meet_semi(const Instance& inst, const LatticeSnapshot& snap,
                  const std::vector<Matching>& subset);
bool is_sublattice(const Instance& inst, const LatticeSnapshot& snap,
                   const std::vector<Matching>& subset);

// Matchings of A that stay stable under every single error in `errors`,
// by direct blocking-pair checks against each perturbed instance.
std::vector<Matching> brute_force_robust(const Instance& a, const std::vector<ErrorSpec>& errors,
                                         int bound = kDefaultExhaustiveBound);

}  // namespace stablelattice
