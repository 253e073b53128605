#pragma once

// Shared fixtures: a 4x4 instance whose lattice has exactly four matchings
// arranged in a diamond (two incomparable rotations), small enough to verify
// every expected value below by hand.

#include <string_view>

#include "stablelattice/core.hpp"

namespace fixtures {

inline constexpr std::string_view kDiamondText = R"(# four stable matchings, two incomparable rotations
4
1 2 3 4
2 1 3 4
3 1 4 2
4 3 1 2
b a c d
a b c d
d c a b
c d a b
)";

inline stablelattice::Instance diamond() {
    return stablelattice::parse_instance(kDiamondText);
}

// The four stable matchings, boy-indexed 0-based. m0 is boy-optimal, mz
// girl-optimal; m1 and m2 are incomparable, m1 = m0 after moving c,d and
// m2 = m0 after moving a,b.
inline const stablelattice::Matching kM0{{0, 1, 2, 3}};
inline const stablelattice::Matching kM1{{0, 1, 3, 2}};
inline const stablelattice::Matching kM2{{1, 0, 2, 3}};
inline const stablelattice::Matching kMz{{1, 0, 3, 2}};

// Swapping b and c in girl 1's list leaves m0 as the only matching that stays
// stable, because (c,1) or (a,1) blocks each of the others.
inline constexpr std::string_view kGirl1Error = "girl 1: c a b d";

// Moving girl 2 to the front of boy a's list blocks m0 and m1 via (a,2).
inline constexpr std::string_view kBoyAError = "boy a: 2 1 3 4";

}  // namespace fixtures
