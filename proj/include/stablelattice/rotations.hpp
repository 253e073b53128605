#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "stablelattice/bitset.hpp"
#include "stablelattice/core.hpp"

namespace stablelattice {

// An ordered cyclic list of matched pairs (b_i, g_i), all boys and all girls
// distinct. Eliminating it in a matching where it is exposed moves each b_i
// from g_i to g_{i+1} (indices mod size). Stored in canonical form: rotated
// so the smallest boy index comes first.
struct Rotation {
    std::vector<std::pair<int, int>> pairs;

    int size() const { return static_cast<int>(pairs.size()); }
    bool operator==(const Rotation&) const = default;
    auto operator<=>(const Rotation&) const = default;

    // Rotates the pair list so the smallest boy leads. Throws DomainError on
    // fewer than two pairs or repeated boys/girls.
    static Rotation canonical(std::vector<std::pair<int, int>> pairs);
};

// Precedence order on the rotations of an instance, with dummy elements s
// (before everything) and t (after everything). Element ids: s = 0, t = 1,
// rotations from 2 upward in discovery order along the elimination chain
// from the boy-optimal to the girl-optimal matching; ids form a linear
// extension of the order. Immutable after build_rotation_poset.
class RotationPoset {
public:
    static constexpr int id_s = 0;
    static constexpr int id_t = 1;
    static constexpr int first_rotation_id = 2;

    int n() const { return n_; }
    int element_count() const { return static_cast<int>(rotations_.size()) + 2; }
    int rotation_count() const { return static_cast<int>(rotations_.size()); }
    const std::vector<Rotation>& rotations() const { return rotations_; }
    const Rotation& rotation(int id) const { return rotations_[id - first_rotation_id]; }

    // Transitive reduction of the precedence order, sorted (u, v) pairs with
    // u preceding v; includes the s/t edges (s -> t alone when no rotations).
    const std::vector<std::pair<int, int>>& hasse_edges() const { return hasse_; }

    bool precedes(int u, int v) const { return u != v && preds_closed_[v].test(u); }

    // Downward/upward cones of one element over element ids. The closed
    // variants include the element itself.
    const DynBitset& preds_closed(int v) const { return preds_closed_[v]; }   // J_v
    const DynBitset& succs_closed(int v) const { return succs_closed_[v]; }   // J'_v
    DynBitset preds_strict(int v) const;                                      // I_v
    DynBitset succs_strict(int v) const;                                      // I'_v

    // The element moving boy b to girl g: a rotation id, or s when bg is in
    // the boy-optimal matching; nullopt when b never reaches g. The element
    // moving b from g is t when bg is in the girl-optimal matching.
    std::optional<int> move_to(int b, int g) const;
    std::optional<int> move_from(int b, int g) const;

    // b's stable-partner ladder from the boy-optimal matching downward:
    // hop 0 is (s, M0-partner), each later hop the rotation moving him there.
    // The hop elements form a chain, so a closed set always selects a prefix.
    struct Hop {
        int element;
        int girl;
    };
    const std::vector<Hop>& hops_of_boy(int b) const { return hops_[b]; }

    friend RotationPoset build_rotation_poset(const Instance& inst);

private:
    int n_ = 0;
    std::vector<Rotation> rotations_;
    std::vector<std::pair<int, int>> hasse_;
    std::vector<DynBitset> preds_closed_, succs_closed_;
    std::vector<int> move_to_, move_from_;  // flattened n*n, -1 when absent
    std::vector<std::vector<Hop>> hops_;
};

// A downward-closed element subset containing s and excluding t — the lattice
// coordinate of one stable matching.
struct ClosedSet {
    DynBitset members;

    bool contains(int id) const { return members.test(id); }
    bool operator==(const ClosedSet&) const = default;
    auto operator<=>(const ClosedSet&) const = default;
};

// All rotations exposed in m, via the successor-girl cycle scan; sorted by
// leading boy. Empty iff m is the girl-optimal matching. m must be stable.
std::vector<Rotation> exposed_rotations(const Instance& inst, const Matching& m);

// Applies one exposed rotation. Throws DomainError when rho is not exposed
// in m (wrong pairs or wrong successor girls).
Matching eliminate(const Instance& inst, const Matching& m, const Rotation& rho);

// Discovers every rotation along one elimination chain (each appears exactly
// once on any chain), derives the precedence order, and reduces it.
RotationPoset build_rotation_poset(const Instance& inst);

bool is_proper_closed(const RotationPoset& poset, const DynBitset& members);

// The bijection between proper closed sets and stable matchings, both ways.
// matching_from_closed_set throws DomainError when cs is not proper closed;
// closed_set_from_matching throws when m is not stable for inst.
Matching matching_from_closed_set(const RotationPoset& poset, const Instance& inst,
                                  const ClosedSet& cs);
ClosedSet closed_set_from_matching(const RotationPoset& poset, const Instance& inst,
                                   const Matching& m);

// Every proper closed set, sorted by member bitset. Output size equals the
// number of stable matchings; intended for desk-scale instances.
std::vector<ClosedSet> enumerate_proper_closed_sets(const RotationPoset& poset);

// Generic downset enumeration over the poset induced on `universe`, given
// per-element closed predecessor cones. Ids must be topologically sorted
// (true for rotation posets and for shrunk block posets). The workhorse
// behind both poset- and meta-level enumeration; output-sensitive.
std::vector<DynBitset> all_downsets(const std::vector<DynBitset>& preds_closed,
                                    const DynBitset& universe);

}  // namespace stablelattice
