#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <unordered_map>
#include <vector>

#include "stablelattice/compression.hpp"
#include "stablelattice/rotations.hpp"

namespace stablelattice {

// Partition predicate over the stable lattice: true puts the matching in L1,
// false in L2. The algorithms assume L1 is a sublattice and L2 a join
// semi-sublattice in the traversal order; violations surface as DomainError.
using MembershipOracle = std::function<bool(const Matching&)>;

// normal: traverse the lattice as built (boy-optimal on top). reversed: the
// upside-down lattice, which swaps s/t and meet/join — used when L2 is a meet
// semi-sublattice. A reversed-order closed set is the complement of a normal
// one; the same element ids are used throughout.
enum class LatticeOrientation { normal, reversed };

// Order queries in traversal terms over a shared poset.
class LatticeView {
public:
    LatticeView(const RotationPoset& poset, LatticeOrientation o) : poset_(&poset), o_(o) {}

    const RotationPoset& poset() const { return *poset_; }
    LatticeOrientation orientation() const { return o_; }
    bool reversed() const { return o_ == LatticeOrientation::reversed; }

    int bottom() const { return reversed() ? RotationPoset::id_t : RotationPoset::id_s; }
    int top() const { return reversed() ? RotationPoset::id_s : RotationPoset::id_t; }
    bool precedes(int u, int v) const {
        return reversed() ? poset_->precedes(v, u) : poset_->precedes(u, v);
    }
    const DynBitset& preds_closed(int v) const {
        return reversed() ? poset_->succs_closed(v) : poset_->preds_closed(v);
    }
    const DynBitset& succs_closed(int v) const {
        return reversed() ? poset_->preds_closed(v) : poset_->succs_closed(v);
    }
    DynBitset preds_strict(int v) const;
    DynBitset succs_strict(int v) const;

    // A view closed set maps to the primal one directly (normal) or by
    // complement (reversed).
    DynBitset to_primal(const DynBitset& view_closed) const;

    // Translates a view edge (tail, head) into the equivalent primal edge:
    // identity under normal orientation, reversal under reversed (separation
    // in the view equals separation of the flipped edge in the primal order).
    Edge to_primal(const Edge& view_edge) const;

private:
    const RotationPoset* poset_;
    LatticeOrientation o_;
};

// Evaluates "the matching of this view closed set lies in L1", memoized on
// the primal closed-set bitset. One cache per algorithm run; the probe sets
// the algorithms generate repeat heavily.
class OracleCache {
public:
    OracleCache(const Instance& inst, const RotationPoset& poset, MembershipOracle oracle,
                LatticeOrientation o);

    bool in_l1(const DynBitset& view_closed);
    Matching matching_of(const DynBitset& view_closed) const;
    const LatticeView& view() const { return view_; }
    const Instance& instance() const { return *inst_; }

    // Number of distinct closed sets evaluated (cache misses).
    long evaluations() const { return evaluations_; }

    // Rechecks every memoized probe against a finished defining edge set:
    // membership in L1 must equal separating none of the edges (in primal
    // terms). Throws DomainError on disagreement — the oracle's partition
    // lacks the promised sublattice structure.
    void verify_consistent(const EdgeSet& primal_edges) const;

private:
    const Instance* inst_;
    LatticeView view_;
    MembershipOracle oracle_;
    std::unordered_map<DynBitset, bool, DynBitset::Hash> memo_;
    long evaluations_ = 0;
};

// One tail and its incomparable heads; splitting_set records the splitting
// set current when the flower was found (view element ids), the region still
// holding every flower not yet discovered at that point.
struct Flower {
    int tail = -1;
    std::vector<int> heads;
    DynBitset splitting_set;
};

// Flowers in discovery order (tails strictly descending in the view order).
// defining_edges is always in primal orientation, ready for shrink and
// sublattice_from_edges.
struct Bouquet {
    std::vector<Flower> flowers;
    EdgeSet defining_edges;
    LatticeOrientation orientation = LatticeOrientation::normal;
};

// The unique maximal element v of S (view order) whose two probes put
// M(S minus strict-successors) in L1 and M(S minus closed-successors) in
// L2; nullopt when no candidate exists or the maximum is not unique.
std::optional<int> find_next_tail(OracleCache& oracle, const DynBitset& s);

// Heads of the flower at tail r within splitting set S. Returns {bottom}
// when the lower probe base Y is empty and the bottom matching lies in L2.
// Throws DomainError when the result would be empty (invalid partition).
// A non-null trace stream receives the X, Y, and V sets of the run.
std::vector<int> find_flower(OracleCache& oracle, const DynBitset& s, int r,
                             std::ostream* trace = nullptr);

// Runs the full loop: repeatedly find the next tail, grow its flower, and
// carve the flower's upward cones out of S. The returned edge set defines L1
// (a closed set generates an L1 matching iff it separates none of the edges).
// Throws DomainError with diagnostics when the oracle's partition violates
// the required structure. A non-null trace stream receives one block per
// round: the splitting set S, the tail, and the flower subroutine's sets.
Bouquet find_bouquet(const Instance& inst, const RotationPoset& poset,
                     const MembershipOracle& oracle,
                     LatticeOrientation o = LatticeOrientation::normal,
                     std::ostream* trace = nullptr);

// When L1 and L2 are both sublattices, their defining edges form one
// alternating path from t to s. sequence holds r_0..r_{2k+1}: the (head,
// tail) pairs of the L2-defining edges along that path; a closed set
// generates an L1 matching iff it contains r_{2i} but not r_{2i+1} for some
// i. An empty sequence means L1 is empty; the single pair (s, t) means L2 is
// empty. Throws DomainError when the partition is not two sublattices.
struct CanonicalPath {
    std::vector<int> sequence;
    std::vector<int> path;  // element ids from t to s
    EdgeSet l1_edges, l2_edges;
};

CanonicalPath canonical_path(const Instance& inst, const RotationPoset& poset,
                             const MembershipOracle& oracle);

bool on_l1_side(const CanonicalPath& p, const ClosedSet& cs);

}  // namespace stablelattice
