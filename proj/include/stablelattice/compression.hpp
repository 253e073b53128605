#pragma once

#include <utility>
#include <vector>

#include "stablelattice/rotations.hpp"

namespace stablelattice {

// A directed edge over poset element ids. A closed set I separates the edge
// when it contains the head but not the tail, and crosses it the other way
// around; a splitting set does neither.
struct Edge {
    int tail;
    int head;
    bool operator==(const Edge&) const = default;
    auto operator<=>(const Edge&) const = default;
};

struct EdgeSet {
    std::vector<Edge> edges;
    bool operator==(const EdgeSet&) const = default;
};

bool separates(const ClosedSet& cs, const Edge& e);
bool crosses(const ClosedSet& cs, const Edge& e);

// A compression of the rotation poset: a partition of the element ids into
// meta-rotations plus an acyclic precedence among the blocks. Its proper
// closed sets (containing a_s, excluding a_t) generate a sublattice of the
// stable lattice. dag_edges is kept as produced (unreduced).
class MetaPoset {
public:
    // blocks must partition 0..element_count-1 and be numbered topologically:
    // every dag edge goes from a lower block id to a higher one. Violations
    // throw DomainError.
    MetaPoset(int element_count, std::vector<std::vector<int>> blocks,
              std::vector<std::pair<int, int>> dag_edges, int a_s, int a_t);

    int element_count() const { return element_count_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    const std::vector<int>& block(int id) const { return blocks_[id]; }
    const std::vector<std::pair<int, int>>& dag_edges() const { return dag_; }
    int a_s() const { return a_s_; }
    int a_t() const { return a_t_; }
    int block_of(int element) const { return block_of_[element]; }

    // Block membership as a bitset over element ids.
    DynBitset block_bits(int id) const;

    // Reflexive transitive closure of dag_edges, one bitset per block.
    std::vector<DynBitset> block_preds_closed() const;
    std::vector<DynBitset> block_succs_closed() const;

private:
    int element_count_;
    std::vector<std::vector<int>> blocks_;
    std::vector<std::pair<int, int>> dag_;
    int a_s_, a_t_;
    std::vector<int> block_of_;
};

// Adds E to the Hasse diagram and shrinks strongly connected components.
// Blocks are numbered in topological order (ties by smallest member id), so
// output is deterministic. a_s == a_t is legal and means the generated
// sublattice has no proper closed set.
MetaPoset shrink(const RotationPoset& poset, const EdgeSet& e);

// Every proper closed set of the compression, expanded to element bitsets
// (union of member blocks), sorted. Desk scale.
std::vector<ClosedSet> closed_sets_of_meta(const MetaPoset& meta);

// All stable matchings whose closed sets separate no edge of E, found by
// enumerating proper closed sets and filtering — independently of shrink, so
// the two paths can be tested against each other. Sorted. Desk scale.
std::vector<Matching> sublattice_from_edges(const RotationPoset& poset, const Instance& inst,
                                            const EdgeSet& e);

// The constructive direction: builds a compression generating exactly the
// given sublattice. Blocks come from closed-set differences of direct
// successor pairs; precedence from one fixed chain per block. Throws
// DomainError when sub is empty or not closed under join/meet. Desk scale.
MetaPoset compression_from_sublattice(const RotationPoset& poset, const Instance& inst,
                                      const std::vector<Matching>& sub);

// Drops edges no proper closed set separates, then edges whose every
// separating closed set separates another retained edge. Candidates are
// examined in descending (tail, head) order after sort+dedup, so smaller-id
// edges win ties; the generated sublattice is unchanged at every step.
// Enumerates closed sets, so desk scale.
EdgeSet minimize_edges(const RotationPoset& poset, const EdgeSet& e);

}  // namespace stablelattice
