#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stablelattice/bouquet.hpp"
#include "stablelattice/compression.hpp"
#include "stablelattice/core.hpp"

namespace stablelattice {

// One agent replaces their full preference list. new_list is 1-based and must
// be a permutation of the other side.
struct ErrorSpec {
    Side side = Side::girls;
    int agent = 0;  // 1-based
    std::vector<int> new_list;

    bool operator==(const ErrorSpec&) const = default;
};

// Per-pair weights, row = boy, both 1-based accessors.
struct WeightFunction {
    int n = 0;
    std::vector<double> w;  // n*n, row-major by boy

    double at(int boy, int girl) const { return w[static_cast<size_t>(boy - 1) * n + (girl - 1)]; }
};

// Output of the full-robustness pipeline. meta compresses the true lattice by
// the union of all per-error edge sets; exists says whether some matching is
// stable under every single error; witness is one such matching (the
// boy-optimal robust one) when it exists. per_error_edges lines up with the
// input error list.
struct RobustResult {
    MetaPoset meta;
    bool exists = false;
    std::optional<Matching> witness;
    std::vector<EdgeSet> per_error_edges;
};

// The instance with one preference list swapped out.
Instance apply_error(const Instance& inst, const ErrorSpec& err);

// Defining edges (primal orientation) of the sublattice of matchings that
// stay stable under this error. A girl error leaves that set a sublattice of
// the true lattice whose complement is join semi-closed; a boy error gives
// the meet semi-closed complement, so the search runs on the reversed order.
EdgeSet edges_for_error(const Instance& inst, const RotationPoset& poset, const ErrorSpec& err);

// Full pipeline: per-error bouquets, union of edges, shrink. exists iff the
// s-block and t-block of the condensation differ.
RobustResult build_robust(const Instance& inst, const RotationPoset& poset,
                          const std::vector<ErrorSpec>& errors);

// Maximum-weight fully robust matching via rotation weight deltas and a
// minimum cut over the condensation; ties resolved toward the boy-optimal
// (minimal closed set) solution. nullopt when no robust matching exists.
std::optional<std::pair<Matching, double>> max_weight_robust(const Instance& inst,
                                                             const RotationPoset& poset,
                                                             const RobustResult& robust,
                                                             const WeightFunction& w);

double matching_weight(const Matching& m, const WeightFunction& w);

// Error file: one error per line, "girl 3: b a d c" or "boy 2: 1 3 2 4".
// Agent and entries accept the same letter/number tokens as instance files;
// blank lines and # comments are skipped.
std::vector<ErrorSpec> parse_errors(std::string_view text, const Instance& inst);

// Weight file: n rows of n reals, row = boy. Blank lines and # comments are
// skipped.
WeightFunction parse_weights(std::string_view text, int n);

std::string format_error(const ErrorSpec& err, int n);

}  // namespace stablelattice
