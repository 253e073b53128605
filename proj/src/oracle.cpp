#include "stablelattice/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace stablelattice {

int LatticeSnapshot::index_of(const Matching& m) const {
    auto it = std::lower_bound(matchings.begin(), matchings.end(), m);
    if (it == matchings.end() || !(*it == m)) return -1;
    return static_cast<int>(it - matchings.begin());
}

namespace {

// Allocation-free stability test for one permutation; boy_of_girl is a
// scratch buffer of size n.
bool stable_perm(const Instance& inst, const std::vector<int>& girl_of_boy,
                 std::vector<int>& boy_of_girl) {
    int n = inst.n();
    for (int g = 0; g < n; ++g) boy_of_girl[g] = -1;
    for (int b = 0; b < n; ++b) boy_of_girl[girl_of_boy[b]] = b;
    for (int b = 0; b < n; ++b) {
        int limit = inst.boy_rank(b, girl_of_boy[b]);
        const auto& prefs = inst.boy_pref(b);
        for (int r = 0; r < limit; ++r) {
            int g = prefs[r];
            if (inst.girl_prefers(g, b, boy_of_girl[g])) return false;
        }
    }
    return true;
}

}  // namespace

LatticeSnapshot enumerate_stable(const Instance& inst, int bound) {
    int n = inst.n();
    if (n > bound)
        throw DomainError("exhaustive enumeration: n = " + std::to_string(n) +
                          " exceeds bound " + std::to_string(bound));

    LatticeSnapshot snap;
    std::vector<int> perm(n), boy_of_girl(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (stable_perm(inst, perm, boy_of_girl)) snap.matchings.push_back(Matching{perm});
    } while (std::next_permutation(perm.begin(), perm.end()));
    // next_permutation over an initially sorted range visits candidates in
    // lexicographic order, so matchings is already sorted.

    int count = static_cast<int>(snap.matchings.size());
    snap.dominance.assign(count, std::vector<bool>(count, false));
    for (int i = 0; i < count; ++i)
        for (int j = 0; j < count; ++j)
            snap.dominance[i][j] = dominates(inst, snap.matchings[i], snap.matchings[j]);
    for (int i = 0; i < count; ++i) {
        if (std::ranges::all_of(snap.dominance[i], [](bool d) { return d; })) snap.top = i;
        bool below_all = true;
        for (int j = 0; j < count; ++j) below_all = below_all && snap.dominance[j][i];
        if (below_all) snap.bottom = i;
    }
    return snap;
}

namespace {

std::vector<int> subset_indices(const LatticeSnapshot& snap, const std::vector<Matching>& subset) {
    std::vector<int> idx;
    idx.reserve(subset.size());
    for (const auto& m : subset) {
        int i = snap.index_of(m);
        if (i < 0) throw DomainError("closure check: subset member is not a stable matching");
        idx.push_back(i);
    }
    return idx;
}

bool closed_under(const Instance& inst, const LatticeSnapshot& snap,
                  const std::vector<Matching>& subset, bool join_op) {
    auto idx = subset_indices(snap, subset);
    for (std::size_t i = 0; i < idx.size(); ++i) {
        for (std::size_t j = i + 1; j < idx.size(); ++j) {
            Matching combined = join_op ? join(inst, snap.matchings[idx[i]], snap.matchings[idx[j]])
                                        : meet(inst, snap.matchings[idx[i]], snap.matchings[idx[j]]);
            int k = snap.index_of(combined);
            if (k < 0) throw DomainError("closure check: join/meet left the stable lattice");
            if (std::find(idx.begin(), idx.end(), k) == idx.end()) return false;
        }
    }
    return true;
}

}  // namespace

bool is_join_semi(const Instance& inst, const LatticeSnapshot& snap,
                  const std::vector<Matching>& subset) {
    return closed_under(inst, snap, subset, /*join_op=*/true);
}

bool is_meet_semi(const Instance& inst, const LatticeSnapshot& snap,
                  const std::vector<Matching>& subset) {
    return closed_under(inst, snap, subset, /*join_op=*/false);
}

bool is_sublattice(const Instance& inst, const LatticeSnapshot& snap,
                   const std::vector<Matching>& subset) {
    return is_join_semi(inst, snap, subset) && is_meet_semi(inst, snap, subset);
}

std::vector<Matching> brute_force_robust(const Instance& a, const std::vector<ErrorSpec>& errors,
                                         int bound) {
    auto snap = enumerate_stable(a, bound);
    std::vector<Instance> perturbed;
    perturbed.reserve(errors.size());
    for (const auto& err : errors) perturbed.push_back(apply_error(a, err));

    std::vector<Matching> out;
    for (const auto& m : snap.matchings) {
        bool robust = std::ranges::all_of(
            perturbed, [&](const Instance& b) { return is_stable(b, m); });
        if (robust) out.push_back(m);
    }
    return out;
}

}  // namespace stablelattice
