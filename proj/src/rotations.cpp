#include "stablelattice/rotations.hpp"

#include <algorithm>
#include <cassert>
#include <string>
#include <utility>

namespace stablelattice {

Rotation Rotation::canonical(std::vector<std::pair<int, int>> pairs) {
    if (pairs.size() < 2) throw DomainError("rotation needs at least two pairs");
    std::size_t lead = 0;
    std::vector<char> seen_boy, seen_girl;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto [b, g] = pairs[i];
        if (b < 0 || g < 0) throw DomainError("rotation pair index out of range");
        std::size_t need = static_cast<std::size_t>(std::max(b, g)) + 1;
        if (seen_boy.size() < need) seen_boy.resize(need, 0);
        if (seen_girl.size() < need) seen_girl.resize(need, 0);
        if (seen_boy[b] || seen_girl[g]) throw DomainError("rotation repeats a boy or girl");
        seen_boy[b] = seen_girl[g] = 1;
        if (b < pairs[lead].first) lead = i;
    }
    std::rotate(pairs.begin(), pairs.begin() + lead, pairs.end());
    return Rotation{std::move(pairs)};
}

namespace {

// s_M(b): the first girl after b's partner on his list who prefers b to her
// partner, or -1. The cycles of b -> partner(s_M(b)) are the exposed
// rotations.
int successor_girl(const Instance& inst, const std::vector<int>& girl_of,
                   const std::vector<int>& boy_of, int b) {
    const auto& prefs = inst.boy_pref(b);
    for (int r = inst.boy_rank(b, girl_of[b]) + 1; r < inst.n(); ++r) {
        int g = prefs[r];
        if (inst.girl_prefers(g, b, boy_of[g])) return g;
    }
    return -1;
}

// Exposed rotations of a matching already known to be stable.
std::vector<Rotation> exposed_in_stable(const Instance& inst, const std::vector<int>& girl_of,
                                        const std::vector<int>& boy_of) {
    int n = inst.n();
    std::vector<int> next(n, -1);
    for (int b = 0; b < n; ++b) {
        int g = successor_girl(inst, girl_of, boy_of, b);
        if (g >= 0) next[b] = boy_of[g];
    }

    // Walk the functional graph; a walk that reenters itself found a cycle.
    std::vector<Rotation> out;
    std::vector<int> state(n, 0);  // 0 unvisited, 1 on current walk, 2 done
    std::vector<int> walk;
    for (int start = 0; start < n; ++start) {
        if (state[start] != 0) continue;
        walk.clear();
        int b = start;
        while (b != -1 && state[b] == 0) {
            state[b] = 1;
            walk.push_back(b);
            b = next[b];
        }
        if (b != -1 && state[b] == 1) {
            auto cycle_start = std::find(walk.begin(), walk.end(), b);
            std::vector<std::pair<int, int>> pairs;
            for (auto it = cycle_start; it != walk.end(); ++it)
                pairs.emplace_back(*it, girl_of[*it]);
            out.push_back(Rotation::canonical(std::move(pairs)));
        }
        for (int w : walk) state[w] = 2;
    }
    std::sort(out.begin(), out.end(),
              [](const Rotation& a, const Rotation& b) { return a.pairs[0] < b.pairs[0]; });
    return out;
}

}  // namespace

std::vector<Rotation> exposed_rotations(const Instance& inst, const Matching& m) {
    if (!is_stable(inst, m)) throw DomainError("exposed_rotations: matching is not stable");
    return exposed_in_stable(inst, m.partner_of_boy, partner_of_girl(m));
}

Matching eliminate(const Instance& inst, const Matching& m, const Rotation& rho) {
    auto girl_of = m.partner_of_boy;
    auto boy_of = partner_of_girl(m);
    int k = rho.size();
    if (k < 2) throw DomainError("eliminate: malformed rotation");
    for (int i = 0; i < k; ++i) {
        auto [b, g] = rho.pairs[i];
        int g_next = rho.pairs[(i + 1) % k].second;
        if (girl_of[b] != g) throw DomainError("eliminate: rotation pair is not matched");
        if (successor_girl(inst, girl_of, boy_of, b) != g_next)
            throw DomainError("eliminate: rotation is not exposed");
    }
    Matching out = m;
    for (int i = 0; i < k; ++i)
        out.partner_of_boy[rho.pairs[i].first] = rho.pairs[(i + 1) % k].second;
    return out;
}

RotationPoset build_rotation_poset(const Instance& inst) {
    int n = inst.n();
    RotationPoset poset;
    poset.n_ = n;

    Matching m0 = deferred_acceptance(inst, Side::boys);
    Matching mz = deferred_acceptance(inst, Side::girls);

    poset.move_to_.assign(static_cast<std::size_t>(n) * n, -1);
    poset.move_from_.assign(static_cast<std::size_t>(n) * n, -1);
    poset.hops_.assign(n, {});
    for (int b = 0; b < n; ++b) {
        poset.move_to_[b * n + m0.partner(b)] = RotationPoset::id_s;
        poset.hops_[b].push_back({RotationPoset::id_s, m0.partner(b)});
    }

    // Walk one elimination chain from the boy-optimal matching, always taking
    // the exposed rotation with the smallest leading boy. Every rotation
    // appears exactly once on any such chain, and elimination order respects
    // precedence, so ids are a linear extension. above[g*n+b] records the
    // rotation that lifted g's partner from weakly below b to strictly above
    // b; each slot is written at most once because partners only improve.
    std::vector<int> above(static_cast<std::size_t>(n) * n, -1);
    auto girl_of = m0.partner_of_boy;
    auto boy_of = partner_of_girl(m0);
    for (;;) {
        auto exposed = exposed_in_stable(inst, girl_of, boy_of);
        if (exposed.empty()) break;
        const Rotation rho = exposed.front();
        int id = RotationPoset::first_rotation_id + static_cast<int>(poset.rotations_.size());
        int k = rho.size();
        for (int i = 0; i < k; ++i) {
            auto [b, g] = rho.pairs[i];
            int g_next = rho.pairs[(i + 1) % k].second;
            poset.move_from_[b * n + g] = id;
            poset.move_to_[b * n + g_next] = id;
            poset.hops_[b].push_back({id, g_next});

            // g_next's partner improves from the next boy in the cycle to b.
            int b_old = rho.pairs[(i + 1) % k].first;
            int lo = inst.girl_rank(g_next, b);
            int hi = inst.girl_rank(g_next, b_old);
            for (int r = lo + 1; r <= hi; ++r) {
                int crossed = inst.girl_pref(g_next)[r];
                assert(above[g_next * n + crossed] == -1);
                above[g_next * n + crossed] = id;
            }
        }
        for (int i = 0; i < k; ++i) {
            int b = rho.pairs[i].first;
            int g_next = rho.pairs[(i + 1) % k].second;
            girl_of[b] = g_next;
            boy_of[g_next] = b;
        }
        poset.rotations_.push_back(rho);
    }
    assert(girl_of == mz.partner_of_boy);
    for (int b = 0; b < n; ++b) poset.move_from_[b * n + mz.partner(b)] = RotationPoset::id_t;

    // Precedence generators, per rotation rho = (b_0,g_0)..(b_{k-1},g_{k-1}):
    // the element moving b_i to g_i precedes rho, and so does the rotation
    // that lifted any girl strictly between g_i and g_{i+1} on b_i's list
    // above b_i (she must sit above b_i when rho is eliminated, or b_i would
    // have stopped at her).
    int count = poset.element_count();
    std::vector<std::vector<int>> gen_preds(count);
    for (int id = RotationPoset::first_rotation_id; id < count; ++id) {
        const Rotation& rho = poset.rotation(id);
        int k = rho.size();
        auto& preds = gen_preds[id];
        for (int i = 0; i < k; ++i) {
            auto [b, g] = rho.pairs[i];
            int g_next = rho.pairs[(i + 1) % k].second;
            int mover = poset.move_to_[b * n + g];
            assert(mover >= 0 && mover < id);
            preds.push_back(mover);
            for (int r = inst.boy_rank(b, g) + 1; r < inst.boy_rank(b, g_next); ++r) {
                int lifter = above[inst.boy_pref(b)[r] * n + b];
                if (lifter >= 0) {
                    assert(lifter < id);
                    preds.push_back(lifter);
                }
            }
        }
        std::sort(preds.begin(), preds.end());
        preds.erase(std::unique(preds.begin(), preds.end()), preds.end());
    }
    gen_preds[RotationPoset::id_t].push_back(RotationPoset::id_s);
    for (int id = RotationPoset::first_rotation_id; id < count; ++id)
        gen_preds[RotationPoset::id_t].push_back(id);

    // Closed cones by DP in id order (valid because ids extend the order),
    // then the transpose.
    poset.preds_closed_.assign(count, DynBitset(count));
    poset.preds_closed_[RotationPoset::id_s].set(RotationPoset::id_s);
    for (int id = RotationPoset::first_rotation_id; id < count; ++id) {
        auto& cone = poset.preds_closed_[id];
        cone.set(id);
        cone.set(RotationPoset::id_s);
        for (int p : gen_preds[id]) cone |= poset.preds_closed_[p];
    }
    poset.preds_closed_[RotationPoset::id_t] = DynBitset::full(count);
    poset.succs_closed_.assign(count, DynBitset(count));
    for (int v = 0; v < count; ++v)
        poset.preds_closed_[v].for_each([&](int u) { poset.succs_closed_[u].set(v); });

    // Hasse reduction: a generator predecessor u of v is a cover iff it is
    // not a strict predecessor of another generator predecessor of v. The
    // in-place reset is sound only because gen_preds is sorted ascending and
    // ids extend the order: a cone OR-ed in later can re-add u only when u
    // strictly precedes that cone's element.
    for (int v = 0; v < count; ++v) {
        if (v == RotationPoset::id_s) continue;
        DynBitset mask(count);
        for (int u : gen_preds[v]) {
            mask |= poset.preds_closed_[u];
            mask.reset(u);
        }
        for (int u : gen_preds[v])
            if (!mask.test(u)) poset.hasse_.emplace_back(u, v);
    }
    std::sort(poset.hasse_.begin(), poset.hasse_.end());
    poset.hasse_.erase(std::unique(poset.hasse_.begin(), poset.hasse_.end()), poset.hasse_.end());
    return poset;
}

DynBitset RotationPoset::preds_strict(int v) const {
    DynBitset out = preds_closed_[v];
    out.reset(v);
    return out;
}

DynBitset RotationPoset::succs_strict(int v) const {
    DynBitset out = succs_closed_[v];
    out.reset(v);
    return out;
}

std::optional<int> RotationPoset::move_to(int b, int g) const {
    int id = move_to_[b * n_ + g];
    if (id < 0) return std::nullopt;
    return id;
}

std::optional<int> RotationPoset::move_from(int b, int g) const {
    int id = move_from_[b * n_ + g];
    if (id < 0) return std::nullopt;
    return id;
}

bool is_proper_closed(const RotationPoset& poset, const DynBitset& members) {
    if (members.size() != poset.element_count()) return false;
    if (!members.test(RotationPoset::id_s) || members.test(RotationPoset::id_t)) return false;
    bool ok = true;
    members.for_each([&](int v) {
        if (!poset.preds_closed(v).is_subset_of(members)) ok = false;
    });
    return ok;
}

Matching matching_from_closed_set(const RotationPoset& poset, const Instance& inst,
                                  const ClosedSet& cs) {
    if (!is_proper_closed(poset, cs.members))
        throw DomainError("matching_from_closed_set: not a proper closed set");
    int n = inst.n();
    std::vector<int> girl_of(n);
    for (int b = 0; b < n; ++b) {
        const auto& hops = poset.hops_of_boy(b);
        // Hop elements form a chain, so membership is monotone along hops:
        // binary search for the last hop inside the set.
        std::size_t lo = 0, hi = hops.size() - 1;
        while (lo < hi) {
            std::size_t mid = (lo + hi + 1) / 2;
            if (cs.members.test(hops[mid].element))
                lo = mid;
            else
                hi = mid - 1;
        }
        girl_of[b] = hops[lo].girl;
    }
    return Matching{std::move(girl_of)};
}

ClosedSet closed_set_from_matching(const RotationPoset& poset, const Instance& inst,
                                   const Matching& m) {
    if (!is_stable(inst, m)) throw DomainError("closed_set_from_matching: matching is not stable");
    int count = poset.element_count();
    ClosedSet cs{DynBitset(count)};
    cs.members.set(RotationPoset::id_s);
    for (int b = 0; b < inst.n(); ++b) {
        const auto& hops = poset.hops_of_boy(b);
        std::size_t at = hops.size();
        for (std::size_t i = 0; i < hops.size(); ++i) {
            if (hops[i].girl == m.partner(b)) {
                at = i;
                break;
            }
        }
        if (at == hops.size())
            throw DomainError("closed_set_from_matching: partner not on the stable ladder");
        for (std::size_t i = 0; i <= at; ++i) cs.members.set(hops[i].element);
    }
    return cs;
}

std::vector<DynBitset> all_downsets(const std::vector<DynBitset>& preds_closed,
                                    const DynBitset& universe) {
    int count = universe.size();
    std::vector<DynBitset> downsets{DynBitset(count)};
    universe.for_each([&](int v) {
        DynBitset need = preds_closed[v] & universe;
        need.reset(v);
        std::size_t existing = downsets.size();
        for (std::size_t i = 0; i < existing; ++i) {
            if (need.is_subset_of(downsets[i])) {
                DynBitset extended = downsets[i];
                extended.set(v);
                downsets.push_back(std::move(extended));
            }
        }
    });
    return downsets;
}

std::vector<ClosedSet> enumerate_proper_closed_sets(const RotationPoset& poset) {
    int count = poset.element_count();
    DynBitset universe(count);
    for (int id = RotationPoset::first_rotation_id; id < count; ++id) universe.set(id);

    std::vector<DynBitset> preds(count, DynBitset(count));
    for (int id = 0; id < count; ++id) preds[id] = poset.preds_closed(id);

    std::vector<ClosedSet> out;
    for (auto& d : all_downsets(preds, universe)) {
        d.set(RotationPoset::id_s);
        out.push_back(ClosedSet{std::move(d)});
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace stablelattice
