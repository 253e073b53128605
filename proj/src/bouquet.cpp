#include "stablelattice/bouquet.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <string>
#include <utility>

namespace stablelattice {

DynBitset LatticeView::preds_strict(int v) const {
    DynBitset out = preds_closed(v);
    out.reset(v);
    return out;
}

DynBitset LatticeView::succs_strict(int v) const {
    DynBitset out = succs_closed(v);
    out.reset(v);
    return out;
}

DynBitset LatticeView::to_primal(const DynBitset& view_closed) const {
    if (!reversed()) return view_closed;
    return DynBitset::full(view_closed.size()) - view_closed;
}

Edge LatticeView::to_primal(const Edge& view_edge) const {
    if (!reversed()) return view_edge;
    return Edge{view_edge.head, view_edge.tail};
}

OracleCache::OracleCache(const Instance& inst, const RotationPoset& poset,
                         MembershipOracle oracle, LatticeOrientation o)
    : inst_(&inst), view_(poset, o), oracle_(std::move(oracle)) {}

Matching OracleCache::matching_of(const DynBitset& view_closed) const {
    DynBitset primal = view_.to_primal(view_closed);
    const RotationPoset& poset = view_.poset();
    int n = inst_->n();
    std::vector<int> partner(n);
    for (int b = 0; b < n; ++b) {
        const auto& hops = poset.hops_of_boy(b);
        // The hop elements form a chain, so membership is monotone along the
        // ladder and the partner sits at the last selected hop. Probe sets
        // are built from cones and stay closed; no validation here.
        auto first_out = std::partition_point(
            hops.begin(), hops.end(),
            [&](const RotationPoset::Hop& h) { return primal.test(h.element); });
        if (first_out == hops.begin())
            throw DomainError("oracle probe set does not contain the bottom dummy");
        partner[b] = std::prev(first_out)->girl;
    }
    return Matching{std::move(partner)};
}

bool OracleCache::in_l1(const DynBitset& view_closed) {
    DynBitset primal = view_.to_primal(view_closed);
    auto it = memo_.find(primal);
    if (it != memo_.end()) return it->second;
    bool value = oracle_(matching_of(view_closed));
    ++evaluations_;
    memo_.emplace(std::move(primal), value);
    return value;
}

void OracleCache::verify_consistent(const EdgeSet& primal_edges) const {
    for (const auto& [primal, in_l1] : memo_) {
        bool separated = std::any_of(
            primal_edges.edges.begin(), primal_edges.edges.end(),
            [&](const Edge& e) { return primal.test(e.head) && !primal.test(e.tail); });
        if (in_l1 == separated)
            throw DomainError(
                "membership oracle disagrees with the computed defining edges: "
                "the partition is not a sublattice plus a semi-sublattice");
    }
}

std::optional<int> find_next_tail(OracleCache& oracle, const DynBitset& s) {
    const LatticeView& view = oracle.view();

    std::vector<int> candidates;
    s.for_each([&](int v) {
        if (v < RotationPoset::first_rotation_id) return;
        // Probe within the splitting set only: s excludes both endpoints of
        // every defining edge found so far, so those edges cannot separate
        // the probe sets.  (Probing all of the poset instead can separate an
        // already-found edge whose head is incomparable with v, masking a
        // genuine tail.)  Dropping everything above v keeps the matching in
        // L1 exactly when no undiscovered tail lies above v; dropping v
        // itself as well must flip the matching into L2.
        if (!oracle.in_l1(s - view.succs_strict(v))) return;
        if (oracle.in_l1(s - view.succs_closed(v))) return;
        candidates.push_back(v);
    });
    if (candidates.empty()) return std::nullopt;

    std::vector<int> maximal;
    for (int v : candidates) {
        bool below = std::any_of(candidates.begin(), candidates.end(),
                                 [&](int u) { return view.precedes(v, u); });
        if (!below) maximal.push_back(v);
    }
    if (maximal.size() != 1) return std::nullopt;
    return maximal.front();
}

namespace {

void trace_ids(std::ostream* trace, const char* label, const std::vector<int>& ids) {
    if (!trace) return;
    *trace << label << ':';
    for (int v : ids) *trace << ' ' << v;
    *trace << '\n';
}

void trace_ids(std::ostream* trace, const char* label, const DynBitset& bits) {
    if (trace) trace_ids(trace, label, bits.to_vector());
}

}  // namespace

std::vector<int> find_flower(OracleCache& oracle, const DynBitset& s, int r,
                             std::ostream* trace) {
    const LatticeView& view = oracle.view();
    int count = view.poset().element_count();

    // Y: union of the full downward cones below r that still generate L1
    // matchings. It swallows every earlier tail, pinning the probes below to
    // edges whose tail is exactly r.
    std::vector<int> x;
    DynBitset y(count);
    view.preds_strict(r).for_each([&](int v) {
        if (oracle.in_l1(view.preds_closed(v))) {
            y |= view.preds_closed(v);
            x.push_back(v);
        }
    });
    trace_ids(trace, "X", x);
    trace_ids(trace, "Y", y);
    if (x.empty()) {
        // Even the bottom dummy's cone generates an L2 matching, so r is the
        // last tail and its single head is the bottom itself.
        trace_ids(trace, "V", std::vector<int>{view.bottom()});
        return {view.bottom()};
    }

    std::vector<int> heads;
    s.for_each([&](int v) {
        if (v < RotationPoset::first_rotation_id) return;
        if (!oracle.in_l1(y | view.preds_strict(v))) return;
        if (oracle.in_l1(y | view.preds_closed(v))) return;
        heads.push_back(v);
    });
    trace_ids(trace, "V", heads);
    if (heads.empty())
        throw DomainError("flower at element " + std::to_string(r) +
                          " is empty: the partition lacks the required structure");
    return heads;
}

Bouquet find_bouquet(const Instance& inst, const RotationPoset& poset,
                     const MembershipOracle& oracle, LatticeOrientation o,
                     std::ostream* trace) {
    OracleCache cache(inst, poset, oracle, o);
    const LatticeView& view = cache.view();
    int count = poset.element_count();

    Bouquet out;
    out.orientation = o;

    DynBitset s = DynBitset::full(count);
    DynBitset all_but_top = DynBitset::full(count);
    all_but_top.reset(view.top());

    // Seed the memo with the maximum matching too, so the closing
    // consistency check always covers both lattice ends.
    DynBitset bottom_only(count);
    bottom_only.set(view.bottom());
    cache.in_l1(bottom_only);

    // The minimum matching sits outside L1 exactly when the first tail is the
    // top dummy; afterwards every tail is a proper rotation found in s.
    std::optional<int> r;
    if (!cache.in_l1(all_but_top))
        r = view.top();
    else
        r = find_next_tail(cache, s);

    int round = 0;
    while (r.has_value()) {
        if (trace) {
            *trace << "round " << ++round << '\n';
            trace_ids(trace, "S", s);
            *trace << "tail: " << *r << '\n';
        }
        Flower flower;
        flower.tail = *r;
        flower.heads = find_flower(cache, s, *r, trace);
        flower.splitting_set = s;

        DynBitset carved = view.succs_closed(*r);
        for (int u : flower.heads) {
            out.defining_edges.edges.push_back(view.to_primal(Edge{*r, u}));
            carved |= view.succs_closed(u);
        }
        s -= carved;
        out.flowers.push_back(std::move(flower));

        r = find_next_tail(cache, s);
    }

    std::sort(out.defining_edges.edges.begin(), out.defining_edges.edges.end());
    cache.verify_consistent(out.defining_edges);
    return out;
}

CanonicalPath canonical_path(const Instance& inst, const RotationPoset& poset,
                             const MembershipOracle& oracle) {
    auto in_l1 = find_bouquet(inst, poset, oracle, LatticeOrientation::normal);
    auto in_l2 = find_bouquet(
        inst, poset, [&oracle](const Matching& m) { return !oracle(m); },
        LatticeOrientation::normal);

    // Label every edge by the part it defines; a shared edge would put its
    // separating closed sets in neither part.
    std::map<std::pair<int, int>, int> label;
    for (const Edge& e : in_l1.defining_edges.edges) label[{e.tail, e.head}] |= 1;
    for (const Edge& e : in_l2.defining_edges.edges) label[{e.tail, e.head}] |= 2;
    int count = poset.element_count();
    std::vector<std::vector<int>> adj(count);
    for (const auto& [edge, mark] : label) {
        if (mark == 3)
            throw DomainError("an edge defines both parts: the partition is not two sublattices");
        adj[edge.first].push_back(edge.second);
    }

    // Walk the union from t to s; for two complementary sublattices the
    // edges line up into one path.
    std::vector<int> parent(count, -1);
    parent[RotationPoset::id_t] = RotationPoset::id_t;
    std::vector<int> frontier{RotationPoset::id_t};
    while (!frontier.empty() && parent[RotationPoset::id_s] == -1) {
        std::vector<int> next;
        for (int v : frontier) {
            for (int w : adj[v]) {
                if (parent[w] != -1) continue;
                parent[w] = v;
                next.push_back(w);
            }
        }
        frontier = std::move(next);
    }
    if (parent[RotationPoset::id_s] == -1)
        throw DomainError(
            "defining edges form no path between the dummies: the partition is not two "
            "sublattices");

    std::vector<int> walk{RotationPoset::id_s};
    while (walk.back() != RotationPoset::id_t) walk.push_back(parent[walk.back()]);
    std::reverse(walk.begin(), walk.end());  // t .. s

    // Fuse maximal same-part runs into single edges; runs alternate by
    // maximality, giving the canonical alternating path.
    CanonicalPath path;
    std::size_t i = 0;
    while (i + 1 < walk.size()) {
        int mark = label[{walk[i], walk[i + 1]}];
        std::size_t j = i + 1;
        while (j + 1 < walk.size() && label[{walk[j], walk[j + 1]}] == mark) ++j;
        Edge fused{walk[i], walk[j]};
        (mark == 1 ? path.l1_edges : path.l2_edges).edges.push_back(fused);
        if (mark == 2) {
            path.sequence.push_back(fused.head);
            path.sequence.push_back(fused.tail);
        }
        if (path.path.empty()) path.path.push_back(walk[i]);
        path.path.push_back(walk[j]);
        i = j;
    }
    return path;
}

bool on_l1_side(const CanonicalPath& p, const ClosedSet& cs) {
    for (std::size_t i = 0; i + 1 < p.sequence.size(); i += 2) {
        if (cs.contains(p.sequence[i]) && !cs.contains(p.sequence[i + 1])) return true;
    }
    return false;
}

}  // namespace stablelattice
