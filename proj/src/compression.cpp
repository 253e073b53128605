#include "stablelattice/compression.hpp"

#include <algorithm>
#include <queue>
#include <string>
#include <utility>

namespace stablelattice {

bool separates(const ClosedSet& cs, const Edge& e) {
    return cs.contains(e.head) && !cs.contains(e.tail);
}

bool crosses(const ClosedSet& cs, const Edge& e) {
    return cs.contains(e.tail) && !cs.contains(e.head);
}

MetaPoset::MetaPoset(int element_count, std::vector<std::vector<int>> blocks,
                     std::vector<std::pair<int, int>> dag_edges, int a_s, int a_t)
    : element_count_(element_count),
      blocks_(std::move(blocks)),
      dag_(std::move(dag_edges)),
      a_s_(a_s),
      a_t_(a_t) {
    int bc = block_count();
    block_of_.assign(element_count_, -1);
    for (int id = 0; id < bc; ++id) {
        for (int x : blocks_[id]) {
            if (x < 0 || x >= element_count_ || block_of_[x] != -1)
                throw DomainError("meta poset: blocks do not partition the elements");
            block_of_[x] = id;
        }
    }
    for (int x = 0; x < element_count_; ++x)
        if (block_of_[x] == -1)
            throw DomainError("meta poset: blocks do not partition the elements");
    if (a_s_ < 0 || a_s_ >= bc || a_t_ < 0 || a_t_ >= bc)
        throw DomainError("meta poset: dummy block out of range");
    for (auto [u, v] : dag_) {
        if (u < 0 || v < 0 || u >= bc || v >= bc)
            throw DomainError("meta poset: edge endpoint out of range");
        if (u >= v) throw DomainError("meta poset: blocks are not topologically numbered");
    }
}

DynBitset MetaPoset::block_bits(int id) const {
    DynBitset out(element_count_);
    for (int x : blocks_[id]) out.set(x);
    return out;
}

std::vector<DynBitset> MetaPoset::block_preds_closed() const {
    int bc = block_count();
    std::vector<DynBitset> preds(bc, DynBitset(bc));
    for (int id = 0; id < bc; ++id) preds[id].set(id);
    // Edges go low to high, so one ascending pass reaches a fixpoint.
    std::vector<std::vector<int>> in(bc);
    for (auto [u, v] : dag_) in[v].push_back(u);
    for (int id = 0; id < bc; ++id)
        for (int u : in[id]) preds[id] |= preds[u];
    return preds;
}

std::vector<DynBitset> MetaPoset::block_succs_closed() const {
    int bc = block_count();
    auto preds = block_preds_closed();
    std::vector<DynBitset> succs(bc, DynBitset(bc));
    for (int v = 0; v < bc; ++v)
        preds[v].for_each([&](int u) { succs[u].set(v); });
    return succs;
}

namespace {

// Strongly connected components of hasse+extra edges by iterative Kosaraju;
// comp ids are assigned in reverse topological discovery and renumbered by
// the caller.
std::vector<int> scc_of(int count, const std::vector<std::vector<int>>& out,
                        const std::vector<std::vector<int>>& in) {
    std::vector<int> order;
    order.reserve(count);
    std::vector<char> seen(count, 0);
    std::vector<std::pair<int, std::size_t>> stack;
    for (int start = 0; start < count; ++start) {
        if (seen[start]) continue;
        seen[start] = 1;
        stack.emplace_back(start, 0);
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            if (next < out[v].size()) {
                int w = out[v][next++];
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.emplace_back(w, 0);
                }
            } else {
                order.push_back(v);
                stack.pop_back();
            }
        }
    }

    std::vector<int> comp(count, -1);
    int comps = 0;
    std::vector<int> walk;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        if (comp[*it] != -1) continue;
        walk.assign(1, *it);
        comp[*it] = comps;
        while (!walk.empty()) {
            int v = walk.back();
            walk.pop_back();
            for (int w : in[v]) {
                if (comp[w] == -1) {
                    comp[w] = comps;
                    walk.push_back(w);
                }
            }
        }
        ++comps;
    }
    return comp;
}

}  // namespace

MetaPoset shrink(const RotationPoset& poset, const EdgeSet& e) {
    int count = poset.element_count();
    std::vector<std::vector<int>> out(count), in(count);
    auto add = [&](int u, int v) {
        if (u < 0 || v < 0 || u >= count || v >= count)
            throw DomainError("shrink: edge endpoint out of range");
        out[u].push_back(v);
        in[v].push_back(u);
    };
    for (auto [u, v] : poset.hasse_edges()) add(u, v);
    for (const Edge& edge : e.edges) add(edge.tail, edge.head);

    auto comp = scc_of(count, out, in);
    int comps = 1 + *std::max_element(comp.begin(), comp.end());

    // Deterministic block numbering: Kahn over the condensation, always
    // releasing the ready block with the smallest member element.
    std::vector<std::vector<int>> members(comps);
    for (int x = 0; x < count; ++x) members[comp[x]].push_back(x);
    std::vector<std::vector<int>> cout(comps);
    std::vector<int> indeg(comps, 0);
    {
        std::vector<std::pair<int, int>> cedges;
        for (int u = 0; u < count; ++u)
            for (int v : out[u])
                if (comp[u] != comp[v]) cedges.emplace_back(comp[u], comp[v]);
        std::sort(cedges.begin(), cedges.end());
        cedges.erase(std::unique(cedges.begin(), cedges.end()), cedges.end());
        for (auto [u, v] : cedges) {
            cout[u].push_back(v);
            ++indeg[v];
        }
    }
    std::priority_queue<std::pair<int, int>, std::vector<std::pair<int, int>>, std::greater<>>
        ready;  // (smallest member, comp id)
    std::vector<int> new_id(comps, -1);
    for (int c = 0; c < comps; ++c)
        if (indeg[c] == 0) ready.emplace(members[c][0], c);
    int next_id = 0;
    while (!ready.empty()) {
        int c = ready.top().second;
        ready.pop();
        new_id[c] = next_id++;
        for (int w : cout[c])
            if (--indeg[w] == 0) ready.emplace(members[w][0], w);
    }

    std::vector<std::vector<int>> blocks(comps);
    for (int c = 0; c < comps; ++c) blocks[new_id[c]] = std::move(members[c]);
    std::vector<std::pair<int, int>> dag;
    for (int c = 0; c < comps; ++c)
        for (int w : cout[c]) dag.emplace_back(new_id[c], new_id[w]);
    std::sort(dag.begin(), dag.end());

    int a_s = new_id[comp[RotationPoset::id_s]];
    int a_t = new_id[comp[RotationPoset::id_t]];
    return MetaPoset(count, std::move(blocks), std::move(dag), a_s, a_t);
}

std::vector<ClosedSet> closed_sets_of_meta(const MetaPoset& meta) {
    if (meta.a_s() == meta.a_t()) return {};
    int bc = meta.block_count();
    auto preds = meta.block_preds_closed();

    // Blocks forced after a_t can never join a proper closed set.
    DynBitset universe(bc);
    for (int id = 0; id < bc; ++id) {
        if (id == meta.a_s() || id == meta.a_t()) continue;
        if (!preds[id].test(meta.a_t())) universe.set(id);
    }

    std::vector<ClosedSet> out;
    for (auto& d : all_downsets(preds, universe)) {
        d.set(meta.a_s());
        DynBitset elements(meta.element_count());
        d.for_each([&](int id) {
            for (int x : meta.block(id)) elements.set(x);
        });
        out.push_back(ClosedSet{std::move(elements)});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Matching> sublattice_from_edges(const RotationPoset& poset, const Instance& inst,
                                            const EdgeSet& e) {
    std::vector<Matching> out;
    for (const auto& cs : enumerate_proper_closed_sets(poset)) {
        bool separated = std::any_of(e.edges.begin(), e.edges.end(),
                                     [&](const Edge& edge) { return separates(cs, edge); });
        if (!separated) out.push_back(matching_from_closed_set(poset, inst, cs));
    }
    std::sort(out.begin(), out.end());
    return out;
}

MetaPoset compression_from_sublattice(const RotationPoset& poset, const Instance& inst,
                                      const std::vector<Matching>& sub) {
    if (sub.empty()) throw DomainError("compression: empty sublattice");
    int count = poset.element_count();
    int fc = static_cast<int>(sub.size());

    std::vector<DynBitset> family;
    family.reserve(fc);
    for (const auto& m : sub)
        family.push_back(closed_set_from_matching(poset, inst, m).members);

    auto member = [&](const DynBitset& bits) {
        return std::find(family.begin(), family.end(), bits) != family.end();
    };
    for (int i = 0; i < fc; ++i) {
        for (int j = i + 1; j < fc; ++j) {
            if (!member(family[i] | family[j]) || !member(family[i] & family[j]))
                throw DomainError("compression: set is not closed under join and meet");
        }
    }

    // Group elements by signature: the set of family members containing them.
    // Same signature means always eliminated together, hence one meta block;
    // block X precedes block Y exactly when Y's signature is a strict subset
    // of X's. s carries the full signature, t the empty one.
    std::vector<DynBitset> sig(count, DynBitset(fc));
    for (int f = 0; f < fc; ++f)
        family[f].for_each([&](int x) { sig[x].set(f); });
    sig[RotationPoset::id_s] = DynBitset::full(fc);
    sig[RotationPoset::id_t] = DynBitset(fc);

    std::vector<DynBitset> block_sig;
    std::vector<std::vector<int>> members;
    for (int x = 0; x < count; ++x) {
        auto it = std::find(block_sig.begin(), block_sig.end(), sig[x]);
        if (it == block_sig.end()) {
            block_sig.push_back(sig[x]);
            members.push_back({x});
        } else {
            members[it - block_sig.begin()].push_back(x);
        }
    }
    int bc = static_cast<int>(block_sig.size());

    // Renumber topologically (signature superset first), smallest member
    // breaking ties, then emit the full precedence relation unreduced.
    std::vector<int> order(bc);
    for (int i = 0; i < bc; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int ca = block_sig[a].count(), cb = block_sig[b].count();
        if (ca != cb) return ca > cb;
        return members[a][0] < members[b][0];
    });
    std::vector<std::vector<int>> blocks(bc);
    std::vector<DynBitset> sigs(bc, DynBitset(fc));
    for (int id = 0; id < bc; ++id) {
        blocks[id] = std::move(members[order[id]]);
        sigs[id] = std::move(block_sig[order[id]]);
    }
    std::vector<std::pair<int, int>> dag;
    for (int u = 0; u < bc; ++u)
        for (int v = 0; v < bc; ++v)
            if (u != v && sigs[v] != sigs[u] && sigs[v].is_subset_of(sigs[u]))
                dag.emplace_back(u, v);

    int a_s = -1, a_t = -1;
    for (int id = 0; id < bc; ++id) {
        if (sigs[id] == DynBitset::full(fc)) a_s = id;
        if (sigs[id].none()) a_t = id;
    }
    return MetaPoset(count, std::move(blocks), std::move(dag), a_s, a_t);
}

EdgeSet minimize_edges(const RotationPoset& poset, const EdgeSet& e) {
    auto edges = e.edges;
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    auto closed = enumerate_proper_closed_sets(poset);
    int cc = static_cast<int>(closed.size());
    int ec = static_cast<int>(edges.size());

    std::vector<DynBitset> separated_by(ec, DynBitset(cc));
    for (int i = 0; i < ec; ++i)
        for (int c = 0; c < cc; ++c)
            if (separates(closed[c], edges[i])) separated_by[i].set(c);

    std::vector<char> kept(ec, 1);
    for (int i = 0; i < ec; ++i)
        if (separated_by[i].none()) kept[i] = 0;

    // Descending scan: an edge goes when the retained others already separate
    // everything it separates.
    for (int i = ec - 1; i >= 0; --i) {
        if (!kept[i]) continue;
        DynBitset others(cc);
        for (int j = 0; j < ec; ++j)
            if (kept[j] && j != i) others |= separated_by[j];
        if (separated_by[i].is_subset_of(others)) kept[i] = 0;
    }

    EdgeSet out;
    for (int i = 0; i < ec; ++i)
        if (kept[i]) out.edges.push_back(edges[i]);
    return out;
}

}  // namespace stablelattice
