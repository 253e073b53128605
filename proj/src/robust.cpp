#include "stablelattice/robust.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>

#include "maxflow.hpp"
#include "text_util.hpp"

namespace stablelattice {

Instance apply_error(const Instance& inst, const ErrorSpec& err) {
    int n = inst.n();
    if (err.agent < 1 || err.agent > n)
        throw DomainError("error spec: agent index " + std::to_string(err.agent) +
                          " out of range");
    std::vector<int> list;
    list.reserve(err.new_list.size());
    for (int x : err.new_list) {
        if (x < 1 || x > n) throw DomainError("error spec: list entry out of range");
        list.push_back(x - 1);
    }
    auto boys = inst.boy_prefs();
    auto girls = inst.girl_prefs();
    (err.side == Side::boys ? boys : girls)[err.agent - 1] = std::move(list);
    return Instance(std::move(boys), std::move(girls));  // revalidates the swapped list
}

EdgeSet edges_for_error(const Instance& inst, const RotationPoset& poset, const ErrorSpec& err) {
    Instance changed = apply_error(inst, err);
    MembershipOracle still_stable = [&changed](const Matching& m) {
        return is_stable(changed, m);
    };
    // The matchings broken by the error form a join semi-sublattice for a
    // girl's list and a meet semi-sublattice for a boy's, so the boy case
    // runs on the reversed order.
    auto orientation = err.side == Side::girls ? LatticeOrientation::normal
                                               : LatticeOrientation::reversed;
    return find_bouquet(inst, poset, still_stable, orientation).defining_edges;
}

RobustResult build_robust(const Instance& inst, const RotationPoset& poset,
                          const std::vector<ErrorSpec>& errors) {
    std::vector<EdgeSet> per_error;
    EdgeSet combined;
    per_error.reserve(errors.size());
    // Duplicate errors share one computation and identity errors (the changed
    // list equals the original) constrain nothing, so they are skipped.
    std::map<std::tuple<Side, int, std::vector<int>>, EdgeSet> memo;
    for (const ErrorSpec& err : errors) {
        auto key = std::make_tuple(err.side, err.agent, err.new_list);
        auto found = memo.find(key);
        if (found == memo.end()) {
            Instance changed = apply_error(inst, err);
            EdgeSet edges;
            if (changed.boy_prefs() != inst.boy_prefs() ||
                changed.girl_prefs() != inst.girl_prefs())
                edges = edges_for_error(inst, poset, err);
            found = memo.emplace(std::move(key), std::move(edges)).first;
        }
        per_error.push_back(found->second);
        combined.edges.insert(combined.edges.end(), per_error.back().edges.begin(),
                              per_error.back().edges.end());
    }
    std::sort(combined.edges.begin(), combined.edges.end());
    combined.edges.erase(std::unique(combined.edges.begin(), combined.edges.end()),
                         combined.edges.end());

    MetaPoset meta = shrink(poset, combined);
    bool exists = meta.a_s() != meta.a_t();
    std::optional<Matching> witness;
    if (exists) {
        // The s-block alone is the minimal proper closed set of the
        // condensation: its matching is the boy-optimal robust one.
        DynBitset members(poset.element_count());
        for (int x : meta.block(meta.a_s())) members.set(x);
        witness = matching_from_closed_set(poset, inst, ClosedSet{std::move(members)});
    }
    return RobustResult{std::move(meta), exists, std::move(witness), std::move(per_error)};
}

namespace {

// Total weight change from eliminating one rotation: each boy steps from his
// current girl to the next one around the cycle.
double rotation_delta(const Rotation& rho, const WeightFunction& w) {
    double delta = 0;
    int k = rho.size();
    for (int i = 0; i < k; ++i) {
        auto [b, g] = rho.pairs[i];
        int g_next = rho.pairs[(i + 1) % k].second;
        delta += w.at(b + 1, g_next + 1) - w.at(b + 1, g + 1);
    }
    return delta;
}

}  // namespace

std::optional<std::pair<Matching, double>> max_weight_robust(const Instance& inst,
                                                             const RotationPoset& poset,
                                                             const RobustResult& robust,
                                                             const WeightFunction& w) {
    if (w.n != inst.n()) throw DomainError("weight table size does not match the instance");
    if (!robust.exists) return std::nullopt;
    const MetaPoset& meta = robust.meta;
    int bc = meta.block_count();
    auto preds = meta.block_preds_closed();

    std::vector<double> delta(bc, 0.0);
    for (int id = 0; id < bc; ++id)
        for (int x : meta.block(id))
            if (x >= RotationPoset::first_rotation_id)
                delta[id] += rotation_delta(poset.rotation(x), w);

    // Free blocks: everything not forced in with a_s or forced out with a_t.
    std::vector<int> node_of(bc, -1);
    std::vector<int> free_blocks;
    for (int id = 0; id < bc; ++id) {
        if (id == meta.a_s() || id == meta.a_t() || preds[id].test(meta.a_t())) continue;
        node_of[id] = 2 + static_cast<int>(free_blocks.size());
        free_blocks.push_back(id);
    }

    // Closure selection as a minimum cut: source feeds the gains, losses
    // drain to the sink, and an infinite arc per precedence forbids taking a
    // block without its predecessors. The residual source side is the
    // minimal optimal closure — the boy-optimal tie-break.
    detail::MaxFlow flow(2 + static_cast<int>(free_blocks.size()));
    const int source = 0, sink = 1;
    for (int id : free_blocks) {
        if (delta[id] > 0)
            flow.add_edge(source, node_of[id], delta[id]);
        else if (delta[id] < 0)
            flow.add_edge(node_of[id], sink, -delta[id]);
    }
    for (auto [u, v] : meta.dag_edges())
        if (node_of[u] != -1 && node_of[v] != -1)
            flow.add_edge(node_of[v], node_of[u], detail::MaxFlow::kInfinite);
    flow.run(source, sink);
    auto reachable = flow.source_side(source);

    DynBitset members(poset.element_count());
    for (int x : meta.block(meta.a_s())) members.set(x);
    for (int id : free_blocks)
        if (reachable[node_of[id]])
            for (int x : meta.block(id)) members.set(x);

    Matching best = matching_from_closed_set(poset, inst, ClosedSet{std::move(members)});
    return std::make_pair(best, matching_weight(best, w));
}

std::vector<ErrorSpec> parse_errors(std::string_view text, const Instance& inst) {
    int n = inst.n();
    std::vector<ErrorSpec> out;
    for (const auto& line : detail::effective_lines(text)) {
        std::string where = "error line " + std::to_string(out.size() + 1);
        auto colon = line.find(':');
        if (colon == std::string::npos) throw ParseError(where + ": expected 'side agent: list'");

        auto lhs = detail::tokens_of(line.substr(0, colon));
        if (lhs.size() != 2) throw ParseError(where + ": expected side and agent before ':'");
        Side side;
        if (lhs[0] == "boy")
            side = Side::boys;
        else if (lhs[0] == "girl")
            side = Side::girls;
        else
            throw ParseError(where + ": side must be 'boy' or 'girl', got '" + lhs[0] + "'");
        int agent = detail::parse_agent_token(lhs[1], n, where);

        auto list = detail::parse_pref_tokens(detail::tokens_of(line.substr(colon + 1)), n, where);
        ErrorSpec err;
        err.side = side;
        err.agent = agent + 1;
        err.new_list.reserve(n);
        for (int x : list) err.new_list.push_back(x + 1);
        out.push_back(std::move(err));
    }
    return out;
}

WeightFunction parse_weights(std::string_view text, int n) {
    auto lines = detail::effective_lines(text);
    if (static_cast<int>(lines.size()) != n)
        throw ParseError("weights: expected " + std::to_string(n) + " rows, got " +
                         std::to_string(lines.size()));
    WeightFunction w;
    w.n = n;
    w.w.reserve(static_cast<std::size_t>(n) * n);
    for (int b = 0; b < n; ++b) {
        auto toks = detail::tokens_of(lines[b]);
        if (static_cast<int>(toks.size()) != n)
            throw ParseError("weights row " + std::to_string(b + 1) + ": expected " +
                             std::to_string(n) + " values, got " + std::to_string(toks.size()));
        for (const auto& t : toks) {
            try {
                std::size_t used = 0;
                double v = std::stod(t, &used);
                if (used != t.size()) throw std::invalid_argument(t);
                w.w.push_back(v);
            } catch (const std::exception&) {
                throw ParseError("weights row " + std::to_string(b + 1) + ": bad number '" + t +
                                 "'");
            }
        }
    }
    return w;
}

double matching_weight(const Matching& m, const WeightFunction& w) {
    double total = 0;
    for (int b = 0; b < m.n(); ++b) total += w.at(b + 1, m.partner(b) + 1);
    return total;
}

std::string format_error(const ErrorSpec& err, int n) {
    Side own = err.side;
    Side other = own == Side::boys ? Side::girls : Side::boys;
    std::string out = own == Side::boys ? "boy " : "girl ";
    out += format_agent(err.agent - 1, own, n);
    out += ":";
    for (int x : err.new_list) {
        out += " ";
        out += format_agent(x - 1, other, n);
    }
    return out;
}

}  // namespace stablelattice
