#pragma once

#include <limits>
#include <vector>

namespace stablelattice::detail {

// Dinic maximum flow with real capacities, sized for the small closure
// networks built over condensation blocks. After run(), source_side() gives
// the vertices still reachable from the source in the residual graph: the
// unique minimal minimum cut.
class MaxFlow {
public:
    explicit MaxFlow(int vertices) : arcs_(vertices) {}

    static constexpr double kInfinite = std::numeric_limits<double>::infinity();

    void add_edge(int from, int to, double capacity) {
        arcs_[from].push_back({to, capacity, static_cast<int>(arcs_[to].size())});
        arcs_[to].push_back({from, 0.0, static_cast<int>(arcs_[from].size()) - 1});
    }

    double run(int source, int sink) {
        double total = 0;
        while (bfs_levels(source, sink)) {
            iter_.assign(arcs_.size(), 0);
            for (double pushed; (pushed = push(source, sink, kInfinite)) > kEps;)
                total += pushed;
        }
        return total;
    }

    std::vector<char> source_side(int source) const {
        std::vector<char> seen(arcs_.size(), 0);
        std::vector<int> stack{source};
        seen[source] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const Arc& a : arcs_[v]) {
                if (a.cap > kEps && !seen[a.to]) {
                    seen[a.to] = 1;
                    stack.push_back(a.to);
                }
            }
        }
        return seen;
    }

private:
    struct Arc {
        int to;
        double cap;
        int rev;
    };

    static constexpr double kEps = 1e-12;

    bool bfs_levels(int s, int t) {
        level_.assign(arcs_.size(), -1);
        level_[s] = 0;
        std::vector<int> queue{s};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            for (const Arc& a : arcs_[v]) {
                if (a.cap > kEps && level_[a.to] == -1) {
                    level_[a.to] = level_[v] + 1;
                    queue.push_back(a.to);
                }
            }
        }
        return level_[t] != -1;
    }

    double push(int v, int t, double limit) {
        if (v == t) return limit;
        for (int& i = iter_[v]; i < static_cast<int>(arcs_[v].size()); ++i) {
            Arc& a = arcs_[v][i];
            if (a.cap <= kEps || level_[a.to] != level_[v] + 1) continue;
            double got = push(a.to, t, limit < a.cap ? limit : a.cap);
            if (got > kEps) {
                a.cap -= got;
                arcs_[a.to][a.rev].cap += got;
                return got;
            }
        }
        return 0;
    }

    std::vector<std::vector<Arc>> arcs_;
    std::vector<int> level_, iter_;
};

}  // namespace stablelattice::detail
