#ifndef MINE_SOLVERS_TREE_DP_HPP
#define MINE_SOLVERS_TREE_DP_HPP

#include <cstddef>
#include <numeric>
#include <vector>

#include "mine/energy.hpp"
#include "mine/error.hpp"
#include "mine/solvers/brute_force.hpp"

namespace mine {

/// True when the interaction graph has no cycle.
inline bool is_forest(const EnergyInstance& instance) {
    std::vector<std::size_t> parent(instance.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&parent](std::size_t v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    for (const auto& [key, table] : instance.edges()) {
        const std::size_t a = find(key.first);
        const std::size_t b = find(key.second);
        if (a == b) {
            return false;
        }
        parent[a] = b;
    }
    return true;
}

/// Exact min-sum dynamic programming on a forest (Viterbi on chains): messages
/// flow from the leaves to the smallest-index node of each tree, then labels
/// are read back top-down.
inline SolveResult solve_tree_dp(const EnergyInstance& instance) {
    if (!is_forest(instance)) {
        throw PreconditionError("solve_tree_dp: interaction graph contains a cycle");
    }
    const std::size_t n = instance.size();
    const auto adj = adjacency(instance);
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);

    std::vector<std::size_t> parent(n, kNone);
    std::vector<std::size_t> order;  // parents before children
    std::vector<bool> seen(n, false);
    for (std::size_t root = 0; root < n; ++root) {
        if (seen[root]) {
            continue;
        }
        seen[root] = true;
        const std::size_t start = order.size();
        order.push_back(root);
        for (std::size_t k = start; k < order.size(); ++k) {
            const std::size_t v = order[k];
            for (std::size_t w : adj[v]) {
                if (!seen[w]) {
                    seen[w] = true;
                    parent[w] = v;
                    order.push_back(w);
                }
            }
        }
    }

    // belief[v][a]: best cost of v's subtree with v at label a.
    std::vector<std::vector<ExtendedCost>> belief(n);
    for (std::size_t v = 0; v < n; ++v) {
        belief[v] = instance.unary(v);
    }
    // choice[v][b]: best label of v when its parent has label b.
    std::vector<std::vector<Label>> choice(n);
    for (std::size_t k = n; k > 0; --k) {
        const std::size_t v = order[k - 1];
        const std::size_t p = parent[v];
        if (p == kNone) {
            continue;
        }
        const CostTable& table = *instance.find_edge(v, p);
        const bool v_is_row = v < p;
        choice[v].assign(instance.label_count(p), 0);
        for (Label b = 0; b < instance.label_count(p); ++b) {
            ExtendedCost best = kInfinity;
            Label arg = 0;
            for (Label a = 0; a < instance.label_count(v); ++a) {
                const ExtendedCost pair = v_is_row ? table(a, b) : table(b, a);
                const ExtendedCost c = belief[v][a] + pair;
                if (c < best) {
                    best = c;
                    arg = a;
                }
            }
            choice[v][b] = arg;
            belief[p][b] += best;
        }
    }

    Labeling x = Labeling::zeros(n);
    ExtendedCost total(instance.constant());
    for (std::size_t v : order) {
        if (parent[v] == kNone) {
            ExtendedCost best = kInfinity;
            Label arg = 0;
            for (Label a = 0; a < instance.label_count(v); ++a) {
                if (belief[v][a] < best) {
                    best = belief[v][a];
                    arg = a;
                }
            }
            x[v] = arg;
            total += best;
        } else {
            x[v] = choice[v][x[parent[v]]];
        }
    }
    return SolveResult{std::move(x), total, "tree", true};
}

} // namespace mine

#endif // MINE_SOLVERS_TREE_DP_HPP
