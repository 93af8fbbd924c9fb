#ifndef MINE_SOLVERS_ELIMINATION_HPP
#define MINE_SOLVERS_ELIMINATION_HPP

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "mine/energy.hpp"
#include "mine/error.hpp"
#include "mine/solvers/brute_force.hpp"

namespace mine {

struct EliminationOptions {
    /// Largest admissible induced width (scope size of an intermediate factor).
    std::size_t max_width = 12;
};

namespace detail {

// Table over `scope` (ascending dense indices), last scope variable fastest.
struct Factor {
    std::vector<std::size_t> scope;
    std::vector<std::size_t> strides;
    std::vector<ExtendedCost> table;

    ExtendedCost at(const std::vector<Label>& assignment) const {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < scope.size(); ++i) {
            idx += assignment[scope[i]] * strides[i];
        }
        return table[idx];
    }
};

inline std::vector<std::size_t> strides_for(const EnergyInstance& instance, const std::vector<std::size_t>& scope) {
    std::vector<std::size_t> strides(scope.size());
    std::size_t s = 1;
    for (std::size_t i = scope.size(); i > 0; --i) {
        strides[i - 1] = s;
        s *= instance.label_count(scope[i - 1]);
    }
    return strides;
}

} // namespace detail

/// Greedy minimum-degree elimination order (ties to the smaller node id),
/// accounting for fill-in edges.
inline std::vector<NodeId> min_degree_order(const EnergyInstance& instance) {
    const std::size_t n = instance.size();
    std::vector<std::set<std::size_t>> adj(n);
    for (const auto& [key, table] : instance.edges()) {
        adj[key.first].insert(key.second);
        adj[key.second].insert(key.first);
    }
    std::vector<bool> done(n, false);
    std::vector<NodeId> order;
    order.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t pick = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (!done[i] && (pick == n || adj[i].size() < adj[pick].size())) {
                pick = i;
            }
        }
        done[pick] = true;
        order.push_back(instance.node_id(pick));
        const std::vector<std::size_t> nbrs(adj[pick].begin(), adj[pick].end());
        for (std::size_t a : nbrs) {
            adj[a].erase(pick);
            for (std::size_t b : nbrs) {
                if (a != b) {
                    adj[a].insert(b);
                }
            }
        }
        adj[pick].clear();
    }
    return order;
}

/// Induced width of `order`: the largest neighbor set met when eliminating.
inline std::size_t induced_width(const EnergyInstance& instance, const std::vector<NodeId>& order) {
    const std::size_t n = instance.size();
    std::vector<std::set<std::size_t>> adj(n);
    for (const auto& [key, table] : instance.edges()) {
        adj[key.first].insert(key.second);
        adj[key.second].insert(key.first);
    }
    std::size_t width = 0;
    for (NodeId id : order) {
        const std::size_t v = instance.index_of(id);
        const std::vector<std::size_t> nbrs(adj[v].begin(), adj[v].end());
        width = std::max(width, nbrs.size());
        for (std::size_t a : nbrs) {
            adj[a].erase(v);
            for (std::size_t b : nbrs) {
                if (a != b) {
                    adj[a].insert(b);
                }
            }
        }
        adj[v].clear();
    }
    return width;
}

/// Exact minimum by min-sum bucket elimination along `order` (a permutation of
/// the node ids), followed by a backward pass that picks the smallest
/// minimizing label of each node given the nodes eliminated after it.
inline SolveResult solve_elimination(const EnergyInstance& instance, const std::vector<NodeId>& order,
                                     const EliminationOptions& options = {}) {
    const std::size_t n = instance.size();
    if (order.size() != n) {
        throw PreconditionError("elimination order must list every node exactly once");
    }
    std::vector<std::size_t> position(n, n);
    for (std::size_t k = 0; k < order.size(); ++k) {
        const std::size_t v = instance.index_of(order[k]);
        if (position[v] != n) {
            throw PreconditionError("elimination order repeats node " + std::to_string(order[k]));
        }
        position[v] = k;
    }
    const std::size_t width = induced_width(instance, order);
    if (width > options.max_width) {
        throw BoundExceededError("induced width " + std::to_string(width) + " exceeds bound " +
                                 std::to_string(options.max_width));
    }

    using detail::Factor;
    std::vector<Factor> pool;
    for (std::size_t i = 0; i < n; ++i) {
        pool.push_back({{i}, {1}, instance.unary(i)});
    }
    for (const auto& [key, table] : instance.edges()) {
        Factor f{{key.first, key.second}, {}, {table.data().begin(), table.data().end()}};
        f.strides = detail::strides_for(instance, f.scope);
        pool.push_back(std::move(f));
    }

    // Factors are assigned to the bucket of their earliest-eliminated variable.
    std::vector<std::vector<Factor>> buckets(n);
    auto file = [&](Factor f) {
        if (f.scope.empty()) {
            return false;
        }
        std::size_t first = f.scope.front();
        for (std::size_t v : f.scope) {
            if (position[v] < position[first]) {
                first = v;
            }
        }
        buckets[first].push_back(std::move(f));
        return true;
    };
    ExtendedCost total(instance.constant());
    for (auto& f : pool) {
        file(std::move(f));
    }

    std::vector<Label> assignment(n, 0);
    for (NodeId id : order) {
        const std::size_t v = instance.index_of(id);
        std::set<std::size_t> scope_set;
        for (const Factor& f : buckets[v]) {
            scope_set.insert(f.scope.begin(), f.scope.end());
        }
        scope_set.erase(v);
        Factor message{{scope_set.begin(), scope_set.end()}, {}, {}};
        message.strides = detail::strides_for(instance, message.scope);
        std::size_t entries = 1;
        for (std::size_t u : message.scope) {
            entries *= instance.label_count(u);
        }
        message.table.assign(entries, kInfinity);

        for (std::size_t u : message.scope) {
            assignment[u] = 0;
        }
        for (std::size_t idx = 0; idx < entries; ++idx) {
            ExtendedCost best = kInfinity;
            for (Label a = 0; a < instance.label_count(v); ++a) {
                assignment[v] = a;
                ExtendedCost sum(0);
                for (const Factor& f : buckets[v]) {
                    sum += f.at(assignment);
                    if (sum.is_infinite()) {
                        break;
                    }
                }
                best = std::min(best, sum);
            }
            message.table[idx] = best;
            for (std::size_t k = message.scope.size(); k > 0; --k) {
                const std::size_t u = message.scope[k - 1];
                if (assignment[u] + 1 < instance.label_count(u)) {
                    ++assignment[u];
                    break;
                }
                assignment[u] = 0;
            }
        }
        if (message.scope.empty()) {
            total += message.table.front();
        } else {
            file(std::move(message));
        }
    }

    for (std::size_t k = n; k > 0; --k) {
        const std::size_t v = instance.index_of(order[k - 1]);
        ExtendedCost best = kInfinity;
        Label arg = 0;
        for (Label a = 0; a < instance.label_count(v); ++a) {
            assignment[v] = a;
            ExtendedCost sum(0);
            for (const Factor& f : buckets[v]) {
                sum += f.at(assignment);
            }
            if (sum < best) {
                best = sum;
                arg = a;
            }
        }
        assignment[v] = arg;
    }

    return SolveResult{Labeling(std::move(assignment)), total, "elim", true};
}

/// Elimination along the minimum-degree order.
inline SolveResult solve_elimination(const EnergyInstance& instance, const EliminationOptions& options = {}) {
    return solve_elimination(instance, min_degree_order(instance), options);
}

} // namespace mine

#endif // MINE_SOLVERS_ELIMINATION_HPP
