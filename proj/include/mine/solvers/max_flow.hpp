#ifndef MINE_SOLVERS_MAX_FLOW_HPP
#define MINE_SOLVERS_MAX_FLOW_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

#include "mine/cost.hpp"
#include "mine/error.hpp"

namespace mine {

/// Directed network with non-negative integer arc capacities.
class FlowNetwork {
public:
    struct Arc {
        std::size_t from;
        std::size_t to;
        std::int64_t capacity;
    };

    FlowNetwork(std::size_t node_count, std::size_t source, std::size_t sink)
        : node_count_(node_count), source_(source), sink_(sink) {
        if (source >= node_count || sink >= node_count || source == sink) {
            throw PreconditionError("flow network needs distinct source and sink inside the node range");
        }
    }

    void add_arc(std::size_t from, std::size_t to, std::int64_t capacity) {
        if (from >= node_count_ || to >= node_count_) {
            throw PreconditionError("arc endpoint out of range");
        }
        if (capacity < 0) {
            throw PreconditionError("negative arc capacity");
        }
        arcs_.push_back({from, to, capacity});
    }

    std::size_t node_count() const noexcept { return node_count_; }
    std::size_t source() const noexcept { return source_; }
    std::size_t sink() const noexcept { return sink_; }
    const std::vector<Arc>& arcs() const noexcept { return arcs_; }

private:
    std::size_t node_count_;
    std::size_t source_;
    std::size_t sink_;
    std::vector<Arc> arcs_;
};

struct MaxFlowResult {
    std::int64_t value = 0;
    /// source_side[v] is true for nodes reachable from the source in the final
    /// residual graph; these form the minimal source side of a minimum cut.
    std::vector<bool> source_side;
};

/// Dinic's algorithm. Throws OverflowError if the total capacity leaving the
/// source does not fit in 64 bits.
inline MaxFlowResult max_flow(const FlowNetwork& net) {
    struct Residual {
        std::size_t to;
        std::size_t rev;
        std::int64_t cap;
    };
    const std::size_t n = net.node_count();
    std::vector<std::vector<Residual>> g(n);
    std::int64_t out_of_source = 0;
    for (const auto& a : net.arcs()) {
        if (a.from == a.to) {
            continue;
        }
        g[a.from].push_back({a.to, g[a.to].size(), a.capacity});
        g[a.to].push_back({a.from, g[a.from].size() - 1, 0});
        if (a.from == net.source()) {
            out_of_source = detail::checked_add(out_of_source, a.capacity);
        }
    }

    std::vector<int> level(n);
    std::vector<std::size_t> next(n);
    auto bfs = [&]() {
        std::fill(level.begin(), level.end(), -1);
        std::queue<std::size_t> q;
        level[net.source()] = 0;
        q.push(net.source());
        while (!q.empty()) {
            const std::size_t v = q.front();
            q.pop();
            for (const auto& e : g[v]) {
                if (e.cap > 0 && level[e.to] < 0) {
                    level[e.to] = level[v] + 1;
                    q.push(e.to);
                }
            }
        }
        return level[net.sink()] >= 0;
    };
    // Iterative DFS along the level graph.
    auto augment = [&]() -> std::int64_t {
        std::vector<std::size_t> path_nodes{net.source()};
        std::vector<Residual*> path_arcs;
        while (!path_nodes.empty()) {
            const std::size_t v = path_nodes.back();
            if (v == net.sink()) {
                std::int64_t push = std::numeric_limits<std::int64_t>::max();
                for (Residual* e : path_arcs) {
                    push = std::min(push, e->cap);
                }
                for (Residual* e : path_arcs) {
                    e->cap -= push;
                    g[e->to][e->rev].cap += push;
                }
                return push;
            }
            bool advanced = false;
            for (; next[v] < g[v].size(); ++next[v]) {
                Residual& e = g[v][next[v]];
                if (e.cap > 0 && level[e.to] == level[v] + 1) {
                    path_nodes.push_back(e.to);
                    path_arcs.push_back(&e);
                    advanced = true;
                    break;
                }
            }
            if (!advanced) {
                level[v] = -1;
                path_nodes.pop_back();
                if (!path_arcs.empty()) {
                    path_arcs.pop_back();
                    ++next[path_nodes.back()];
                }
            }
        }
        return 0;
    };

    MaxFlowResult result;
    while (bfs()) {
        std::fill(next.begin(), next.end(), 0);
        while (std::int64_t pushed = augment()) {
            result.value += pushed;
        }
    }
    result.source_side.assign(n, false);
    std::vector<std::size_t> stack{net.source()};
    result.source_side[net.source()] = true;
    while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        for (const auto& e : g[v]) {
            if (e.cap > 0 && !result.source_side[e.to]) {
                result.source_side[e.to] = true;
                stack.push_back(e.to);
            }
        }
    }
    return result;
}

} // namespace mine

#endif // MINE_SOLVERS_MAX_FLOW_HPP
