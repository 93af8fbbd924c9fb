#ifndef MINE_SOLVERS_SUBMODULAR_HPP
#define MINE_SOLVERS_SUBMODULAR_HPP

#include <cstdint>
#include <vector>

#include "mine/energy.hpp"
#include "mine/error.hpp"
#include "mine/solvers/brute_force.hpp"
#include "mine/solvers/interactions.hpp"
#include "mine/solvers/max_flow.hpp"

namespace mine {

/// Exact minimizer of a submodular binary instance through one minimum cut.
///
/// Each pairwise term is rewritten as
///   A + (C-A) x_u + (D-C) x_v + (B+C-A-D) (1-x_u) x_v
/// with A..D = f(0,0), f(0,1), f(1,0), f(1,1); submodularity makes the last
/// coefficient non-negative, so it becomes the arc u -> v. Label 0 is the
/// source side.
inline SolveResult solve_submodular_qpbo(const EnergyInstance& instance) {
    if (!is_submodular_binary(instance)) {
        throw PreconditionError("solve_submodular_qpbo: instance is not submodular");
    }
    using detail::checked_add;
    using detail::checked_sub;

    const std::size_t n = instance.size();
    const std::size_t source = n;
    const std::size_t sink = n + 1;
    FlowNetwork net(n + 2, source, sink);

    std::int64_t constant = instance.constant();
    std::vector<std::int64_t> linear(n, 0);
    for (std::size_t u = 0; u < n; ++u) {
        const auto& f = instance.unary(u);
        constant = checked_add(constant, f[0].value());
        linear[u] = checked_add(linear[u], checked_sub(f[1].value(), f[0].value()));
    }
    for (const auto& [key, t] : instance.edges()) {
        const std::int64_t a = t(0, 0).value();
        const std::int64_t b = t(0, 1).value();
        const std::int64_t c = t(1, 0).value();
        const std::int64_t d = t(1, 1).value();
        constant = checked_add(constant, a);
        linear[key.first] = checked_add(linear[key.first], checked_sub(c, a));
        linear[key.second] = checked_add(linear[key.second], checked_sub(d, c));
        const std::int64_t lambda = checked_sub(checked_add(b, c), checked_add(a, d));
        if (lambda > 0) {
            net.add_arc(key.first, key.second, lambda);
        }
    }
    for (std::size_t u = 0; u < n; ++u) {
        if (linear[u] > 0) {
            net.add_arc(source, u, linear[u]);
        } else if (linear[u] < 0) {
            constant = checked_add(constant, linear[u]);
            net.add_arc(u, sink, -linear[u]);
        }
    }

    const MaxFlowResult cut = max_flow(net);
    Labeling x = Labeling::zeros(n);
    for (std::size_t u = 0; u < n; ++u) {
        x[u] = cut.source_side[u] ? 0 : 1;
    }
    const ExtendedCost value(checked_add(constant, cut.value));
    return SolveResult{std::move(x), value, "mincut", true};
}

} // namespace mine

#endif // MINE_SOLVERS_SUBMODULAR_HPP
