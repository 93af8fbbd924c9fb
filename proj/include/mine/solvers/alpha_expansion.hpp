#ifndef MINE_SOLVERS_ALPHA_EXPANSION_HPP
#define MINE_SOLVERS_ALPHA_EXPANSION_HPP

#include <optional>
#include <vector>

#include "mine/energy.hpp"
#include "mine/error.hpp"
#include "mine/solvers/brute_force.hpp"
#include "mine/solvers/interactions.hpp"
#include "mine/solvers/submodular.hpp"

namespace mine {

struct ExpansionMove {
    Label alpha;
    ExtendedCost before;
    ExtendedCost candidate;
    bool accepted;
    bool submodular;
};

struct AlphaExpansionResult {
    SolveResult result;
    std::vector<ExpansionMove> moves;
    std::size_t sweeps = 0;
};

/// Binary subproblem of one expansion: label 0 keeps x_u, label 1 switches to alpha.
inline EnergyInstance expansion_subproblem(const EnergyInstance& instance, const Labeling& x, Label alpha) {
    EnergyInstance sub;
    for (std::size_t u = 0; u < instance.size(); ++u) {
        sub.add_node(instance.node_id(u), {instance.unary(u)[x[u]], instance.unary(u)[alpha]});
    }
    for (const auto& [key, t] : instance.edges()) {
        const Label xu = x[key.first];
        const Label xv = x[key.second];
        sub.add_edge(instance.node_id(key.first), instance.node_id(key.second),
                     CostTable{{t(xu, xv), t(xu, alpha)}, {t(alpha, xv), t(alpha, alpha)}});
    }
    sub.set_constant(instance.constant());
    return sub;
}

/// Alpha-expansion on a metric instance with uniform label count. Sweeps labels
/// in ascending order, solves each move exactly by minimum cut and keeps it only
/// when the energy strictly decreases; stops after a sweep without improvement.
inline AlphaExpansionResult alpha_expansion(const EnergyInstance& instance, std::optional<Labeling> init = std::nullopt) {
    if (!is_metric(instance)) {
        throw PreconditionError("alpha_expansion: pairwise terms are not metric");
    }
    Labeling x = init ? std::move(*init) : Labeling::zeros(instance.size());
    check_labeling(instance, x);
    const std::size_t k = instance.size() == 0 ? 0 : instance.label_count(0);

    AlphaExpansionResult out;
    ExtendedCost current = evaluate(instance, x);
    bool improved = true;
    while (improved) {
        improved = false;
        ++out.sweeps;
        for (Label alpha = 0; alpha < k; ++alpha) {
            const EnergyInstance sub = expansion_subproblem(instance, x, alpha);
            const bool submodular = is_submodular_binary(sub);
            const SolveResult move = solve_submodular_qpbo(sub);
            Labeling candidate = x;
            for (std::size_t u = 0; u < candidate.size(); ++u) {
                if (move.labeling[u] == 1) {
                    candidate[u] = alpha;
                }
            }
            const ExtendedCost e = evaluate(instance, candidate);
            const bool accept = e < current;
            out.moves.push_back({alpha, current, e, accept, submodular});
            if (accept) {
                x = std::move(candidate);
                current = e;
                improved = true;
            }
        }
    }
    out.result = SolveResult{std::move(x), current, "alphaexp", false};
    return out;
}

} // namespace mine

#endif // MINE_SOLVERS_ALPHA_EXPANSION_HPP
