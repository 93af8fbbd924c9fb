#ifndef MINE_KLABEL_HPP
#define MINE_KLABEL_HPP

#include <utility>
#include <vector>

#include "mine/energy.hpp"
#include "mine/error.hpp"
#include "mine/trace.hpp"

namespace mine {

/// Embeds a binary instance into k labels. Labels 0 and 1 keep their costs;
/// every unary or pairwise entry touching a label >= 2 costs M = big_m(source).
inline std::pair<EnergyInstance, ReductionTrace> qpbo_to_klabel(const EnergyInstance& source, std::size_t k) {
    if (k < 2) {
        throw PreconditionError("qpbo_to_klabel: k must be at least 2");
    }
    if (!source.uniform_labels(2)) {
        throw PreconditionError("qpbo_to_klabel: source must be binary");
    }
    const std::int64_t m = big_m(source);
    const ExtendedCost big(m);

    EnergyInstance target;
    for (std::size_t u = 0; u < source.size(); ++u) {
        std::vector<ExtendedCost> unary(k, big);
        unary[0] = source.unary(u)[0];
        unary[1] = source.unary(u)[1];
        target.add_node(source.node_id(u), std::move(unary));
    }
    for (const auto& [key, t] : source.edges()) {
        CostTable g(k, k, big);
        for (std::size_t a = 0; a < 2; ++a) {
            for (std::size_t b = 0; b < 2; ++b) {
                g(a, b) = t(a, b);
            }
        }
        target.add_edge(source.node_id(key.first), source.node_id(key.second), std::move(g));
    }
    target.set_constant(source.constant());

    ReductionTrace trace;
    trace.kind = ReductionKind::QpboToKlabel;
    trace.original_nodes.assign(source.node_ids().begin(), source.node_ids().end());
    trace.big_m = m;
    trace.k = k;
    trace.next_id = source.size() == 0 ? 0 : source.node_ids().back() + 1;
    return {std::move(target), std::move(trace)};
}

/// Reverse map: y itself when its energy is below M and it uses only labels 0
/// and 1, the all-zeros labeling otherwise.
inline Labeling klabel_sigma(const EnergyInstance& source, const ReductionTrace& trace, const EnergyInstance& target,
                             const Labeling& y) {
    if (trace.kind != ReductionKind::QpboToKlabel || trace.original_nodes.size() != source.size()) {
        throw MismatchError("trace does not belong to a qpbo-to-klabel reduction of this instance");
    }
    const ExtendedCost energy = evaluate(target, y);
    bool original = true;
    for (Label l : y) {
        original = original && l < 2;
    }
    if (original && energy < ExtendedCost(trace.big_m)) {
        return y;
    }
    return Labeling::zeros(source.size());
}

inline Labeling klabel_sigma(const EnergyInstance& source, const ReductionTrace& trace, const Labeling& y) {
    auto [target, rebuilt] = qpbo_to_klabel(source, trace.k);
    if (!(rebuilt == trace)) {
        throw MismatchError("trace does not match the qpbo-to-klabel reduction of this instance");
    }
    return klabel_sigma(source, trace, target, y);
}

} // namespace mine

#endif // MINE_KLABEL_HPP
