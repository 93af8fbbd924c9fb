#ifndef MINE_TRACE_HPP
#define MINE_TRACE_HPP

#include <algorithm>
#include <cstdint>
#include <set>
#include <tuple>
#include <string>
#include <vector>

#include "mine/energy.hpp"
#include "mine/error.hpp"
#include "mine/geometry.hpp"

namespace mine {

enum class ReductionKind { Identity, W3satToQpbo, QpboToKlabel, Planarize };

inline std::string to_string(ReductionKind kind) {
    switch (kind) {
        case ReductionKind::Identity: return "identity";
        case ReductionKind::W3satToQpbo: return "w3sat-to-qpbo";
        case ReductionKind::QpboToKlabel: return "qpbo-to-klabel";
        case ReductionKind::Planarize: return "planarize";
    }
    return "unknown";
}

inline ReductionKind reduction_kind_from_string(const std::string& name) {
    for (ReductionKind k : {ReductionKind::Identity, ReductionKind::W3satToQpbo, ReductionKind::QpboToKlabel,
                            ReductionKind::Planarize}) {
        if (to_string(k) == name) {
            return k;
        }
    }
    throw PreconditionError("unknown reduction '" + name + "'");
}

/// One replaced crossing of the planarization.
struct CrossingRecord {
    Crossing crossing;
    Rational radius;
    /// Copies of the larger endpoint of each crossing edge: the near copy
    /// carries the original interaction, the far copy is tied to the endpoint
    /// by an equality edge.
    NodeId near_copy_a = 0;
    NodeId far_copy_a = 0;
    NodeId near_copy_b = 0;
    NodeId far_copy_b = 0;
    /// Every node introduced for this crossing, in allocation order.
    std::vector<NodeId> aux_nodes;
};

/// Bookkeeping of a forward map: enough to rebuild the target from the source
/// and to run the reverse map in a separate process.
struct ReductionTrace {
    ReductionKind kind = ReductionKind::Identity;
    std::vector<NodeId> original_nodes;
    std::vector<NodeId> aux_nodes;
    std::int64_t big_m = 0;
    /// Target label count (k-label embedding only).
    std::size_t k = 0;
    /// First id that the fresh-id counter would hand out next.
    NodeId next_id = 0;
    std::vector<CrossingRecord> crossings;

    friend bool operator==(const ReductionTrace& a, const ReductionTrace& b) {
        auto key = [](const ReductionTrace& t) {
            return std::tie(t.kind, t.original_nodes, t.aux_nodes, t.big_m, t.k, t.next_id);
        };
        if (key(a) != key(b) || a.crossings.size() != b.crossings.size()) {
            return false;
        }
        for (std::size_t i = 0; i < a.crossings.size(); ++i) {
            const auto& x = a.crossings[i];
            const auto& y = b.crossings[i];
            if (!(x.crossing == y.crossing) || x.radius != y.radius || x.aux_nodes != y.aux_nodes ||
                x.near_copy_a != y.near_copy_a || x.far_copy_a != y.far_copy_a || x.near_copy_b != y.near_copy_b ||
                x.far_copy_b != y.far_copy_b) {
                return false;
            }
        }
        return true;
    }
};

/// Original and auxiliary node sets are disjoint and together cover the target.
inline bool trace_partitions(const ReductionTrace& trace, const EnergyInstance& target) {
    std::set<NodeId> seen;
    for (NodeId id : trace.original_nodes) {
        if (!seen.insert(id).second) {
            return false;
        }
    }
    for (NodeId id : trace.aux_nodes) {
        if (!seen.insert(id).second) {
            return false;
        }
    }
    const std::set<NodeId> target_ids(target.node_ids().begin(), target.node_ids().end());
    return seen == target_ids;
}

/// Restriction of a target labeling to the trace's original nodes, in the
/// source instance's node order.
inline Labeling restrict_labeling(const EnergyInstance& source, const EnergyInstance& target, const Labeling& y) {
    check_labeling(target, y);
    Labeling x = Labeling::zeros(source.size());
    for (std::size_t i = 0; i < source.size(); ++i) {
        const auto idx = target.find(source.node_id(i));
        if (!idx) {
            throw MismatchError("target lacks source node " + std::to_string(source.node_id(i)));
        }
        x[i] = y[*idx];
    }
    return x;
}

} // namespace mine

#endif // MINE_TRACE_HPP
