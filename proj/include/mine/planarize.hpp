#ifndef MINE_PLANARIZE_HPP
#define MINE_PLANARIZE_HPP

#include <array>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "mine/energy.hpp"
#include "mine/error.hpp"
#include "mine/gadgets.hpp"
#include "mine/geometry.hpp"
#include "mine/trace.hpp"

namespace mine {

/// Nodes added per replaced crossing: four copies of the crossing edges'
/// endpoints, the two near-side SPLIT channel pairs and four UNCROSSCOPY
/// gadgets with two fresh boundary nodes and two relays each.
inline constexpr std::size_t kAuxNodesPerCrossing = 24;

/// Node count the construction is usually quoted with; kept for reporting.
inline constexpr std::size_t kReferenceAuxNodesPerCrossing = 22;

struct PlanarizeResult {
    EnergyInstance instance;
    Drawing drawing;
    ReductionTrace trace;
};

namespace detail {

inline Rational l1_norm(const Point& p) { return abs(p.x) + abs(p.y); }

inline void require_ternary(const EnergyInstance& instance) {
    if (!instance.uniform_labels(3)) {
        throw PreconditionError("planarize: every node must have exactly 3 labels");
    }
}

inline void require_general_position(const EnergyInstance& instance, const Drawing& d) {
    const GeneralPositionReport report = validate_general_position(instance, d);
    if (!report.ok()) {
        throw GeneralPositionError("drawing violates general position: " + report.violations.front().message);
    }
}

} // namespace detail

/// Replaces one crossing of edges (u,v) and (p,q) inside the free disk around
/// the crossing point. (u,v) becomes u - v1 (carrying f_uv) and v2 = v, (p,q)
/// becomes p - q1 (carrying f_pq) and q2 = q. v1 and v2 are tied through
/// SPLIT - 4 x UNCROSSCOPY - SPLIT channels, likewise q1 and q2; the channels
/// cross each other only inside the copy gadgets, so the drawing gains no
/// crossing. Node ids are drawn from trace.next_id.
inline PlanarizeResult replace_crossing(const EnergyInstance& instance, const Drawing& d, const ReductionTrace& trace,
                                        const Crossing& c) {
    detail::require_ternary(instance);
    const auto [u, v] = c.edge_a;
    const auto [p, q] = c.edge_b;
    const CostTable* f_uv = instance.find_edge(instance.index_of(u), instance.index_of(v));
    const CostTable* f_pq = instance.find_edge(instance.index_of(p), instance.index_of(q));
    if (f_uv == nullptr || f_pq == nullptr) {
        throw PreconditionError("replace_crossing: crossing edges are not in the instance");
    }
    const auto current = segment_intersection(d.at(u), d.at(v), d.at(p), d.at(q));
    if (!current || *current != c.point) {
        throw PreconditionError("replace_crossing: " + to_string(c.edge_a) + " and " + to_string(c.edge_b) +
                                " do not cross at " + to_string(c.point));
    }

    const Rational r = free_radius(instance, d, c.point, {c.edge_a, c.edge_b});
    const Point dir_a = d.at(v) - d.at(u);
    const Point dir_b = d.at(q) - d.at(p);
    // Template coordinates satisfy |s|, |t| <= 3, so every placed point lies
    // within 3r/4 of the crossing.
    const Point e1 = (r / (8 * detail::l1_norm(dir_a))) * dir_a;
    const Point e2 = (r / (8 * detail::l1_norm(dir_b))) * dir_b;
    auto at = [&](const Rational& s, const Rational& t) { return c.point + s * e1 + t * e2; };

    PlanarizeResult out{instance, d, trace};
    CrossingRecord rec;
    rec.crossing = c;
    rec.radius = r;
    NodeId next = trace.next_id;
    for (NodeId id : instance.node_ids()) {
        if (id >= next) {
            throw MismatchError("replace_crossing: fresh-id counter does not exceed existing ids");
        }
    }
    auto fresh = [&](std::vector<ExtendedCost> unary, const Point& pos) {
        const NodeId id = next++;
        out.instance.add_node(id, std::move(unary));
        out.drawing.emplace(id, pos);
        rec.aux_nodes.push_back(id);
        return id;
    };

    const NodeId v1 = fresh(gadget::ternary_unary(), at(-3, 0));
    const NodeId v2 = fresh(gadget::ternary_unary(), at(3, 0));
    const NodeId q1 = fresh(gadget::ternary_unary(), at(0, -3));
    const NodeId q2 = fresh(gadget::ternary_unary(), at(0, 3));
    const NodeId x1 = fresh(gadget::binary_unary(), at(-2, 1));
    const NodeId y1 = fresh(gadget::binary_unary(), at(-2, -1));
    const NodeId x2 = fresh(gadget::binary_unary(), at(-1, -2));
    const NodeId y2 = fresh(gadget::binary_unary(), at(1, -2));

    // One copy gadget per diamond |s - cs| + |t - ct| <= 1: the west corner is
    // copied to the east corner and the south corner to the north corner.
    auto copy = [&](int cs, int ct, NodeId west, NodeId south) {
        const NodeId east = fresh(gadget::binary_unary(), at(cs + 1, ct));
        const NodeId north = fresh(gadget::binary_unary(), at(cs, ct + 1));
        const NodeId r1 = fresh(gadget::ternary_unary(), at(cs + Rational(1, 3), ct - Rational(2, 3)));
        const NodeId l2 = fresh(gadget::ternary_unary(), at(cs - Rational(1, 3), ct + Rational(2, 3)));
        gadget::stamp_uncross_copy(out.instance, west, south, east, north, r1, l2);
        return std::pair{east, north};
    };
    const auto [y1_a, x2_a] = copy(-1, -1, y1, x2);
    const auto [y1_b, y2_a] = copy(1, -1, y1_a, y2);
    const auto [x1_a, x2_b] = copy(-1, 1, x1, x2_a);
    const auto [x1_b, y2_b] = copy(1, 1, x1_a, y2_a);

    out.instance.remove_edge(u, v);
    out.instance.remove_edge(p, q);
    out.instance.add_edge(u, v1, *f_uv);
    out.instance.add_edge(v2, v, gadget::equality());
    out.instance.add_edge(p, q1, *f_pq);
    out.instance.add_edge(q2, q, gadget::equality());
    gadget::stamp_split(out.instance, v1, x1, y1);
    gadget::stamp_split(out.instance, q1, x2, y2);
    gadget::stamp_split(out.instance, v2, x1_b, y1_b);
    gadget::stamp_split(out.instance, q2, x2_b, y2_b);

    rec.near_copy_a = v1;
    rec.far_copy_a = v2;
    rec.near_copy_b = q1;
    rec.far_copy_b = q2;
    out.trace.aux_nodes.insert(out.trace.aux_nodes.end(), rec.aux_nodes.begin(), rec.aux_nodes.end());
    out.trace.crossings.push_back(std::move(rec));
    out.trace.next_id = next;
    return out;
}

/// Replaces the first listed crossing until none remain.
inline PlanarizeResult planarize(const EnergyInstance& instance, const Drawing& d) {
    detail::require_ternary(instance);
    check_drawing(instance, d);
    detail::require_general_position(instance, d);

    PlanarizeResult out{instance, d, {}};
    out.trace.kind = ReductionKind::Planarize;
    out.trace.original_nodes.assign(instance.node_ids().begin(), instance.node_ids().end());
    out.trace.next_id = instance.size() == 0 ? 0 : instance.node_ids().back() + 1;

    std::vector<Crossing> crossings = list_crossings(out.instance, out.drawing);
    const std::size_t bound = crossings.size() + 1;
    std::size_t iterations = 0;
    while (!crossings.empty()) {
        if (++iterations > bound) {
            throw Error("planarize: iteration bound exceeded");
        }
        out = replace_crossing(out.instance, out.drawing, out.trace, crossings.front());
        std::vector<Crossing> after = list_crossings(out.instance, out.drawing);
        if (after.size() >= crossings.size()) {
            throw Error("planarize: crossing count did not decrease");
        }
        crossings = std::move(after);
    }
    return out;
}

/// Reverse map with the target given: restriction to the original nodes for
/// finite energy, all-zeros otherwise.
inline Labeling planar_sigma(const EnergyInstance& source, const ReductionTrace& trace, const EnergyInstance& target,
                             const Labeling& y) {
    if (trace.kind != ReductionKind::Planarize ||
        !std::equal(trace.original_nodes.begin(), trace.original_nodes.end(), source.node_ids().begin(),
                    source.node_ids().end())) {
        throw MismatchError("trace does not belong to a planarization of this instance");
    }
    if (evaluate(target, y).is_finite()) {
        return restrict_labeling(source, target, y);
    }
    return Labeling::zeros(source.size());
}

/// Reverse map that replays the planarization of (source, d) and checks the trace.
inline Labeling planar_sigma(const EnergyInstance& source, const Drawing& d, const ReductionTrace& trace,
                             const Labeling& y) {
    PlanarizeResult rebuilt = planarize(source, d);
    if (!(rebuilt.trace == trace)) {
        throw MismatchError("trace does not match the planarization of this instance");
    }
    return planar_sigma(source, trace, rebuilt.instance, y);
}

} // namespace mine

#endif // MINE_PLANARIZE_HPP
