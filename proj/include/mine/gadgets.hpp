#ifndef MINE_GADGETS_HPP
#define MINE_GADGETS_HPP

#include <array>
#include <initializer_list>
#include <utility>
#include <vector>

#include "mine/energy.hpp"
#include "mine/geometry.hpp"

namespace mine {

/// A zero/infinity instance fragment. Binary nodes are 3-label nodes whose
/// third label has infinite unary cost.
struct GadgetInstance {
    EnergyInstance instance;
    std::vector<NodeId> boundary;
    std::vector<NodeId> internal;
    /// Planar straight-line drawing of the fragment on a unit template.
    Drawing drawing;
};

namespace gadget {

using Allowed = std::initializer_list<std::pair<Label, Label>>;

inline std::vector<ExtendedCost> ternary_unary() { return {0, 0, 0}; }
inline std::vector<ExtendedCost> binary_unary() { return {0, 0, kInfinity}; }

/// 3x3 table that is 0 on the listed pairs and +inf elsewhere.
inline CostTable relation(Allowed allowed) {
    CostTable t(3, 3, kInfinity);
    for (const auto& [a, b] : allowed) {
        t(a, b) = 0;
    }
    return t;
}

inline CostTable equality() { return relation({{0, 0}, {1, 1}, {2, 2}}); }

// SPLIT, trunk s with labels a=0, b=1, c=2; channel X with d=0, e=1; channel Y with f=0, g=1.
inline CostTable split_trunk_x() { return relation({{0, 0}, {1, 0}, {1, 1}, {2, 1}}); }
inline CostTable split_trunk_y() { return relation({{0, 0}, {1, 1}, {2, 0}}); }

// UNCROSSCOPY over boundary a (top-left), b (top-right), a2 (bottom-right),
// b2 (bottom-left) with relay nodes r1 and l2. r1 is 0 when b = 0 and 1 + a
// otherwise; l2 is 0 when b = 1 and 1 + a otherwise.
inline CostTable uc_b_r1() { return relation({{0, 0}, {1, 1}, {1, 2}}); }
inline CostTable uc_a_relay() { return relation({{0, 0}, {0, 1}, {1, 0}, {1, 2}}); }
inline CostTable uc_r1_l2() { return relation({{0, 1}, {0, 2}, {1, 0}, {2, 0}}); }
inline CostTable uc_relay_a2() { return relation({{0, 0}, {0, 1}, {1, 0}, {2, 1}}); }
inline CostTable uc_l2_b2() { return relation({{0, 1}, {1, 0}, {2, 0}}); }

/// Adds the two SPLIT edges between existing nodes.
inline void stamp_split(EnergyInstance& instance, NodeId s, NodeId x, NodeId y) {
    instance.add_edge(s, x, split_trunk_x());
    instance.add_edge(s, y, split_trunk_y());
}

/// Adds the seven UNCROSSCOPY edges between existing nodes.
inline void stamp_uncross_copy(EnergyInstance& instance, NodeId a, NodeId b, NodeId a2, NodeId b2, NodeId r1,
                               NodeId l2) {
    instance.add_edge(b, r1, uc_b_r1());
    instance.add_edge(a, r1, uc_a_relay());
    instance.add_edge(a, l2, uc_a_relay());
    instance.add_edge(r1, l2, uc_r1_l2());
    instance.add_edge(r1, a2, uc_relay_a2());
    instance.add_edge(l2, a2, uc_relay_a2());
    instance.add_edge(l2, b2, uc_l2_b2());
}

/// Template coordinates of the UNCROSSCOPY nodes in the unit square, in the
/// order a, b, a2, b2, r1, l2.
inline std::array<Point, 6> uncross_copy_template() {
    return {Point{0, 1}, Point{1, 1}, Point{1, 0}, Point{0, 0}, Point{1, Rational(2, 3)}, Point{0, Rational(1, 3)}};
}

} // namespace gadget

/// SPLIT: a 3-label trunk and two binary channels with ids first, first+1,
/// first+2. Finite joint states: a <-> (d,f), b <-> (d,g) or (e,g), c <-> (e,f).
inline GadgetInstance split_gadget(NodeId first) {
    GadgetInstance g;
    const NodeId s = first;
    const NodeId x = first + 1;
    const NodeId y = first + 2;
    g.instance.add_node(s, gadget::ternary_unary());
    g.instance.add_node(x, gadget::binary_unary());
    g.instance.add_node(y, gadget::binary_unary());
    gadget::stamp_split(g.instance, s, x, y);
    g.boundary = {s, x, y};
    g.drawing = {{s, Point{0, 0}}, {x, Point{1, 1}}, {y, Point{1, -1}}};
    return g;
}

/// UNCROSSCOPY with boundary ids first (top-left), first+1 (top-right),
/// first+2 (bottom-left), first+3 (bottom-right) and relay ids first+4,
/// first+5. Bottom-right copies top-left and bottom-left copies top-right.
inline GadgetInstance uncross_copy_gadget(NodeId first) {
    GadgetInstance g;
    const NodeId tl = first;
    const NodeId tr = first + 1;
    const NodeId bl = first + 2;
    const NodeId br = first + 3;
    const NodeId r1 = first + 4;
    const NodeId l2 = first + 5;
    for (NodeId id : {tl, tr, bl, br}) {
        g.instance.add_node(id, gadget::binary_unary());
    }
    g.instance.add_node(r1, gadget::ternary_unary());
    g.instance.add_node(l2, gadget::ternary_unary());
    gadget::stamp_uncross_copy(g.instance, tl, tr, br, bl, r1, l2);
    g.boundary = {tl, tr, bl, br};
    g.internal = {r1, l2};
    const auto pts = gadget::uncross_copy_template();
    const std::array<NodeId, 6> order{tl, tr, br, bl, r1, l2};
    for (std::size_t i = 0; i < order.size(); ++i) {
        g.drawing.emplace(order[i], pts[i]);
    }
    return g;
}

} // namespace mine

#endif // MINE_GADGETS_HPP
