#ifndef MINE_GEOMETRY_HPP
#define MINE_GEOMETRY_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mine/energy.hpp"
#include "mine/error.hpp"
#include "mine/rational.hpp"

namespace mine {

// Exact arithmetic only. Nothing in this header touches floating point.

struct Point {
    Rational x;
    Rational y;

    friend bool operator==(const Point&, const Point&) = default;
    friend bool operator<(const Point& a, const Point& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    }
};

inline Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(const Rational& k, const Point& p) { return {k * p.x, k * p.y}; }

inline std::string to_string(const Point& p) {
    return "(" + to_fraction_string(p.x) + ", " + to_fraction_string(p.y) + ")";
}

/// Straight-line drawing: exact coordinates per node id.
using Drawing = std::map<NodeId, Point>;

/// Undirected edge as a pair of node ids with first < second.
using NodeEdge = std::pair<NodeId, NodeId>;

inline NodeEdge make_node_edge(NodeId a, NodeId b) { return a < b ? NodeEdge{a, b} : NodeEdge{b, a}; }

inline std::string to_string(const NodeEdge& e) {
    return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

struct Crossing {
    NodeEdge edge_a;
    NodeEdge edge_b;
    Point point;

    friend bool operator==(const Crossing&, const Crossing&) = default;
};

namespace geom {

inline Rational cross(const Point& o, const Point& a, const Point& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

/// Sign of the turn o -> a -> b: +1 left, -1 right, 0 collinear.
inline int orientation(const Point& o, const Point& a, const Point& b) {
    const Rational c = cross(o, a, b);
    return c > 0 ? 1 : (c < 0 ? -1 : 0);
}

inline Rational dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }

inline Rational squared_norm(const Point& a) { return dot(a, a); }

/// Assumes p is collinear with segment [a, b]; true when p lies strictly between.
inline bool strictly_between(const Point& a, const Point& b, const Point& p) {
    const Rational t = dot(p - a, b - a);
    return t > 0 && t < squared_norm(b - a);
}

inline bool on_open_segment(const Point& a, const Point& b, const Point& p) {
    return orientation(a, b, p) == 0 && strictly_between(a, b, p);
}

inline Rational squared_distance_to_segment(const Point& p, const Point& a, const Point& b) {
    const Point ab = b - a;
    const Rational len2 = squared_norm(ab);
    Rational t = dot(p - a, ab) / len2;
    if (t < 0) {
        t = 0;
    } else if (t > 1) {
        t = 1;
    }
    return squared_norm(p - (a + t * ab));
}

/// Rational lower bound on sqrt(r) for r >= 0, exact whenever sqrt(r) is rational.
inline Rational sqrt_lower_bound(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    const BigInt scale = BigInt(1) << 32;
    const BigInt product = num * den * scale * scale;
    const BigInt root = boost::multiprecision::sqrt(product);
    return Rational(root, den * scale);
}

} // namespace geom

/// Proper interior intersection of the open segments (p1,p2) and (p3,p4).
/// Disjoint, endpoint-touching and T-junction configurations yield nullopt;
/// collinear segments overlapping in more than one point violate general
/// position and throw.
inline std::optional<Point> segment_intersection(const Point& p1, const Point& p2, const Point& p3, const Point& p4) {
    using geom::orientation;
    if (p1 == p2 || p3 == p4) {
        throw PreconditionError("segment_intersection: degenerate segment");
    }
    const int d1 = orientation(p3, p4, p1);
    const int d2 = orientation(p3, p4, p2);
    const int d3 = orientation(p1, p2, p3);
    const int d4 = orientation(p1, p2, p4);

    if (d1 == 0 && d2 == 0) {
        // Collinear: parametrize along (p1,p2) and compare intervals.
        const Point dir = p2 - p1;
        const Rational len2 = geom::squared_norm(dir);
        Rational t3 = geom::dot(p3 - p1, dir) / len2;
        Rational t4 = geom::dot(p4 - p1, dir) / len2;
        if (t3 > t4) {
            std::swap(t3, t4);
        }
        const Rational lo = std::max(Rational(0), t3);
        const Rational hi = std::min(Rational(1), t4);
        if (lo < hi) {
            throw GeneralPositionError("collinear overlapping segments " + to_string(p1) + "-" + to_string(p2) +
                                       " and " + to_string(p3) + "-" + to_string(p4));
        }
        return std::nullopt;
    }
    if (d1 * d2 < 0 && d3 * d4 < 0) {
        const Point r = p2 - p1;
        const Point s = p4 - p3;
        const Rational denom = r.x * s.y - r.y * s.x;
        const Rational t = ((p3.x - p1.x) * s.y - (p3.y - p1.y) * s.x) / denom;
        return p1 + t * r;
    }
    return std::nullopt;
}

/// Edges of the instance as sorted node-id pairs, in lexicographic order.
inline std::vector<NodeEdge> node_edges(const EnergyInstance& instance) {
    std::vector<NodeEdge> out;
    out.reserve(instance.edges().size());
    for (const auto& [key, table] : instance.edges()) {
        out.emplace_back(instance.node_id(key.first), instance.node_id(key.second));
    }
    return out;
}

/// Every instance node has a coordinate and no two nodes share one.
inline void check_drawing(const EnergyInstance& instance, const Drawing& d) {
    std::set<Point> seen;
    for (NodeId id : instance.node_ids()) {
        auto it = d.find(id);
        if (it == d.end()) {
            throw MismatchError("drawing has no coordinate for node " + std::to_string(id));
        }
        if (!seen.insert(it->second).second) {
            throw GeneralPositionError("two nodes share the point " + to_string(it->second));
        }
    }
}

namespace geom {

struct Box {
    Rational xmin, xmax, ymin, ymax;
};

inline Box box_of(const Point& a, const Point& b) {
    return {std::min(a.x, b.x), std::max(a.x, b.x), std::min(a.y, b.y), std::max(a.y, b.y)};
}

inline bool boxes_disjoint(const Box& a, const Box& b) {
    return a.xmax < b.xmin || b.xmax < a.xmin || a.ymax < b.ymin || b.ymax < a.ymin;
}

} // namespace geom

/// All proper crossings between non-adjacent edges, ordered by (edge_a, edge_b)
/// with edge_a < edge_b lexicographically.
inline std::vector<Crossing> list_crossings(const EnergyInstance& instance, const Drawing& d) {
    check_drawing(instance, d);
    const std::vector<NodeEdge> edges = node_edges(instance);
    std::vector<geom::Box> boxes;
    boxes.reserve(edges.size());
    for (const auto& e : edges) {
        boxes.push_back(geom::box_of(d.at(e.first), d.at(e.second)));
    }
    std::vector<Crossing> out;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const NodeEdge& a = edges[i];
            const NodeEdge& b = edges[j];
            if (a.first == b.first || a.first == b.second || a.second == b.first || a.second == b.second) {
                continue;
            }
            if (geom::boxes_disjoint(boxes[i], boxes[j])) {
                continue;
            }
            if (auto p = segment_intersection(d.at(a.first), d.at(a.second), d.at(b.first), d.at(b.second))) {
                out.push_back({a, b, std::move(*p)});
            }
        }
    }
    return out;
}

struct GeneralPositionViolation {
    enum class Kind { SharedPoint, CollinearOverlap, NodeOnEdge, ConcurrentEdges };
    Kind kind;
    std::vector<NodeEdge> edges;
    std::vector<NodeId> nodes;
    Point point;
    std::string message;
};

struct GeneralPositionReport {
    std::vector<GeneralPositionViolation> violations;
    bool ok() const noexcept { return violations.empty(); }
};

/// Checks that no two nodes coincide, no edges overlap collinearly, no node
/// sits in the interior of another edge and no three edges meet at a common
/// interior point. Violations are returned, never thrown.
inline GeneralPositionReport validate_general_position(const EnergyInstance& instance, const Drawing& d) {
    using Kind = GeneralPositionViolation::Kind;
    GeneralPositionReport report;

    std::map<Point, NodeId> by_point;
    for (NodeId id : instance.node_ids()) {
        auto it = d.find(id);
        if (it == d.end()) {
            report.violations.push_back({Kind::SharedPoint, {}, {id}, {}, "node " + std::to_string(id) + " has no coordinate"});
            continue;
        }
        auto [pos, inserted] = by_point.emplace(it->second, id);
        if (!inserted) {
            report.violations.push_back({Kind::SharedPoint, {}, {pos->second, id}, it->second,
                                         "nodes " + std::to_string(pos->second) + " and " + std::to_string(id) +
                                             " share a point"});
        }
    }
    if (!report.ok()) {
        return report;
    }

    const std::vector<NodeEdge> edges = node_edges(instance);

    for (const auto& e : edges) {
        const Point& a = d.at(e.first);
        const Point& b = d.at(e.second);
        for (NodeId id : instance.node_ids()) {
            if (id == e.first || id == e.second) {
                continue;
            }
            const Point& p = d.at(id);
            if (geom::on_open_segment(a, b, p)) {
                report.violations.push_back({Kind::NodeOnEdge, {e}, {id}, p,
                                             "node " + std::to_string(id) + " lies on edge " + to_string(e)});
            }
        }
    }

    std::map<Point, std::set<NodeEdge>> at_point;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const NodeEdge& ea = edges[i];
            const NodeEdge& eb = edges[j];
            const Point& a1 = d.at(ea.first);
            const Point& a2 = d.at(ea.second);
            const Point& b1 = d.at(eb.first);
            const Point& b2 = d.at(eb.second);
            try {
                if (auto p = segment_intersection(a1, a2, b1, b2)) {
                    auto& group = at_point[*p];
                    group.insert(ea);
                    group.insert(eb);
                }
            } catch (const GeneralPositionError&) {
                report.violations.push_back({Kind::CollinearOverlap, {ea, eb}, {}, {},
                                             "edges " + to_string(ea) + " and " + to_string(eb) + " overlap"});
            }
        }
    }
    for (const auto& [p, group] : at_point) {
        if (group.size() > 2) {
            GeneralPositionViolation v{Kind::ConcurrentEdges, {group.begin(), group.end()}, {}, p, ""};
            v.message = std::to_string(group.size()) + " edges meet at " + to_string(p);
            report.violations.push_back(std::move(v));
        }
    }
    return report;
}

/// A rational radius r > 0 such that the open disk of radius r around p
/// meets no node, no non-excluded edge and no other crossing point. The value
/// is half the exact minimum distance when that distance is rational, and a
/// rational lower bound of it otherwise.
inline Rational free_radius(const EnergyInstance& instance, const Drawing& d, const Point& p,
                            const std::set<NodeEdge>& exclude) {
    std::optional<Rational> best;
    auto consider = [&best](Rational dist2) {
        if (!best || dist2 < *best) {
            best = std::move(dist2);
        }
    };
    for (NodeId id : instance.node_ids()) {
        const Rational dist2 = geom::squared_norm(d.at(id) - p);
        if (dist2 == 0) {
            throw PreconditionError("free_radius: point coincides with node " + std::to_string(id));
        }
        consider(dist2);
    }
    const std::vector<NodeEdge> edges = node_edges(instance);
    for (const auto& e : edges) {
        if (exclude.count(e) != 0) {
            continue;
        }
        const Rational dist2 = geom::squared_distance_to_segment(p, d.at(e.first), d.at(e.second));
        if (dist2 == 0) {
            throw PreconditionError("free_radius: point lies on edge " + to_string(e));
        }
        consider(dist2);
    }
    for (const auto& c : list_crossings(instance, d)) {
        if (c.point != p) {
            consider(geom::squared_norm(c.point - p));
        }
    }
    if (!best) {
        throw PreconditionError("free_radius: drawing is empty");
    }
    return geom::sqrt_lower_bound(*best) / 2;
}

/// Fallback layout: nodes on the unit circle in id order, using the rational
/// parametrization ((1-t^2)/(1+t^2), 2t/(1+t^2)) with t_i = (i+1)/(n+1) scaled
/// so the points spread over the upper and lower arcs.
inline Drawing circle_layout(const EnergyInstance& instance) {
    Drawing d;
    const std::size_t n = instance.size();
    for (std::size_t i = 0; i < n; ++i) {
        // t in (-2, 2) spreads the points over roughly 250 degrees of arc.
        const Rational t = Rational(4 * static_cast<long long>(i + 1), static_cast<long long>(n + 1)) - 2;
        const Rational den = 1 + t * t;
        d.emplace(instance.node_id(i), Point{(1 - t * t) / den, 2 * t / den});
    }
    return d;
}

} // namespace mine

#endif // MINE_GEOMETRY_HPP
