#include <catch_amalgamated.hpp>

#include "mine/generators.hpp"
#include "mine/geometry.hpp"

using namespace mine;

namespace {

Point P(long long x, long long y) { return Point{Rational(x), Rational(y)}; }

EnergyInstance bare(std::size_t n, const std::vector<std::pair<NodeId, NodeId>>& edges, NodeId first = 1) {
    EnergyInstance inst;
    for (std::size_t i = 0; i < n; ++i) {
        inst.add_node(first + i, {0, 0});
    }
    for (const auto& [a, b] : edges) {
        inst.add_edge(a, b, CostTable(2, 2));
    }
    return inst;
}

} // namespace

TEST_CASE("segment_intersection", "[geometry]") {
    const auto x = segment_intersection(P(0, 0), P(1, 1), P(0, 1), P(1, 0));
    REQUIRE(x);
    CHECK(*x == Point{Rational(1, 2), Rational(1, 2)});
    CHECK_FALSE(segment_intersection(P(0, 0), P(1, 0), P(2, 0), P(3, 0)));
    CHECK_FALSE(segment_intersection(P(0, 0), P(2, 2), P(1, 1), P(3, 0)));
    CHECK_FALSE(segment_intersection(P(0, 0), P(1, 0), P(1, 0), P(2, 5)));
    CHECK_THROWS_AS(segment_intersection(P(0, 0), P(2, 0), P(1, 0), P(3, 0)), GeneralPositionError);
    CHECK_THROWS_AS(segment_intersection(P(0, 0), P(0, 0), P(1, 0), P(3, 0)), PreconditionError);

    Rng rng(17);
    for (int rep = 0; rep < 200; ++rep) {
        std::array<Point, 4> p;
        for (auto& q : p) {
            q = P(rng.uniform(-5, 5), rng.uniform(-5, 5));
        }
        if (p[0] == p[1] || p[2] == p[3]) {
            continue;
        }
        try {
            CHECK(segment_intersection(p[0], p[1], p[2], p[3]) == segment_intersection(p[2], p[3], p[0], p[1]));
            CHECK(segment_intersection(p[0], p[1], p[2], p[3]) == segment_intersection(p[1], p[0], p[3], p[2]));
        } catch (const GeneralPositionError&) {
            CHECK_THROWS_AS(segment_intersection(p[2], p[3], p[0], p[1]), GeneralPositionError);
        }
    }
}

TEST_CASE("list_crossings", "[geometry]") {
    const EnergyInstance x = bare(4, {{1, 3}, {2, 4}});
    const Drawing square{{1, P(0, 0)}, {2, P(1, 0)}, {3, P(1, 1)}, {4, P(0, 1)}};
    const auto c = list_crossings(x, square);
    REQUIRE(c.size() == 1);
    CHECK(c[0].edge_a == NodeEdge{1, 3});
    CHECK(c[0].edge_b == NodeEdge{2, 4});

    const EnergyInstance path = bare(4, {{1, 2}, {2, 3}, {3, 4}});
    CHECK(list_crossings(path, square).empty());

    const EnergyInstance k4 = bare(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    CHECK(list_crossings(k4, square).size() == 1);

    // invariance under translation and scaling
    Drawing moved;
    for (const auto& [id, p] : square) {
        moved[id] = Rational(7, 3) * p + Point{Rational(-5), Rational(11, 2)};
    }
    const auto c2 = list_crossings(k4, moved);
    REQUIRE(c2.size() == 1);
    CHECK(c2[0].edge_a == c[0].edge_a);

    Drawing missing = square;
    missing.erase(4);
    CHECK_THROWS_AS(list_crossings(x, missing), PreconditionError);
}

TEST_CASE("validate_general_position", "[geometry]") {
    const EnergyInstance x = bare(4, {{1, 3}, {2, 4}});
    const Drawing square{{1, P(0, 0)}, {2, P(1, 0)}, {3, P(1, 1)}, {4, P(0, 1)}};
    CHECK(validate_general_position(x, square).ok());

    // three diagonals of a hexagon through the origin
    const EnergyInstance three = bare(6, {{1, 4}, {2, 5}, {3, 6}});
    const Drawing hex{{1, P(2, 0)}, {2, P(1, 2)}, {3, P(-1, 2)}, {4, P(-2, 0)}, {5, P(-1, -2)}, {6, P(1, -2)}};
    const auto rep = validate_general_position(three, hex);
    REQUIRE_FALSE(rep.ok());
    bool concurrent = false;
    for (const auto& v : rep.violations) {
        if (v.kind == GeneralPositionViolation::Kind::ConcurrentEdges) {
            concurrent = true;
            CHECK(v.edges.size() == 3);
        }
    }
    CHECK(concurrent);

    const EnergyInstance on_edge = bare(3, {{1, 2}});
    const Drawing mid{{1, P(0, 0)}, {2, P(2, 0)}, {3, P(1, 0)}};
    const auto rep2 = validate_general_position(on_edge, mid);
    REQUIRE_FALSE(rep2.ok());
    CHECK(rep2.violations[0].kind == GeneralPositionViolation::Kind::NodeOnEdge);

    const Drawing same{{1, P(0, 0)}, {2, P(2, 0)}, {3, P(0, 0)}};
    CHECK_FALSE(validate_general_position(on_edge, same).ok());
}

TEST_CASE("free_radius", "[geometry]") {
    const EnergyInstance x = bare(4, {{1, 3}, {2, 4}});
    const Drawing square{{1, P(0, 0)}, {2, P(1, 0)}, {3, P(1, 1)}, {4, P(0, 1)}};
    const Point mid{Rational(1, 2), Rational(1, 2)};
    const Rational r = free_radius(x, square, mid, {{1, 3}, {2, 4}});
    CHECK(r >= Rational(1, 4));
    // nearest node at distance sqrt(1/2): r is a lower bound of half of it
    CHECK(4 * r * r <= Rational(1, 2));

    const EnergyInstance single = bare(2, {{1, 2}});
    const Drawing seg{{1, P(0, 0)}, {2, P(4, 0)}};
    CHECK(free_radius(single, seg, P(2, 0), {{1, 2}}) == Rational(1));
    CHECK_THROWS_AS(free_radius(single, seg, P(2, 0), {}), PreconditionError);
    CHECK_THROWS_AS(free_radius(EnergyInstance{}, Drawing{}, P(0, 0), {}), PreconditionError);
}

TEST_CASE("circle_layout", "[geometry]") {
    const EnergyInstance inst = bare(7, {{1, 2}});
    const Drawing d = circle_layout(inst);
    REQUIRE(d.size() == 7);
    std::set<Point> pts;
    for (const auto& [id, p] : d) {
        CHECK(p.x * p.x + p.y * p.y == 1);
        pts.insert(p);
    }
    CHECK(pts.size() == 7);
}
