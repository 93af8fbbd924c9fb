#include <catch_amalgamated.hpp>

#include "mine/generators.hpp"
#include "mine/io.hpp"
#include "mine/planarize.hpp"
#include "mine/w3sat.hpp"

using namespace mine;

TEST_CASE("minimal instance file", "[io]") {
    const InstanceFile f = parse_instance("MINE 1\nnodes 1\nlabels 2\nunary 0 0 5\n");
    REQUIRE(f.instance.size() == 1);
    CHECK(f.instance.node_id(0) == 0);
    CHECK(f.instance.unary(0) == std::vector<ExtendedCost>{0, 5});
    CHECK_FALSE(f.drawing);
    CHECK(serialize_instance(f) == "MINE 1\nnodes 1\nlabels 2\nunary 0 0 5\n");
}

TEST_CASE("INF entries and coordinates", "[io]") {
    const std::string text =
        "MINE 1\n"
        "# comment line\n"
        "nodes 2 4 9\n"
        "labels 2 3\n"
        "coords\n"
        "coord 4 1/2 -3\n"
        "coord 9 2/4 7/3\n"
        "unary 9 0 INF 1\n"
        "edge 9 4 0 1 2 3 INF 5\n"
        "constant -7\n";
    const InstanceFile f = parse_instance(text);
    REQUIRE(f.instance.size() == 2);
    CHECK(f.instance.unary(0) == std::vector<ExtendedCost>{0, 0});
    CHECK(f.instance.unary(1)[1].is_infinite());
    CHECK(f.instance.constant() == -7);
    // rows of the stored table follow the smaller id
    const CostTable* t = f.instance.find_edge(0, 1);
    REQUIRE(t != nullptr);
    CHECK((*t)(0, 2).is_infinite());
    CHECK((*t)(1, 0) == ExtendedCost(1));
    REQUIRE(f.drawing);
    CHECK(f.drawing->at(9).x == Rational(1, 2));

    const std::string canon = serialize_instance(f);
    CHECK(canon.find("coord 9 1/2 7/3") != std::string::npos);
    CHECK(canon.find("INF") != std::string::npos);
    const InstanceFile g = parse_instance(canon);
    CHECK(g.instance == f.instance);
    CHECK(*g.drawing == *f.drawing);
    CHECK(serialize_instance(g) == canon);
}

TEST_CASE("parse errors carry positions", "[io]") {
    auto error_at = [](const std::string& text) {
        try {
            parse_instance(text);
        } catch (const ParseError& e) {
            return std::pair<std::size_t, std::size_t>{e.line(), e.column()};
        }
        FAIL("no ParseError for: " << text);
        return std::pair<std::size_t, std::size_t>{0, 0};
    };
    CHECK(error_at("MINE 1\nnodes 1\nlabels 2\nunary 0 0 x\n") == std::pair<std::size_t, std::size_t>{4, 11});
    CHECK(error_at("MINE 2\n").first == 1);
    CHECK(error_at("MINE 1\nnodes 2\nlabels 2\nedge 0 1 0 0 0\n").first == 4);
    CHECK(error_at("MINE 1\nnodes 2\nlabels 2\nedge 0 5 0 0 0 0\n") == std::pair<std::size_t, std::size_t>{4, 8});
    CHECK(error_at("MINE 1\nnodes 2 3 1\nlabels 2\n").first == 2);
    CHECK(error_at("MINE 1\nnodes 1\nlabels 2\nfoo 1\n").first == 4);
    CHECK(error_at("MINE 1\nnodes 2\nlabels 2\ncoord 0 0 0\n").first == 4);
    CHECK(error_at("MINE 1\nnodes 1\nlabels 2\ncoord 0 1/0 0\n").first == 4);
    CHECK(error_at("MINE 1\nnodes 1\nlabels 2\nunary 0 INF INF\n").first == 2);
    CHECK(error_at("").first == 1);
}

TEST_CASE("canonical round trip on random instances", "[io]") {
    Rng rng(101);
    for (int rep = 0; rep < 100; ++rep) {
        const auto n = static_cast<std::size_t>(rng.uniform(1, 7));
        const auto k = static_cast<std::size_t>(rng.uniform(1, 4));
        InstanceFile f;
        f.instance = gen::random_instance(rng, n, k, {-20, 20, 1, 5});
        f.instance.set_constant(rng.uniform(-3, 3));
        if (rng.chance(1, 2)) {
            f.drawing = gen::random_drawing(rng, f.instance);
        }
        const std::string a = serialize_instance(f);
        const InstanceFile g = parse_instance(a);
        CHECK(g.instance == f.instance);
        CHECK(g.drawing == f.drawing);
        CHECK(serialize_instance(g) == a);
    }
}

TEST_CASE("wcnf3 parsing", "[io]") {
    const W3SatTriv s = parse_wcnf3("c a comment\np wcnf3 3 1\nw 1 1 1\n1 -2 -3 0\n");
    CHECK(s.num_vars == 3);
    REQUIRE(s.clauses.size() == 1);
    CHECK(s.clauses[0].literals == std::array<Literal, 3>{1, -2, -3});
    CHECK(s.weights == std::vector<std::int64_t>{1, 1, 1});
    CHECK(parse_wcnf3(serialize_wcnf3(s)).clauses[0].literals == s.clauses[0].literals);

    CHECK_THROWS_AS(parse_wcnf3("p wcnf3 3 1\nw 1 1 1\n1 -1 2 0\n"), ParseError);
    CHECK_THROWS_AS(parse_wcnf3("p wcnf3 3 1\nw 1 -1 1\n1 2 3 0\n"), ParseError);
    CHECK_THROWS_AS(parse_wcnf3("p wcnf3 3 1\nw 1 1 1\n1 2 0\n"), ParseError);
    CHECK_THROWS_AS(parse_wcnf3("p wcnf3 3 1\nw 1 1 1\n1 2 3\n"), ParseError);
    CHECK_THROWS_AS(parse_wcnf3("p wcnf3 3 2\nw 1 1 1\n1 2 3 0\n"), ParseError);
    CHECK_THROWS_AS(parse_wcnf3("p wcnf3 3 1\nw 1 1 1\n1 2 4 0\n"), ParseError);
    CHECK_THROWS_AS(parse_wcnf3("p cnf 3 1\nw 1 1 1\n1 2 3 0\n"), ParseError);
}

TEST_CASE("solution files", "[io]") {
    EnergyInstance inst;
    inst.add_node(2, {0, 4, 1});
    inst.add_node(7, {3, 0});
    const Labeling x({1, 1});
    const std::string text = serialize_solution(inst, x);
    CHECK(text == "2 1\n7 1\nenergy 4\n");
    CHECK(parse_solution(text, inst) == x);
    CHECK(parse_solution("7 0\n2 2\nenergy 999\n", inst) == Labeling({2, 0}));
    CHECK_THROWS_AS(parse_solution("2 1\n", inst), ParseError);
    CHECK_THROWS_AS(parse_solution("2 1\n7 2\n", inst), ParseError);
    CHECK_THROWS_AS(parse_solution("2 1\n2 1\n7 0\n", inst), ParseError);
    CHECK(serialize_assignment({true, false}) == "1 1\n2 0\n");
}

TEST_CASE("trace round trip", "[io]") {
    EnergyInstance x;
    for (NodeId id = 1; id <= 4; ++id) {
        x.add_node(id, {0, 1, 2});
    }
    x.add_edge(1, 3, CostTable{{0, 1, 2}, {1, 0, 1}, {2, 1, 0}});
    x.add_edge(2, 4, CostTable{{0, 3, 3}, {3, 0, 3}, {3, 3, 0}});
    const Drawing d{{1, {Rational(0), Rational(0)}},
                    {2, {Rational(1), Rational(0)}},
                    {3, {Rational(1), Rational(1)}},
                    {4, {Rational(0), Rational(1)}}};
    const PlanarizeResult res = planarize(x, d);
    const std::string text = serialize_trace(res.trace);
    CHECK(parse_trace(text) == res.trace);

    const ReductionTrace w = w3sat_to_qpbo(parse_wcnf3("p wcnf3 3 1\nw 1 1 1\n1 2 3 0\n")).second;
    CHECK(parse_trace(serialize_trace(w)) == w);

    CHECK_THROWS_AS(parse_trace("{"), ParseError);
    CHECK_THROWS_AS(parse_trace("{\"kind\": \"nope\"}"), ParseError);
    CHECK_THROWS_AS(parse_trace("[]"), ParseError);
}
