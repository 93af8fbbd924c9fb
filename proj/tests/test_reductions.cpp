#include <catch_amalgamated.hpp>

#include "mine/ap_verify.hpp"
#include "mine/generators.hpp"
#include "mine/klabel.hpp"
#include "mine/planarize.hpp"
#include "mine/solvers/brute_force.hpp"
#include "mine/solvers/elimination.hpp"
#include "mine/w3sat.hpp"

using namespace mine;

namespace {

MultilinearPoly poly(std::initializer_list<std::pair<Monomial, std::int64_t>> terms) {
    MultilinearPoly p;
    for (const auto& [m, c] : terms) {
        p.add_term(m, c);
    }
    return p;
}

BoolAssignment bits(std::uint32_t mask, std::size_t n) {
    BoolAssignment a;
    for (std::size_t i = 0; i < n; ++i) {
        a[i + 1] = ((mask >> i) & 1U) != 0;
    }
    return a;
}

bool clause_true(const Clause& c, const BoolAssignment& a) {
    for (Literal l : c.literals) {
        if (a.at(literal_var(l)) == (l > 0)) {
            return true;
        }
    }
    return false;
}

/// min over the auxiliary variables of q, with the originals fixed by `a`.
std::int64_t min_over_aux(const MultilinearPoly& q, BoolAssignment a, const std::vector<VarId>& aux) {
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (std::uint32_t m = 0; m < (1U << aux.size()); ++m) {
        for (std::size_t j = 0; j < aux.size(); ++j) {
            a[aux[j]] = ((m >> j) & 1U) != 0;
        }
        best = std::min(best, poly_evaluate(q, a));
    }
    return best;
}

} // namespace

TEST_CASE("clause_to_poly", "[reductions]") {
    CHECK(clause_to_poly(Clause{{1, -2, -3}}) == poly({{{1, 2, 3}, 1}, {{2, 3}, -1}, {{}, 1}}));
    CHECK(clause_to_poly(Clause{{-1, -2, -3}}) == poly({{{}, 1}, {{1, 2, 3}, -1}}));
    CHECK(clause_to_poly(Clause{{1, 2, 3}}) ==
          poly({{{1}, 1}, {{2}, 1}, {{3}, 1}, {{1, 2}, -1}, {{1, 3}, -1}, {{2, 3}, -1}, {{1, 2, 3}, 1}}));
    CHECK_THROWS_AS(clause_to_poly(Clause{{1, -1, 2}}), PreconditionError);
    CHECK_THROWS_AS(clause_to_poly(Clause{{1, 0, 2}}), PreconditionError);

    for (int signs = 0; signs < 8; ++signs) {
        Clause c;
        for (int j = 0; j < 3; ++j) {
            c.literals[j] = ((signs >> j) & 1) != 0 ? -(j + 1) : (j + 1);
        }
        for (std::uint32_t m = 0; m < 8; ++m) {
            const auto a = bits(m, 3);
            CHECK(poly_evaluate(clause_to_poly(c), a) == (clause_true(c, a) ? 1 : 0));
            CHECK(poly_evaluate(clause_penalty(c, 7), a) == (clause_true(c, a) ? 0 : 7));
        }
    }
    CHECK(poly_evaluate(clause_penalty(Clause{{1, -2, -3}}, 7), bits(0b110, 3)) == 7);
    CHECK(clause_penalty(Clause{{1, -2, -3}}, 7) == MultilinearPoly::constant(7) - 7 * clause_to_poly(Clause{{1, -2, -3}}));
}

TEST_CASE("quadratize identities", "[reductions]") {
    const auto neg = quadratize(poly({{{1, 2, 3}, -1}}));
    REQUIRE(neg.aux.size() == 1);
    const VarId w = neg.aux[0];
    CHECK(w == 4);
    CHECK(neg.poly == poly({{{w, 1}, -1}, {{w, 2}, -1}, {{w, 3}, -1}, {{w}, 2}}));

    const auto pos = quadratize(poly({{{1, 2, 3}, 1}}));
    CHECK(pos.poly == poly({{{w, 1}, 1},
                            {{w, 2}, 1},
                            {{w, 3}, 1},
                            {{w}, -1},
                            {{1}, -1},
                            {{2}, -1},
                            {{3}, -1},
                            {{}, 1},
                            {{1, 2}, 1},
                            {{1, 3}, 1},
                            {{2, 3}, 1}}));

    Rng rng(2024);
    for (int rep = 0; rep < 100; ++rep) {
        const auto n = static_cast<std::size_t>(rng.uniform(3, 5));
        const MultilinearPoly p = gen::random_cubic_poly(rng, n, 6);
        const auto q = quadratize(p, n + 1);
        CHECK(q.poly.degree() <= 2);
        for (std::uint32_t m = 0; m < (1U << n); ++m) {
            CHECK(min_over_aux(q.poly, bits(m, n), q.aux) == poly_evaluate(p, bits(m, n)));
        }
    }
    CHECK_THROWS_AS(quadratize(poly({{{1, 2, 3}, 1}}), 2), PreconditionError);
}

TEST_CASE("quadratized clause penalties are non-negative", "[reductions]") {
    for (int signs = 0; signs < 8; ++signs) {
        Clause c;
        for (int j = 0; j < 3; ++j) {
            c.literals[j] = ((signs >> j) & 1) != 0 ? -(j + 1) : (j + 1);
        }
        const auto q = quadratize(clause_penalty(c, 5), 4);
        for (std::uint32_t m = 0; m < 16; ++m) {
            CHECK(poly_evaluate(q.poly, bits(m, 4)) >= 0);
        }
    }
}

TEST_CASE("w3sat_to_qpbo", "[reductions]") {
    const W3SatTriv s{3, {Clause{{1, -2, -3}}}, {1, 1, 1}};
    auto [inst, trace] = w3sat_to_qpbo(s);
    CHECK(inst.size() == 4);
    CHECK(inst.uniform_labels(2));
    CHECK(trace.big_m == 3);
    CHECK(trace.original_nodes == std::vector<NodeId>{1, 2, 3});
    CHECK(trace.aux_nodes == std::vector<NodeId>{4});
    CHECK(trace_partitions(trace, inst));

    // satisfiable: optima agree
    CHECK(solve_brute_force(inst).value == ExtendedCost(w3sat_brute_force(s).first));

    // unsatisfiable: all 8 sign patterns over x1..x3
    W3SatTriv unsat{3, {}, {1, 1, 1}};
    for (int signs = 0; signs < 8; ++signs) {
        Clause c;
        for (int j = 0; j < 3; ++j) {
            c.literals[j] = ((signs >> j) & 1) != 0 ? -(j + 1) : (j + 1);
        }
        unsat.clauses.push_back(c);
    }
    auto [u_inst, u_trace] = w3sat_to_qpbo(unsat);
    CHECK(w3sat_brute_force(unsat).first == 3);
    CHECK(solve_brute_force(u_inst).value >= ExtendedCost(u_trace.big_m));

    CHECK_THROWS_AS(w3sat_to_qpbo(W3SatTriv{3, {}, {1, -1, 1}}), PreconditionError);
    CHECK_THROWS_AS(w3sat_to_qpbo(W3SatTriv{3, {Clause{{1, 2, 4}}}, {1, 1, 1}}), PreconditionError);
}

TEST_CASE("w3sat_sigma", "[reductions]") {
    Rng rng(9);
    for (int rep = 0; rep < 30; ++rep) {
        const W3SatTriv s = gen::random_w3sat(rng, 5, 3);
        auto [inst, trace] = w3sat_to_qpbo(s);
        for_each_labeling(inst, kDefaultBruteForceLimit, [&](const Labeling& y, ExtendedCost e) {
            const TruthAssignment tau = w3sat_sigma(s, trace, inst, y);
            CHECK(is_feasible(s, tau));
            CHECK(measure(s, tau) <= e.value());
            if (e < ExtendedCost(trace.big_m)) {
                CHECK(satisfies(s, tau));
            } else {
                CHECK(tau == TruthAssignment(s.num_vars, true));
            }
        });
    }
    const W3SatTriv s{3, {Clause{{1, -2, -3}}}, {1, 1, 1}};
    auto [inst, trace] = w3sat_to_qpbo(s);
    CHECK(w3sat_sigma(s, trace, Labeling({0, 1, 1, 0})) == TruthAssignment{true, true, true});
    ReductionTrace wrong = trace;
    wrong.big_m = 99;
    CHECK_THROWS_AS(w3sat_sigma(s, wrong, Labeling({0, 0, 0, 0})), MismatchError);
}

TEST_CASE("qpbo_to_klabel", "[reductions]") {
    EnergyInstance one;
    one.add_node(0, {0, 5});
    auto [k3, trace] = qpbo_to_klabel(one, 3);
    CHECK(k3.unary(0) == std::vector<ExtendedCost>{0, 5, 6});
    CHECK(trace.big_m == 6);
    auto [k2, trace2] = qpbo_to_klabel(one, 2);
    CHECK(k2 == one);

    EnergyInstance three;
    three.add_node(0, {0, 0, 0});
    CHECK_THROWS_AS(qpbo_to_klabel(three, 3), PreconditionError);

    Rng rng(77);
    for (int rep = 0; rep < 30; ++rep) {
        const EnergyInstance src = gen::random_instance(rng, static_cast<std::size_t>(rng.uniform(1, 6)), 2, {0, 9});
        auto [tgt, tr] = qpbo_to_klabel(src, 3);
        CHECK(solve_brute_force(src).value == solve_brute_force(tgt).value);
    }

    // sigma: original labels pass through, padded labels fall back to zeros
    EnergyInstance two;
    two.add_node(0, {0, 2});
    two.add_node(1, {1, 0});
    two.add_edge(0, 1, CostTable{{0, 3}, {3, 0}});
    auto [t2, tr2] = qpbo_to_klabel(two, 3);
    CHECK(klabel_sigma(two, tr2, Labeling({1, 0})) == Labeling({1, 0}));
    CHECK(klabel_sigma(two, tr2, Labeling({2, 1})) == Labeling({0, 0}));
}

TEST_CASE("AP harness", "[reductions]") {
    const auto all = gen::all_single_clause_formulas();
    CHECK(all.size() == 216);
    const ApReport rep = verify_ap_reduction(w3sat_reduction(), Rational(1), all);
    CHECK(rep.ok());
    CHECK(rep.instances.size() == 216);

    Rng rng(4);
    std::vector<EnergyInstance> insts;
    for (int i = 0; i < 10; ++i) {
        insts.push_back(gen::random_instance(rng, 4, 2, {1, 9}));
    }
    CHECK(verify_ap_reduction(identity_reduction(), Rational(1), insts).ok());
    CHECK(verify_ap_reduction(klabel_reduction(3), Rational(1), insts).ok());

    // sigma without the M branch returns unsatisfying restrictions
    auto broken = w3sat_reduction();
    broken.sigma = [](const W3SatTriv& s, const ReductionTrace& t, const EnergyInstance& target, const Labeling& y) {
        TruthAssignment tau(s.num_vars);
        for (std::size_t i = 0; i < s.num_vars; ++i) {
            tau[i] = y[target.index_of(t.original_nodes[i])] == 1;
        }
        return tau;
    };
    const W3SatTriv unsat_corner{3, {Clause{{1, 2, 3}}}, {1, 1, 1}};
    const ApReport bad = verify_ap_reduction(broken, Rational(1), std::vector<W3SatTriv>{unsat_corner});
    REQUIRE_FALSE(bad.ok());
    CHECK(bad.counterexamples.front().check == "sigma-feasible");

    // zero optimum is flagged rather than checked
    const W3SatTriv zero{3, {Clause{{-1, -2, -3}}}, {0, 0, 0}};
    const ApReport z = verify_ap_reduction(w3sat_reduction(), Rational(1), std::vector<W3SatTriv>{zero});
    CHECK(z.ok());
    CHECK(z.ratio_undefined_count() == 1);
}

TEST_CASE("replace_crossing and planarize", "[reductions]") {
    EnergyInstance x;
    for (NodeId i = 1; i <= 4; ++i) {
        x.add_node(i, {ExtendedCost(static_cast<std::int64_t>(i)), 0, 2});
    }
    x.add_edge(1, 3, CostTable{{0, 3, 1}, {2, 0, 5}, {1, 1, 0}});
    x.add_edge(2, 4, CostTable{{1, 0, 2}, {0, 4, 1}, {3, 0, 0}});
    const Drawing d{{1, Point{0, 0}}, {2, Point{1, 0}}, {3, Point{1, 1}}, {4, Point{0, 1}}};

    const PlanarizeResult r = planarize(x, d);
    CHECK(list_crossings(r.instance, r.drawing).empty());
    CHECK(validate_general_position(r.instance, r.drawing).ok());
    CHECK(r.instance.size() == 4 + kAuxNodesPerCrossing);
    CHECK(r.trace.crossings.size() == 1);
    CHECK(r.trace.aux_nodes.size() == kAuxNodesPerCrossing);
    CHECK(trace_partitions(r.trace, r.instance));
    CHECK(solve_elimination(r.instance).value == solve_brute_force(x).value);

    const SolveResult best = solve_elimination(r.instance);
    const Labeling restricted = planar_sigma(x, d, r.trace, best.labeling);
    CHECK(evaluate(x, restricted) == solve_brute_force(x).value);

    // every placed node stays inside the free disk
    const CrossingRecord& rec = r.trace.crossings.front();
    for (NodeId id : rec.aux_nodes) {
        const Point off = r.drawing.at(id) - rec.crossing.point;
        CHECK(geom::squared_norm(off) < rec.radius * rec.radius);
    }

    // planar input is returned unchanged
    EnergyInstance path;
    for (NodeId i = 0; i < 3; ++i) {
        path.add_node(i, {0, 1, 2});
    }
    path.add_edge(0, 1, CostTable(3, 3));
    const Drawing line{{0, Point{0, 0}}, {1, Point{1, 0}}, {2, Point{2, 1}}};
    const PlanarizeResult same = planarize(path, line);
    CHECK(same.instance == path);
    CHECK(same.trace.aux_nodes.empty());

    // two disjoint X's
    EnergyInstance xx;
    for (NodeId i = 0; i < 8; ++i) {
        xx.add_node(i, {ExtendedCost(static_cast<std::int64_t>(i % 3)), 1, 0});
    }
    xx.add_edge(0, 2, CostTable{{0, 1, 2}, {1, 0, 1}, {2, 1, 0}});
    xx.add_edge(1, 3, CostTable{{2, 0, 1}, {0, 2, 0}, {1, 1, 1}});
    xx.add_edge(4, 6, CostTable{{0, 2, 2}, {2, 0, 2}, {2, 2, 0}});
    xx.add_edge(5, 7, CostTable{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    Drawing dd;
    for (NodeId i = 0; i < 4; ++i) {
        const Point corner = i == 0 ? Point{0, 0} : i == 1 ? Point{2, 0} : i == 2 ? Point{2, 2} : Point{0, 2};
        dd[i] = corner;
        dd[i + 4] = corner + Point{10, 0};
    }
    const PlanarizeResult r2 = planarize(xx, dd);
    CHECK(list_crossings(r2.instance, r2.drawing).empty());
    CHECK(r2.trace.aux_nodes.size() == 2 * kAuxNodesPerCrossing);
    CHECK(solve_elimination(r2.instance).value == solve_brute_force(xx).value);

    // preconditions
    EnergyInstance binary;
    binary.add_node(0, {0, 1});
    CHECK_THROWS_AS(planarize(binary, Drawing{{0, Point{0, 0}}}), PreconditionError);
    EnergyInstance conc;
    for (NodeId i = 0; i < 6; ++i) {
        conc.add_node(i, {0, 0, 0});
    }
    conc.add_edge(0, 3, CostTable(3, 3));
    conc.add_edge(1, 4, CostTable(3, 3));
    conc.add_edge(2, 5, CostTable(3, 3));
    const Drawing hex{{0, Point{2, 0}}, {1, Point{1, 2}}, {2, Point{-1, 2}}, {3, Point{-2, 0}}, {4, Point{-1, -2}}, {5, Point{1, -2}}};
    CHECK_THROWS_AS(planarize(conc, hex), GeneralPositionError);
}

TEST_CASE("planarize preserves finite labelings on originals", "[reductions]") {
    Rng rng(31);
    for (int rep = 0; rep < 5; ++rep) {
        InstanceFile f = gen::random_crossing_instance(rng, 5, 1, 1);
        const PlanarizeResult r = planarize(f.instance, *f.drawing);
        CHECK(list_crossings(r.instance, r.drawing).empty());
        CHECK(r.instance.size() == f.instance.size() + kAuxNodesPerCrossing);
        // fixing the originals, the min over the auxiliaries equals the source energy
        for_each_labeling(f.instance, kDefaultBruteForceLimit, [&](const Labeling& x, ExtendedCost e) {
            EnergyInstance pinned = r.instance;
            for (std::size_t i = 0; i < f.instance.size(); ++i) {
                auto& u = pinned.unary(pinned.index_of(f.instance.node_id(i)));
                for (std::size_t l = 0; l < u.size(); ++l) {
                    if (l != x[i]) {
                        u[l] = kInfinity;
                    }
                }
            }
            CHECK(solve_elimination(pinned).value == e);
        });
    }
}
