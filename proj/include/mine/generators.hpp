#ifndef MINE_GENERATORS_HPP
#define MINE_GENERATORS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "mine/energy.hpp"
#include "mine/error.hpp"
#include "mine/geometry.hpp"
#include "mine/io.hpp"
#include "mine/poly.hpp"
#include "mine/w3sat.hpp"

namespace mine {

/// Seeded source of integers that gives the same stream on every platform
/// (std::uniform_int_distribution is implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        if (lo > hi) {
            throw PreconditionError("Rng::uniform: empty range");
        }
        const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
        if (span == ~std::uint64_t{0}) {
            return static_cast<std::int64_t>(engine_());
        }
        const std::uint64_t range = span + 1;
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % range) - 1;
        std::uint64_t draw = engine_();
        while (draw > limit) {
            draw = engine_();
        }
        return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + draw % range);
    }

    std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(n) - 1)); }

    /// True with probability num / den.
    bool chance(std::int64_t num, std::int64_t den) { return uniform(0, den - 1) < num; }

private:
    std::mt19937_64 engine_;
};

namespace gen {

inline W3SatTriv random_w3sat(Rng& rng, std::size_t max_vars = 6, std::size_t max_clauses = 4, std::int64_t max_weight = 2) {
    W3SatTriv s;
    s.num_vars = static_cast<std::size_t>(rng.uniform(3, static_cast<std::int64_t>(max_vars)));
    for (std::size_t i = 0; i < s.num_vars; ++i) {
        s.weights.push_back(rng.uniform(0, max_weight));
    }
    const auto m = rng.uniform(1, static_cast<std::int64_t>(max_clauses));
    for (std::int64_t c = 0; c < m; ++c) {
        std::vector<Literal> vars;
        while (vars.size() < 3) {
            const auto v = rng.uniform(1, static_cast<std::int64_t>(s.num_vars));
            if (std::find(vars.begin(), vars.end(), v) == vars.end()) {
                vars.push_back(v);
            }
        }
        Clause clause;
        for (std::size_t j = 0; j < 3; ++j) {
            clause.literals[j] = rng.chance(1, 2) ? vars[j] : -vars[j];
        }
        s.clauses.push_back(clause);
    }
    return s;
}

/// Every formula over x1, x2, x3 with one clause (8 sign patterns) and
/// weights in {0, .., max_weight}^3.
inline std::vector<W3SatTriv> all_single_clause_formulas(std::int64_t max_weight = 2) {
    std::vector<W3SatTriv> out;
    for (int signs = 0; signs < 8; ++signs) {
        Clause c;
        for (int j = 0; j < 3; ++j) {
            c.literals[j] = ((signs >> j) & 1) != 0 ? -(j + 1) : (j + 1);
        }
        for (std::int64_t w1 = 0; w1 <= max_weight; ++w1) {
            for (std::int64_t w2 = 0; w2 <= max_weight; ++w2) {
                for (std::int64_t w3 = 0; w3 <= max_weight; ++w3) {
                    out.push_back(W3SatTriv{3, {c}, {w1, w2, w3}});
                }
            }
        }
    }
    return out;
}

/// Random multilinear polynomial of degree <= 3 over x1..x_nvars.
inline MultilinearPoly random_cubic_poly(Rng& rng, std::size_t nvars, std::size_t terms, std::int64_t max_coef = 9) {
    MultilinearPoly p;
    for (std::size_t t = 0; t < terms; ++t) {
        const auto degree = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(std::min<std::size_t>(3, nvars))));
        Monomial m;
        while (m.size() < degree) {
            const auto v = static_cast<VarId>(rng.uniform(1, static_cast<std::int64_t>(nvars)));
            if (std::find(m.begin(), m.end(), v) == m.end()) {
                m.push_back(v);
            }
        }
        p.add_term(std::move(m), rng.uniform(-max_coef, max_coef));
    }
    return p;
}

struct CostRange {
    std::int64_t lo = 0;
    std::int64_t hi = 9;
    /// Probability num/den of a +inf entry.
    std::int64_t inf_num = 0;
    std::int64_t inf_den = 1;
};

inline ExtendedCost random_cost(Rng& rng, const CostRange& r) {
    if (r.inf_num > 0 && rng.chance(r.inf_num, r.inf_den)) {
        return kInfinity;
    }
    return ExtendedCost(rng.uniform(r.lo, r.hi));
}

inline std::vector<ExtendedCost> random_unary(Rng& rng, std::size_t k, const CostRange& r) {
    std::vector<ExtendedCost> u(k);
    bool finite = false;
    for (auto& c : u) {
        c = random_cost(rng, r);
        finite = finite || c.is_finite();
    }
    if (!finite) {
        u[rng.index(k)] = ExtendedCost(rng.uniform(r.lo, r.hi));
    }
    return u;
}

inline CostTable random_table(Rng& rng, std::size_t rows, std::size_t cols, const CostRange& r) {
    CostTable t(rows, cols);
    for (auto& c : t.data()) {
        c = random_cost(rng, r);
    }
    return t;
}

/// Each of the n(n-1)/2 pairs becomes an edge with probability num/den.
inline std::vector<std::pair<std::size_t, std::size_t>> random_graph(Rng& rng, std::size_t n, std::int64_t num, std::int64_t den) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            if (rng.chance(num, den)) {
                edges.emplace_back(a, b);
            }
        }
    }
    return edges;
}

/// General instance with uniform k, ids 0..n-1 and edge density num/den.
inline EnergyInstance random_instance(Rng& rng, std::size_t n, std::size_t k, const CostRange& r = {}, std::int64_t num = 1,
                                      std::int64_t den = 2) {
    EnergyInstance inst;
    for (std::size_t i = 0; i < n; ++i) {
        inst.add_node(i, random_unary(rng, k, r));
    }
    for (const auto& [a, b] : random_graph(rng, n, num, den)) {
        inst.add_edge(a, b, random_table(rng, k, k, r));
    }
    return inst;
}

/// Random forest: node i > 0 attaches to an earlier node with probability 4/5.
inline EnergyInstance random_forest(Rng& rng, std::size_t n, std::size_t k, const CostRange& r = {}) {
    EnergyInstance inst;
    for (std::size_t i = 0; i < n; ++i) {
        inst.add_node(i, random_unary(rng, k, r));
    }
    for (std::size_t i = 1; i < n; ++i) {
        if (rng.chance(4, 5)) {
            inst.add_edge(rng.index(i), i, random_table(rng, k, k, r));
        }
    }
    return inst;
}

/// Binary instance whose every edge satisfies f01 + f10 >= f00 + f11.
inline EnergyInstance random_submodular(Rng& rng, std::size_t n, std::int64_t num = 1, std::int64_t den = 2) {
    EnergyInstance inst;
    for (std::size_t i = 0; i < n; ++i) {
        inst.add_node(i, {rng.uniform(-5, 5), rng.uniform(-5, 5)});
    }
    for (const auto& [a, b] : random_graph(rng, n, num, den)) {
        const auto f00 = rng.uniform(-5, 5);
        const auto f11 = rng.uniform(-5, 5);
        const auto f01 = rng.uniform(-5, 5);
        const auto f10 = f00 + f11 - f01 + rng.uniform(0, 6);
        inst.add_edge(a, b, CostTable{{f00, f01}, {f10, f11}});
    }
    return inst;
}

inline EnergyInstance random_potts(Rng& rng, std::size_t n, std::size_t k, std::int64_t num = 1, std::int64_t den = 2) {
    EnergyInstance inst;
    for (std::size_t i = 0; i < n; ++i) {
        inst.add_node(i, random_unary(rng, k, {0, 9}));
    }
    for (const auto& [a, b] : random_graph(rng, n, num, den)) {
        CostTable t(k, k, ExtendedCost(rng.uniform(0, 5)));
        for (std::size_t l = 0; l < k; ++l) {
            t(l, l) = 0;
        }
        inst.add_edge(a, b, std::move(t));
    }
    return inst;
}

/// Random drawing with rational coordinates (not necessarily in general position).
inline Drawing random_drawing(Rng& rng, const EnergyInstance& inst, std::int64_t max_den = 7) {
    Drawing d;
    for (NodeId id : inst.node_ids()) {
        d.emplace(id, Point{Rational(rng.uniform(-50, 50), rng.uniform(1, max_den)),
                            Rational(rng.uniform(-50, 50), rng.uniform(1, max_den))});
    }
    return d;
}

/// 3-label instance on 4..max_nodes nodes drawn on an integer grid in
/// general position with between min_cross and max_cross crossings.
inline InstanceFile random_crossing_instance(Rng& rng, std::size_t max_nodes = 6, std::size_t min_cross = 1,
                                             std::size_t max_cross = 3) {
    for (int attempt = 0; attempt < 10000; ++attempt) {
        const auto n = static_cast<std::size_t>(rng.uniform(4, static_cast<std::int64_t>(max_nodes)));
        EnergyInstance inst = random_instance(rng, n, 3, {0, 9}, 1, 2);
        Drawing d;
        for (std::size_t i = 0; i < n; ++i) {
            d.emplace(i, Point{rng.uniform(0, 12), rng.uniform(0, 12)});
        }
        std::set<Point> distinct;
        for (const auto& [id, p] : d) {
            distinct.insert(p);
        }
        if (distinct.size() != n || !validate_general_position(inst, d).ok()) {
            continue;
        }
        const std::size_t c = list_crossings(inst, d).size();
        if (c >= min_cross && c <= max_cross) {
            return {std::move(inst), std::move(d)};
        }
    }
    throw Error("random_crossing_instance: no admissible drawing found");
}

inline const std::vector<std::string>& families() {
    static const std::vector<std::string> names{"w3sat", "potts", "submodular", "random3label"};
    return names;
}

/// File text for one member of a named family: wcnf3 for "w3sat", the
/// instance grammar otherwise.
inline std::string generate_family(const std::string& family, std::uint64_t seed) {
    Rng rng(seed);
    if (family == "w3sat") {
        return serialize_wcnf3(random_w3sat(rng, 3, 1));
    }
    if (family == "potts") {
        return serialize_instance(random_potts(rng, static_cast<std::size_t>(rng.uniform(2, 8)), 3));
    }
    if (family == "submodular") {
        return serialize_instance(random_submodular(rng, static_cast<std::size_t>(rng.uniform(2, 10))));
    }
    if (family == "random3label") {
        return serialize_instance(random_crossing_instance(rng));
    }
    throw PreconditionError("unknown family '" + family + "'");
}

} // namespace gen

} // namespace mine

#endif // MINE_GENERATORS_HPP
