#ifndef MINE_W3SAT_HPP
#define MINE_W3SAT_HPP

#include <array>
#include <cstdint>
#include <cstdlib>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mine/energy.hpp"
#include "mine/error.hpp"
#include "mine/poly.hpp"
#include "mine/trace.hpp"

namespace mine {

/// Signed 1-based variable index: +i is x_i, -i is its negation.
using Literal = std::int64_t;

struct Clause {
    std::array<Literal, 3> literals{};

    friend bool operator==(const Clause&, const Clause&) = default;
};

/// Weighted 3-CNF whose feasible solutions are the satisfying assignments plus
/// the all-true assignment; the measure is the total weight of true variables.
struct W3SatTriv {
    std::size_t num_vars = 0;
    std::vector<Clause> clauses;
    std::vector<std::int64_t> weights;

    friend bool operator==(const W3SatTriv&, const W3SatTriv&) = default;
};

/// Truth value of x_{i+1} at index i.
using TruthAssignment = std::vector<bool>;

inline VarId literal_var(Literal l) { return static_cast<VarId>(l < 0 ? -l : l); }

inline void validate_clause(const Clause& c, std::size_t num_vars) {
    std::set<VarId> vars;
    for (Literal l : c.literals) {
        if (l == 0 || literal_var(l) > num_vars) {
            throw PreconditionError("clause literal " + std::to_string(l) + " out of range");
        }
        vars.insert(literal_var(l));
    }
    if (vars.size() != 3) {
        throw PreconditionError("clause must mention exactly 3 distinct variables");
    }
}

inline void validate(const W3SatTriv& s) {
    if (s.weights.size() != s.num_vars) {
        throw PreconditionError("expected " + std::to_string(s.num_vars) + " weights, got " +
                                std::to_string(s.weights.size()));
    }
    for (std::int64_t w : s.weights) {
        if (w < 0) {
            throw PreconditionError("weights must be non-negative");
        }
    }
    for (const Clause& c : s.clauses) {
        validate_clause(c, s.num_vars);
    }
}

inline bool literal_true(Literal l, const TruthAssignment& tau) {
    const bool v = tau.at(literal_var(l) - 1);
    return l > 0 ? v : !v;
}

inline bool satisfies(const W3SatTriv& s, const TruthAssignment& tau) {
    for (const Clause& c : s.clauses) {
        if (!literal_true(c.literals[0], tau) && !literal_true(c.literals[1], tau) && !literal_true(c.literals[2], tau)) {
            return false;
        }
    }
    return true;
}

inline bool is_feasible(const W3SatTriv& s, const TruthAssignment& tau) {
    if (tau.size() != s.num_vars) {
        return false;
    }
    if (satisfies(s, tau)) {
        return true;
    }
    for (bool b : tau) {
        if (!b) {
            return false;
        }
    }
    return true;
}

inline std::int64_t measure(const W3SatTriv& s, const TruthAssignment& tau) {
    std::int64_t total = 0;
    for (std::size_t i = 0; i < s.num_vars; ++i) {
        if (tau.at(i)) {
            total = detail::checked_add(total, s.weights[i]);
        }
    }
    return total;
}

/// Sum of all weights: the measure of the all-true fallback, an upper bound on the optimum.
inline std::int64_t w3sat_bound(const W3SatTriv& s) {
    std::int64_t m = 0;
    for (std::int64_t w : s.weights) {
        m = detail::checked_add(m, w);
    }
    return m;
}

/// Optimum and one optimal assignment by enumerating all 2^n assignments
/// (smallest in lexicographic order on ties).
inline std::pair<std::int64_t, TruthAssignment> w3sat_brute_force(const W3SatTriv& s) {
    if (s.num_vars > 24) {
        throw BoundExceededError("w3sat_brute_force supports at most 24 variables");
    }
    TruthAssignment all_true(s.num_vars, true);
    std::pair<std::int64_t, TruthAssignment> best{measure(s, all_true), all_true};
    const std::uint64_t total = std::uint64_t{1} << s.num_vars;
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        TruthAssignment tau(s.num_vars);
        for (std::size_t i = 0; i < s.num_vars; ++i) {
            tau[i] = ((bits >> (s.num_vars - 1 - i)) & 1U) != 0;
        }
        if (satisfies(s, tau)) {
            const std::int64_t m = measure(s, tau);
            if (m < best.first) {
                best = {m, std::move(tau)};
            }
        }
    }
    return best;
}

namespace detail {

// Product of linear factors (c0 + c1 x_v) over distinct variables.
inline MultilinearPoly product_of_linear(const std::vector<std::pair<std::pair<std::int64_t, std::int64_t>, VarId>>& factors) {
    MultilinearPoly acc = MultilinearPoly::constant(1);
    for (const auto& [coef, v] : factors) {
        MultilinearPoly next;
        for (const auto& [m, c] : acc.terms()) {
            next.add_term(m, checked_mul(c, coef.first));
            Monomial with = m;
            with.push_back(v);
            next.add_term(std::move(with), checked_mul(c, coef.second));
        }
        acc = std::move(next);
    }
    return acc;
}

// prod over literals of (1 - literal): 1 - x for positive, x for negative.
inline MultilinearPoly falsity_product(const Clause& clause) {
    std::vector<std::pair<std::pair<std::int64_t, std::int64_t>, VarId>> factors;
    for (Literal l : clause.literals) {
        factors.push_back({l > 0 ? std::pair<std::int64_t, std::int64_t>{1, -1} : std::pair<std::int64_t, std::int64_t>{0, 1},
                           literal_var(l)});
    }
    return product_of_linear(factors);
}

} // namespace detail

/// The clause's truth value as the multilinear polynomial
/// 1 - prod(1 - literal); equals 1 exactly on satisfying assignments.
inline MultilinearPoly clause_to_poly(const Clause& clause) {
    std::set<VarId> vars;
    for (Literal l : clause.literals) {
        if (l == 0) {
            throw PreconditionError("clause literal 0");
        }
        vars.insert(literal_var(l));
    }
    if (vars.size() != 3) {
        throw PreconditionError("clause must mention exactly 3 distinct variables");
    }
    return MultilinearPoly::constant(1) - detail::falsity_product(clause);
}

/// M * (1 - C): M when the clause is false, 0 when it is true.
inline MultilinearPoly clause_penalty(const Clause& clause, std::int64_t m) {
    return MultilinearPoly::constant(m) - m * clause_to_poly(clause);
}

struct Quadratization {
    MultilinearPoly poly;
    std::vector<VarId> aux;
};

/// Replaces every cubic monomial a*x_i*x_j*x_k by a quadratic form in one fresh
/// variable x_w (ids first_aux, first_aux+1, ... in monomial order):
///   a < 0:  -|a| x_w (x_i + x_j + x_k - 2)
///   a > 0:   |a| ((x_w - 1)(x_i + x_j + x_k - 1) + x_i x_j + x_i x_k + x_j x_k)
/// Minimizing over the fresh variables recovers the cubic value exactly.
inline Quadratization quadratize(const MultilinearPoly& p, VarId first_aux) {
    if (p.degree() > 3) {
        throw PreconditionError("quadratize: degree exceeds 3");
    }
    for (VarId v : p.variables()) {
        if (v >= first_aux) {
            throw PreconditionError("quadratize: auxiliary ids collide with polynomial variables");
        }
    }
    Quadratization out;
    VarId next = first_aux;
    for (const auto& [m, a] : p.terms()) {
        if (m.size() < 3) {
            out.poly.add_term(m, a);
            continue;
        }
        const VarId w = next++;
        out.aux.push_back(w);
        const VarId i = m[0];
        const VarId j = m[1];
        const VarId k = m[2];
        MultilinearPoly q;
        if (a < 0) {
            q.add_term({w, i}, -1).add_term({w, j}, -1).add_term({w, k}, -1).add_term({w}, 2);
        } else {
            q.add_term({w, i}, 1).add_term({w, j}, 1).add_term({w, k}, 1).add_term({w}, -1);
            q.add_term({i}, -1).add_term({j}, -1).add_term({k}, -1).add_term({}, 1);
            q.add_term({i, j}, 1).add_term({i, k}, 1).add_term({j, k}, 1);
        }
        out.poly += detail::checked_abs(a) * q;
    }
    return out;
}

/// Quadratization with fresh ids starting right after the largest variable.
inline Quadratization quadratize(const MultilinearPoly& p) {
    const auto vars = p.variables();
    return quadratize(p, vars.empty() ? 1 : *vars.rbegin() + 1);
}

/// QPBO instance for a W3SAT-triv formula: unary w_i x_i for every variable
/// plus, per clause, the quadratized penalty M (1 - C) with M = sum of weights.
/// Variables keep their ids 1..n; clause c gets the auxiliary node n + 1 + c.
inline std::pair<EnergyInstance, ReductionTrace> w3sat_to_qpbo(const W3SatTriv& s) {
    validate(s);
    const std::int64_t m = w3sat_bound(s);

    MultilinearPoly objective;
    std::set<VarId> vars;
    for (std::size_t i = 0; i < s.num_vars; ++i) {
        objective.add_term({static_cast<VarId>(i + 1)}, s.weights[i]);
        vars.insert(i + 1);
    }
    ReductionTrace trace;
    trace.kind = ReductionKind::W3satToQpbo;
    trace.big_m = m;
    for (std::size_t i = 0; i < s.num_vars; ++i) {
        trace.original_nodes.push_back(i + 1);
    }
    VarId next = s.num_vars + 1;
    for (const Clause& c : s.clauses) {
        const VarId aux = next++;
        objective += quadratize(clause_penalty(c, m), aux).poly;
        vars.insert(aux);
        trace.aux_nodes.push_back(aux);
    }
    trace.next_id = next;
    return {quadratic_poly_to_instance(objective, vars), std::move(trace)};
}

/// Reverse map: the restriction of y to x_1..x_n when its energy is below M,
/// the all-true assignment otherwise.
inline TruthAssignment w3sat_sigma(const W3SatTriv& s, const ReductionTrace& trace, const EnergyInstance& target,
                                   const Labeling& y) {
    if (trace.kind != ReductionKind::W3satToQpbo || trace.original_nodes.size() != s.num_vars) {
        throw MismatchError("trace does not belong to a w3sat-to-qpbo reduction of this formula");
    }
    const ExtendedCost energy = evaluate(target, y);
    if (energy >= ExtendedCost(trace.big_m)) {
        return TruthAssignment(s.num_vars, true);
    }
    TruthAssignment tau(s.num_vars);
    for (std::size_t i = 0; i < s.num_vars; ++i) {
        tau[i] = y[target.index_of(trace.original_nodes[i])] == 1;
    }
    return tau;
}

/// Reverse map that rebuilds the target from the formula and checks the trace.
inline TruthAssignment w3sat_sigma(const W3SatTriv& s, const ReductionTrace& trace, const Labeling& y) {
    auto [target, rebuilt] = w3sat_to_qpbo(s);
    if (!(rebuilt == trace)) {
        throw MismatchError("trace does not match the w3sat-to-qpbo reduction of this formula");
    }
    return w3sat_sigma(s, trace, target, y);
}

} // namespace mine

#endif // MINE_W3SAT_HPP
