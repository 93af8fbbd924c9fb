#ifndef MINE_POLY_HPP
#define MINE_POLY_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mine/cost.hpp"
#include "mine/energy.hpp"
#include "mine/error.hpp"

namespace mine {

using VarId = std::uint64_t;

/// Sorted set of distinct Boolean variables; the empty monomial is the constant 1.
using Monomial = std::vector<VarId>;

/// Multilinear pseudo-Boolean polynomial of degree <= 3 with integer
/// coefficients. Zero coefficients are never stored, so two polynomials are
/// equal iff they have identical term maps.
class MultilinearPoly {
public:
    static constexpr std::size_t kMaxDegree = 3;

    MultilinearPoly() = default;

    static MultilinearPoly constant(std::int64_t c) {
        MultilinearPoly p;
        p.add_term({}, c);
        return p;
    }

    /// Adds coef * prod(vars). Variables may be given in any order but must be
    /// distinct.
    MultilinearPoly& add_term(Monomial vars, std::int64_t coef) {
        std::sort(vars.begin(), vars.end());
        if (std::adjacent_find(vars.begin(), vars.end()) != vars.end()) {
            throw PreconditionError("monomial repeats a variable");
        }
        if (vars.size() > kMaxDegree) {
            throw PreconditionError("monomial degree exceeds 3");
        }
        if (coef == 0) {
            return *this;
        }
        auto [it, inserted] = terms_.try_emplace(std::move(vars), coef);
        if (!inserted) {
            it->second = detail::checked_add(it->second, coef);
            if (it->second == 0) {
                terms_.erase(it);
            }
        }
        return *this;
    }

    const std::map<Monomial, std::int64_t>& terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }

    std::int64_t coefficient(Monomial vars) const {
        std::sort(vars.begin(), vars.end());
        auto it = terms_.find(vars);
        return it == terms_.end() ? 0 : it->second;
    }

    std::size_t degree() const {
        std::size_t d = 0;
        for (const auto& [m, c] : terms_) {
            d = std::max(d, m.size());
        }
        return d;
    }

    std::set<VarId> variables() const {
        std::set<VarId> vars;
        for (const auto& [m, c] : terms_) {
            vars.insert(m.begin(), m.end());
        }
        return vars;
    }

    MultilinearPoly& operator+=(const MultilinearPoly& other) {
        for (const auto& [m, c] : other.terms_) {
            add_term(m, c);
        }
        return *this;
    }

    friend MultilinearPoly operator+(MultilinearPoly a, const MultilinearPoly& b) { return a += b; }

    friend MultilinearPoly operator*(std::int64_t k, const MultilinearPoly& p) {
        MultilinearPoly out;
        for (const auto& [m, c] : p.terms_) {
            out.add_term(m, detail::checked_mul(k, c));
        }
        return out;
    }

    friend MultilinearPoly operator-(const MultilinearPoly& a, const MultilinearPoly& b) {
        return a + (-1) * b;
    }

    /// Evaluates with a callable mapping a variable id to std::optional<bool>;
    /// nullopt means the variable is unassigned.
    template <class Lookup>
    std::int64_t evaluate_with(Lookup&& lookup) const {
        std::int64_t total = 0;
        for (const auto& [m, c] : terms_) {
            bool on = true;
            for (VarId v : m) {
                std::optional<bool> value = lookup(v);
                if (!value) {
                    throw PreconditionError("assignment misses variable " + std::to_string(v));
                }
                on = on && *value;
            }
            if (on) {
                total = detail::checked_add(total, c);
            }
        }
        return total;
    }

    friend bool operator==(const MultilinearPoly&, const MultilinearPoly&) = default;

    std::string to_string() const {
        if (terms_.empty()) {
            return "0";
        }
        std::string out;
        for (const auto& [m, c] : terms_) {
            if (!out.empty()) {
                out += c < 0 ? " - " : " + ";
            } else if (c < 0) {
                out += "-";
            }
            const std::int64_t mag = c < 0 ? -c : c;
            if (mag != 1 || m.empty()) {
                out += std::to_string(mag);
            }
            for (VarId v : m) {
                out += "x" + std::to_string(v);
            }
        }
        return out;
    }

private:
    std::map<Monomial, std::int64_t> terms_;
};

using BoolAssignment = std::map<VarId, bool>;

/// Sum over monomials of coefficient times the product of assigned values.
inline std::int64_t poly_evaluate(const MultilinearPoly& p, const BoolAssignment& a) {
    return p.evaluate_with([&a](VarId v) -> std::optional<bool> {
        auto it = a.find(v);
        if (it == a.end()) {
            return std::nullopt;
        }
        return it->second;
    });
}

/// One 2-label node per variable of `p` (plus any `extra_vars`); linear
/// coefficients land at unary label 1, quadratic ones at pairwise (1,1), the
/// constant term in the instance constant.
inline EnergyInstance quadratic_poly_to_instance(const MultilinearPoly& p, const std::set<VarId>& extra_vars = {}) {
    if (p.degree() > 2) {
        throw PreconditionError("quadratic_poly_to_instance: polynomial has a cubic monomial");
    }
    std::set<VarId> vars = p.variables();
    vars.insert(extra_vars.begin(), extra_vars.end());

    EnergyInstance instance;
    for (VarId v : vars) {
        instance.add_node(v, {ExtendedCost(0), ExtendedCost(p.coefficient({v}))});
    }
    for (const auto& [m, c] : p.terms()) {
        if (m.size() == 2) {
            CostTable table(2, 2);
            table(1, 1) = c;
            instance.add_edge(m[0], m[1], std::move(table));
        }
    }
    instance.set_constant(p.coefficient({}));
    return instance;
}

} // namespace mine

#endif // MINE_POLY_HPP
