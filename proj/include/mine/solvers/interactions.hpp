#ifndef MINE_SOLVERS_INTERACTIONS_HPP
#define MINE_SOLVERS_INTERACTIONS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "mine/energy.hpp"
#include "mine/error.hpp"

namespace mine {

namespace detail {

inline void require_finite(const EnergyInstance& instance, const char* who) {
    if (!instance.all_finite()) {
        throw PreconditionError(std::string(who) + ": instance has +inf entries");
    }
}

inline void require_binary(const EnergyInstance& instance, const char* who) {
    if (!instance.uniform_labels(2)) {
        throw PreconditionError(std::string(who) + ": every node must have exactly 2 labels");
    }
}

inline std::int64_t v(const CostTable& t, std::size_t a, std::size_t b) { return t(a, b).value(); }

inline std::int64_t add(std::int64_t a, std::int64_t b) { return checked_add(a, b); }

} // namespace detail

/// f(0,1) + f(1,0) >= f(0,0) + f(1,1) on every edge of a binary instance.
inline bool is_submodular_binary(const EnergyInstance& instance) {
    detail::require_binary(instance, "is_submodular_binary");
    detail::require_finite(instance, "is_submodular_binary");
    for (const auto& [key, t] : instance.edges()) {
        using detail::v;
        if (detail::add(v(t, 0, 1), v(t, 1, 0)) < detail::add(v(t, 0, 0), v(t, 1, 1))) {
            return false;
        }
    }
    return true;
}

/// f(i,j+1) + f(i+1,j) >= f(i,j) + f(i+1,j+1) for all adjacent index pairs
/// under the natural label order.
inline bool is_submodular_lattice(const EnergyInstance& instance) {
    detail::require_finite(instance, "is_submodular_lattice");
    for (const auto& [key, t] : instance.edges()) {
        using detail::v;
        for (std::size_t i = 0; i + 1 < t.rows(); ++i) {
            for (std::size_t j = 0; j + 1 < t.cols(); ++j) {
                if (detail::add(v(t, i, j + 1), v(t, i + 1, j)) < detail::add(v(t, i, j), v(t, i + 1, j + 1))) {
                    return false;
                }
            }
        }
    }
    return true;
}

namespace detail {

inline void require_uniform(const EnergyInstance& instance, const char* who) {
    require_finite(instance, who);
    if (instance.size() > 0 && !instance.uniform_label_count()) {
        throw PreconditionError(std::string(who) + ": label counts differ between nodes");
    }
}

} // namespace detail

/// Every edge is zero on the diagonal and one constant c >= 0 off it.
inline bool is_potts(const EnergyInstance& instance) {
    detail::require_uniform(instance, "is_potts");
    for (const auto& [key, t] : instance.edges()) {
        std::optional<std::int64_t> off;
        for (std::size_t a = 0; a < t.rows(); ++a) {
            for (std::size_t b = 0; b < t.cols(); ++b) {
                const std::int64_t c = t(a, b).value();
                if (a == b) {
                    if (c != 0) {
                        return false;
                    }
                } else if (c < 0 || (off && *off != c)) {
                    return false;
                } else {
                    off = c;
                }
            }
        }
    }
    return true;
}

/// Zero diagonal, symmetry, non-negativity and the triangle inequality
/// f(a,c) <= f(a,b) + f(b,c) on every edge.
inline bool is_metric(const EnergyInstance& instance) {
    detail::require_uniform(instance, "is_metric");
    for (const auto& [key, t] : instance.edges()) {
        using detail::v;
        const std::size_t k = t.rows();
        for (std::size_t a = 0; a < k; ++a) {
            if (v(t, a, a) != 0) {
                return false;
            }
            for (std::size_t b = 0; b < k; ++b) {
                if (v(t, a, b) != v(t, b, a) || v(t, a, b) < 0) {
                    return false;
                }
                for (std::size_t c = 0; c < k; ++c) {
                    if (v(t, a, c) > detail::add(v(t, a, b), v(t, b, c))) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

} // namespace mine

#endif // MINE_SOLVERS_INTERACTIONS_HPP
