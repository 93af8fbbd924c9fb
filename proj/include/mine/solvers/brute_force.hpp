#ifndef MINE_SOLVERS_BRUTE_FORCE_HPP
#define MINE_SOLVERS_BRUTE_FORCE_HPP

#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "mine/energy.hpp"
#include "mine/error.hpp"

namespace mine {

struct SolveResult {
    Labeling labeling;
    ExtendedCost value;
    std::string method;
    bool exact = true;
};

inline constexpr std::uint64_t kDefaultBruteForceLimit = std::uint64_t{1} << 24;

/// Bound from MINE_BRUTE_LIMIT when set to a positive integer, else the default.
inline std::uint64_t brute_force_limit_from_env() {
    if (const char* text = std::getenv("MINE_BRUTE_LIMIT")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(text, &end, 10);
        if (end != text && *end == '\0' && v > 0) {
            return v;
        }
    }
    return kDefaultBruteForceLimit;
}

/// True when the product of label counts is at most `limit`.
inline bool configuration_count_within(const EnergyInstance& instance, std::uint64_t limit, std::uint64_t* count = nullptr) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < instance.size(); ++i) {
        if (__builtin_mul_overflow(total, instance.label_count(i), &total) || total > limit) {
            return false;
        }
    }
    if (count != nullptr) {
        *count = total;
    }
    return true;
}

/// Visits every labeling in lexicographic order (first node most significant)
/// together with its energy. Throws BoundExceededError above `limit`.
template <class Visitor>
void for_each_labeling(const EnergyInstance& instance, std::uint64_t limit, Visitor&& visit) {
    if (!configuration_count_within(instance, limit)) {
        throw BoundExceededError("configuration space exceeds the enumeration bound of " + std::to_string(limit));
    }
    const std::size_t n = instance.size();
    struct PairTerm {
        std::size_t u, v;
        const CostTable* table;
    };
    std::vector<PairTerm> pairs;
    pairs.reserve(instance.edges().size());
    for (const auto& [key, table] : instance.edges()) {
        pairs.push_back({key.first, key.second, &table});
    }

    Labeling x = Labeling::zeros(n);
    while (true) {
        ExtendedCost e(instance.constant());
        for (std::size_t i = 0; i < n && e.is_finite(); ++i) {
            e += instance.unary(i)[x[i]];
        }
        for (std::size_t p = 0; p < pairs.size() && e.is_finite(); ++p) {
            e += (*pairs[p].table)(x[pairs[p].u], x[pairs[p].v]);
        }
        visit(static_cast<const Labeling&>(x), e);

        std::size_t i = n;
        while (i > 0) {
            --i;
            if (x[i] + 1 < instance.label_count(i)) {
                ++x[i];
                break;
            }
            x[i] = 0;
            if (i == 0) {
                return;
            }
        }
        if (n == 0) {
            return;
        }
    }
}

/// Global minimum by enumeration; ties go to the lexicographically smallest labeling.
inline SolveResult solve_brute_force(const EnergyInstance& instance, std::uint64_t limit = kDefaultBruteForceLimit) {
    SolveResult best{Labeling::zeros(instance.size()), kInfinity, "brute", true};
    bool first = true;
    for_each_labeling(instance, limit, [&](const Labeling& x, ExtendedCost e) {
        if (first || e < best.value) {
            best.labeling = x;
            best.value = e;
            first = false;
        }
    });
    return best;
}

} // namespace mine

#endif // MINE_SOLVERS_BRUTE_FORCE_HPP
