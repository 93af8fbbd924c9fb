#ifndef MINE_COST_HPP
#define MINE_COST_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include "mine/error.hpp"

namespace mine {

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) {
        throw OverflowError("integer overflow in addition");
    }
    return out;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_sub_overflow(a, b, &out)) {
        throw OverflowError("integer overflow in subtraction");
    }
    return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw OverflowError("integer overflow in multiplication");
    }
    return out;
}

inline std::int64_t checked_abs(std::int64_t a) {
    if (a == INT64_MIN) {
        throw OverflowError("integer overflow in absolute value");
    }
    return a < 0 ? -a : a;
}

} // namespace detail

/// A cost that is either a finite signed 64-bit integer or +inf.
///
/// +inf absorbs addition. Finite addition is checked and throws
/// OverflowError instead of wrapping. Every finite value orders below +inf.
class ExtendedCost {
public:
    constexpr ExtendedCost() noexcept = default;
    constexpr ExtendedCost(std::int64_t v) noexcept : value_(v) {} // NOLINT(implicit)

    static constexpr ExtendedCost infinity() noexcept {
        ExtendedCost c;
        c.infinite_ = true;
        return c;
    }

    constexpr bool is_finite() const noexcept { return !infinite_; }
    constexpr bool is_infinite() const noexcept { return infinite_; }

    /// Finite value; throws PreconditionError on +inf.
    std::int64_t value() const {
        if (infinite_) {
            throw PreconditionError("value() called on +inf");
        }
        return value_;
    }

    friend ExtendedCost operator+(ExtendedCost a, ExtendedCost b) {
        if (a.infinite_ || b.infinite_) {
            return infinity();
        }
        return ExtendedCost(detail::checked_add(a.value_, b.value_));
    }

    ExtendedCost& operator+=(ExtendedCost other) { return *this = *this + other; }

    friend constexpr bool operator==(ExtendedCost a, ExtendedCost b) noexcept {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }

    friend constexpr std::strong_ordering operator<=>(ExtendedCost a, ExtendedCost b) noexcept {
        if (a.infinite_ || b.infinite_) {
            return a.infinite_ <=> b.infinite_;
        }
        return a.value_ <=> b.value_;
    }

    /// "INF" or the decimal integer.
    std::string to_string() const { return infinite_ ? std::string("INF") : std::to_string(value_); }

    friend std::ostream& operator<<(std::ostream& os, ExtendedCost c) { return os << c.to_string(); }

private:
    std::int64_t value_ = 0;
    bool infinite_ = false;
};

inline constexpr ExtendedCost kInfinity = ExtendedCost::infinity();

} // namespace mine

#endif // MINE_COST_HPP
