#ifndef MINE_RATIONAL_HPP
#define MINE_RATIONAL_HPP

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace mine {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "num/den" with den > 0 and gcd(num, den) = 1.
inline std::string to_fraction_string(const Rational& r) {
    return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

} // namespace mine

#endif // MINE_RATIONAL_HPP
