#ifndef FEWEARS_EXACT_HPP
#define FEWEARS_EXACT_HPP

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace fewears {

/// Arbitrary-precision nonnegative integer. Every count in the library is one of these.
using ExactCount = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// 2^e as an exact rational; e may be negative.
Rational pow2(int e);

/// binom(n, k) exactly; 0 when k < 0 or k > n.
ExactCount binomial(int n, int k);

/// Converts r to an integer, throwing InvariantError naming `what` if r has a
/// nonzero fractional part.
ExactCount require_integral(const Rational& r, std::string_view what);

std::string to_string(const ExactCount& x);
std::string to_string(const Rational& r);

/// Parses a decimal string; throws InputError on anything else.
ExactCount parse_count(std::string_view text);

}  // namespace fewears

#endif  // FEWEARS_EXACT_HPP
