#ifndef TOURNEY_RATIONAL_HPP
#define TOURNEY_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace tourney {

/// Arbitrary precision integers and rationals. Every bound and expected value
/// is computed with these so comparisons against integer counts are exact.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// C(n, k) over the integers; zero when k < 0 or n < k (including negative n).
Integer binomial(std::int64_t n, std::int64_t k);

/// Reduced "p/q", or plain "p" when the denominator is 1.
std::string format_rational(const Rational& value);

/// Parses the output of format_rational.
Rational parse_rational(const std::string& text);

} // namespace tourney

#endif
