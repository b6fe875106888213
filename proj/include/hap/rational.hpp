#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace hap {

/// Exact rational scalar. All p = 1 computations are carried out in this
/// type; no floating point enters any comparison on that path.
using Rational = boost::multiprecision::mpq_rational;

/// Parses "3", "-1/2" or a plain decimal like "0.25" into an exact rational.
/// Throws hap::Error(precondition) on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "n" when the denominator is 1, otherwise "n/d"
/// with the sign on the numerator.
std::string format_rational(const Rational& value);

inline double to_double(const Rational& value) {
  return value.convert_to<double>();
}

}  // namespace hap
