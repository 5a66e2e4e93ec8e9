#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace confal {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline bool coeff_is_zero(const Rational& r) { return r.is_zero(); }

inline std::string to_string(const Rational& r) {
  return r.str();
}

// gcd of |a|,|b| as nonnegative integers; gcd(0,0) = 0
inline Integer int_gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

inline Integer int_lcm(const Integer& a, const Integer& b) {
  return boost::multiprecision::lcm(a, b);
}

}  // namespace confal
