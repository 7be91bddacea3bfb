#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <utility>

namespace cqsres {

// All arithmetic is exact. Antiflip orbits grow singularity indices
// exponentially, so fixed-width integers are not an option anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

// Ceiling division for positive operands.
inline Int ceil_div(const Int& a, const Int& b) { return (a + b - 1) / b; }

// Representative of a mod m in [0, m).
inline Int mod_floor(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

// Inverse of a mod m; requires gcd(a, m) = 1, m >= 1.
Int mod_inverse(const Int& a, const Int& m);

std::string int_to_string(const Int& v);

}  // namespace cqsres
