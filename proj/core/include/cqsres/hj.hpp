#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cqsres/int_types.hpp"

namespace cqsres {

// Entries of a Hirzebruch-Jung continued fraction. Canonical strings have
// all entries >= 2, but several operations legitimately produce or consume
// strings with entries 0 and 1 (blow-downs, zero continued fractions), so
// the type itself carries no invariant.
using HJString = std::vector<Int>;

// The cyclic quotient singularity (1/delta)(1, omega), with delta > omega >= 1
// coprime. delta = 1 is permitted only as the distinguished smooth point,
// written 1/0.
struct Fraction {
  Int delta;
  Int omega;

  static Fraction smooth() { return Fraction{1, 0}; }
  bool is_smooth() const { return delta == 1; }

  friend bool operator==(const Fraction& a, const Fraction& b) {
    return a.delta == b.delta && a.omega == b.omega;
  }
  friend bool operator!=(const Fraction& a, const Fraction& b) { return !(a == b); }
  friend bool operator<(const Fraction& a, const Fraction& b) {
    if (a.delta != b.delta) return a.delta < b.delta;
    return a.omega < b.omega;
  }
};

// Throws Error unless delta > omega >= 1 with gcd 1, or (delta, omega) = (1, 0).
Fraction make_fraction(const Int& delta, const Int& omega);

// delta/omega = [e_1, ..., e_l] with every e_i >= 2; empty for the smooth point.
HJString hj_expand(const Fraction& f);

// First column (p, q) of the product of the matrices [[e_i, -1], [1, 0]].
// Empty string gives (1, 0). Defined for arbitrary integer entries.
std::pair<Int, Int> hj_eval(const HJString& s);

// Expansion of delta/(delta - omega). For the smooth point this is empty.
HJString hj_dual(const Fraction& f);

// Repeatedly contract the leftmost entry equal to 1, decrementing its
// neighbours (one neighbour at the ends, none for a singleton), until no
// entry equals 1. The result may contain entries <= 0.
HJString blow_down(const HJString& s);

// Riemenschneider point rule packaged as a check:
// blow_down(reverse(dual) ++ [1] ++ expand) == [0].
bool riemenschneider_zero(const Fraction& f);

// "[3,4,2]"; empty string renders as "[]".
std::string format_hj(const HJString& s);
HJString parse_hj(const std::string& text);

// "19/7"; the smooth point renders as "1/0".
std::string format_fraction(const Fraction& f);
Fraction parse_fraction(const std::string& text);

}  // namespace cqsres
