#pragma once

#include <optional>
#include <string>

#include "cqsres/hj.hpp"
#include "cqsres/int_types.hpp"

namespace cqsres {

// The Wahl singularity (1/n^2)(1, na - 1), recorded by the pair (n, a) with
// 0 < a < n coprime. (1, 1) is the smooth point. Chains of these are the
// vertices of M- and N-resolutions, so the pair form is primary and the
// continued-fraction string is derived.
struct WahlSingularity {
  Int n;
  Int a;

  static WahlSingularity smooth() { return WahlSingularity{1, 1}; }
  bool is_smooth() const { return n == 1; }

  // The same singularity seen from the other end of the chain.
  WahlSingularity reversed() const {
    return is_smooth() ? *this : WahlSingularity{n, n - a};
  }

  friend bool operator==(const WahlSingularity& x, const WahlSingularity& y) {
    return x.n == y.n && x.a == y.a;
  }
  friend bool operator!=(const WahlSingularity& x, const WahlSingularity& y) {
    return !(x == y);
  }
  friend bool operator<(const WahlSingularity& x, const WahlSingularity& y) {
    if (x.n != y.n) return x.n < y.n;
    return x.a < y.a;
  }
};

// Throws Error unless (n, a) = (1, 1) or 0 < a < n with gcd 1.
WahlSingularity make_wahl(const Int& n, const Int& a);

// Expansion of n^2/(na - 1). Built by splicing the expansions of n/a and
// n/(n - a) end to end with the junction entries merged, then checked
// against the direct expansion. Smooth gives the empty string. Memoized.
const HJString& wahl_cf(const WahlSingularity& w);

// Expansion of n^2/(n^2 - na + 1), the dual string of wahl_cf.
HJString wahl_cf_dual(const WahlSingularity& w);

// Recognize a canonical string as wahl_cf(n, a); empty string gives smooth.
std::optional<WahlSingularity> parse_wahl(const HJString& s);

// The T-singularity (1/(d n^2))(1, d n a - 1). d >= 1; (n, a) = (1, 1)
// encodes the Du Val case A_{d-1}.
struct TSingularity {
  Int d;
  Int n;
  Int a;
};

// Recognize a fraction as a T-singularity. The decomposition is unique.
std::optional<TSingularity> parse_T(const Fraction& f);

// "[5|2]"; the smooth point renders as "*".
std::string format_wahl(const WahlSingularity& w);

}  // namespace cqsres
