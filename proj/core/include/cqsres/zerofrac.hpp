#pragma once

#include <vector>

#include "cqsres/hj.hpp"
#include "cqsres/int_types.hpp"

namespace cqsres {

// A zero continued fraction k = [k_1, ..., k_s] bounded entrywise by the
// dual expansion b of the fraction it belongs to. These index the
// components of the deformation space.
struct ZeroFraction {
  HJString k;
  HJString b;

  friend bool operator==(const ZeroFraction& x, const ZeroFraction& y) {
    return x.k == y.k && x.b == y.b;
  }
};

// True iff [k_1, ..., k_s] blows down to [0]. Decided by the continuant
// recursion p_i = k_i p_{i-1} - p_{i-2}: zero iff p_i >= 1 for all i < s
// and p_s = 0. The positivity condition is essential; p_s = 0 alone admits
// strings such as [1,1,1,1,1] that do not blow down to [0]. Each accepted
// candidate is re-checked against blow_down directly.
bool is_zero_fraction(const HJString& k);

// All zero continued fractions with 1 <= k_i <= b_i, where b = hj_dual(f),
// in lexicographic order. For the Du Val case omega = delta - 1 the dual
// expansion is the single entry [delta] and the literal candidate set is
// empty; the one component is represented by the conventional k = [0].
std::vector<ZeroFraction> enumerate_zero_fractions(const Fraction& f);

bool is_du_val(const Fraction& f);

namespace reference {

// Independent enumeration for cross-checking: grow all zero continued
// fractions of length s from [1, 1] by blow-ups (insert a 1, incrementing
// the neighbouring entries), pruning by the window bound that an entry at
// position j of a length-m string can only end up at final positions
// j .. j + s - m and never decreases, then filter by k <= b entrywise.
std::vector<HJString> zero_fractions_by_blowup(const HJString& b);

}  // namespace reference

}  // namespace cqsres
