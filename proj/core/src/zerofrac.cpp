#include "cqsres/zerofrac.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "cqsres/errors.hpp"

namespace cqsres {

bool is_zero_fraction(const HJString& k) {
  if (k.empty()) return false;
  Int p_prev = 0, p = 1;
  for (std::size_t i = 0; i + 1 < k.size(); ++i) {
    Int p_next = k[i] * p - p_prev;
    if (p_next < 1) return false;
    p_prev = p;
    p = p_next;
  }
  return k.back() * p - p_prev == 0;
}

bool is_du_val(const Fraction& f) {
  return !f.is_smooth() && f.omega == f.delta - 1;
}

std::vector<ZeroFraction> enumerate_zero_fractions(const Fraction& f) {
  HJString b = hj_dual(f);
  std::vector<ZeroFraction> out;

  if (is_du_val(f)) {
    // b = [delta] and no [k_1] with 1 <= k_1 <= delta blows down to [0];
    // the single (Artin) component is carried by the conventional k = [0].
    out.push_back(ZeroFraction{HJString{0}, b});
    return out;
  }

  const std::size_t s = b.size();
  HJString k(s);

  // States (i, p_{i-1}, p_i) that cannot be completed to p_s = 0 no matter
  // how k_{i+1}, ..., k_s are chosen. Shared across siblings.
  std::set<std::tuple<std::size_t, Int, Int>> dead;

  // DFS in increasing k_i yields lexicographic output order. The last entry
  // is not searched: p_s = 0 forces k_s = p_{s-2} / p_{s-1} exactly.
  auto rec = [&](auto&& self, std::size_t i, const Int& p_prev, const Int& p) -> bool {
    if (i == s - 1) {
      if (p_prev % p == 0) {
        Int last = p_prev / p;
        if (last >= 1 && last <= b[i]) {
          k[i] = last;
          // The continuant identity forces p_{s-1} = 1 here; anything else
          // means the positivity filter is broken.
          if (p != 1)
            throw FormulaMismatch("zero continued fraction with p_{s-1} != 1");
          if (blow_down(k) != HJString{0})
            throw FormulaMismatch("matrix filter accepted " + format_hj(k) +
                                  " but it does not blow down to [0]");
          out.push_back(ZeroFraction{k, b});
          return true;
        }
      }
      return false;
    }
    auto key = std::make_tuple(i, p_prev, p);
    if (dead.count(key)) return false;
    bool any = false;
    for (Int ki = 1; ki <= b[i]; ++ki) {
      Int p_next = ki * p - p_prev;
      if (p_next < 1) continue;
      k[i] = ki;
      if (self(self, i + 1, p, p_next)) any = true;
    }
    if (!any) dead.insert(key);
    return any;
  };

  if (s == 1) {
    // p_1 = k_1 = 0 is the only zero string of length one, excluded by
    // k_1 >= 1; only the Du Val case (handled above) has s = 1.
    return out;
  }
  rec(rec, 0, Int(0), Int(1));
  return out;
}

namespace reference {

std::vector<HJString> zero_fractions_by_blowup(const HJString& b) {
  const std::size_t s = b.size();
  std::vector<HJString> out;
  if (s == 0) return out;
  if (s == 1) {
    // Mirrors the Du Val convention of the searched enumeration.
    out.push_back(HJString{0});
    return out;
  }

  // Sliding-window maxima of b: wmax[m][j] = max(b[j .. j + s - m]) bounds
  // any entry at position j of a length-m ancestor.
  std::vector<std::vector<Int>> wmax(s + 1);
  for (std::size_t m = 2; m <= s; ++m) {
    wmax[m].resize(m);
    for (std::size_t j = 0; j < m; ++j) {
      Int mx = b[j];
      for (std::size_t t = j + 1; t <= j + (s - m) && t < s; ++t) mx = std::max(mx, b[t]);
      wmax[m][j] = mx;
    }
  }

  auto admissible = [&](const HJString& k) {
    for (std::size_t j = 0; j < k.size(); ++j)
      if (k[j] > wmax[k.size()][j]) return false;
    return true;
  };

  std::set<HJString> level = {HJString{1, 1}};
  for (std::size_t m = 2; m < s; ++m) {
    std::set<HJString> next;
    for (const HJString& k : level) {
      for (std::size_t at = 0; at <= k.size(); ++at) {
        HJString kk;
        kk.reserve(k.size() + 1);
        kk.insert(kk.end(), k.begin(), k.begin() + at);
        kk.push_back(1);
        kk.insert(kk.end(), k.begin() + at, k.end());
        if (at > 0) kk[at - 1] += 1;
        if (at < k.size()) kk[at + 1] += 1;
        if (admissible(kk)) next.insert(std::move(kk));
      }
    }
    level = std::move(next);
  }

  for (const HJString& k : level) {
    bool ok = true;
    for (std::size_t j = 0; j < s; ++j)
      if (k[j] > b[j]) {
        ok = false;
        break;
      }
    if (ok) out.push_back(k);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace reference

}  // namespace cqsres
