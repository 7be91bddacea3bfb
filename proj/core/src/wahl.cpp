#include "cqsres/wahl.hpp"

#include <map>
#include <utility>

#include "cqsres/errors.hpp"

namespace cqsres {

WahlSingularity make_wahl(const Int& n, const Int& a) {
  if (n == 1 && a == 1) return WahlSingularity::smooth();
  if (n < 2 || a < 1 || a >= n || gcd(n, a) != 1)
    throw Error("invalid Wahl index pair [" + n.str() + "|" + a.str() + "]");
  return WahlSingularity{n, a};
}

const HJString& wahl_cf(const WahlSingularity& w) {
  thread_local std::map<std::pair<Int, Int>, HJString> memo;
  auto key = std::make_pair(w.n, w.a);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  HJString s;
  if (!w.is_smooth()) {
    // n^2/(na-1) = [y_1, ..., y_{q-1}, y_q + x_p, x_{p-1}, ..., x_1]
    // where y = expansion of n/a and x = expansion of n/(n-a).
    HJString y = hj_expand(make_fraction(w.n, w.a));
    HJString x = hj_expand(make_fraction(w.n, w.n - w.a));
    s = y;
    s.back() += x.back();
    for (std::size_t i = x.size() - 1; i-- > 0;) s.push_back(x[i]);

    HJString direct = hj_expand(make_fraction(w.n * w.n, w.n * w.a - 1));
    if (s != direct)
      throw FormulaMismatch("wahl_cf splice disagrees with direct expansion for [" +
                            w.n.str() + "|" + w.a.str() + "]");
  }
  return memo.emplace(std::move(key), std::move(s)).first->second;
}

HJString wahl_cf_dual(const WahlSingularity& w) {
  if (w.is_smooth()) return {};
  // x_1, ..., x_p, 2, y_q, ..., y_1 with x, y as in wahl_cf.
  HJString y = hj_expand(make_fraction(w.n, w.a));
  HJString x = hj_expand(make_fraction(w.n, w.n - w.a));
  HJString s = x;
  s.push_back(2);
  for (std::size_t i = y.size(); i-- > 0;) s.push_back(y[i]);

  HJString direct = hj_expand(make_fraction(w.n * w.n, w.n * w.n - w.n * w.a + 1));
  if (s != direct)
    throw FormulaMismatch("wahl_cf_dual splice disagrees with direct expansion for [" +
                          w.n.str() + "|" + w.a.str() + "]");
  return s;
}

std::optional<WahlSingularity> parse_wahl(const HJString& s) {
  if (s.empty()) return WahlSingularity::smooth();
  for (const Int& e : s)
    if (e < 2) return std::nullopt;
  auto [p, q] = hj_eval(s);
  // p = n^2, q = na - 1.
  Int n = boost::multiprecision::sqrt(p);
  if (n * n != p || n < 2) return std::nullopt;
  Int a = (q + 1) / n;
  if (a * n != q + 1 || a < 1 || a >= n || gcd(n, a) != 1) return std::nullopt;
  if (s != wahl_cf(WahlSingularity{n, a})) return std::nullopt;
  return WahlSingularity{n, a};
}

std::optional<TSingularity> parse_T(const Fraction& f) {
  if (f.is_smooth()) return std::nullopt;
  std::optional<TSingularity> found;
  // delta = d n^2, omega = d n a - 1 for some 0 < a <= n with gcd(n, a) = 1;
  // a = n only in the Du Val case n = a = 1.
  for (Int n = 1; n * n <= f.delta; ++n) {
    if (f.delta % (n * n) != 0) continue;
    Int d = f.delta / (n * n);
    if ((f.omega + 1) % n != 0) continue;
    Int da = (f.omega + 1) / n;
    if (da % d != 0) continue;
    Int a = da / d;
    if (a < 1 || a > n || gcd(n, a) != 1) continue;
    if (n > 1 && a == n) continue;
    if (found)
      throw FormulaMismatch("non-unique T-singularity decomposition of " +
                            format_fraction(f));
    found = TSingularity{d, n, a};
  }
  return found;
}

std::string format_wahl(const WahlSingularity& w) {
  if (w.is_smooth()) return "*";
  return "[" + w.n.str() + "|" + w.a.str() + "]";
}

}  // namespace cqsres
