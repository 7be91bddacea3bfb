#include "cqsres/hj.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "cqsres/errors.hpp"
#include "scan.hpp"

namespace cqsres {

Int mod_inverse(const Int& a, const Int& m) {
  // Extended Euclid. gcd(a, m) must be 1.
  Int old_r = mod_floor(a, m), r = m;
  Int old_s = 1, s = 0;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw Error("mod_inverse: arguments are not coprime");
  return mod_floor(old_s, m);
}

std::string int_to_string(const Int& v) { return v.str(); }

Fraction make_fraction(const Int& delta, const Int& omega) {
  if (delta == 1 && omega == 0) return Fraction::smooth();
  if (delta < 2 || omega < 1 || omega >= delta)
    throw Error("invalid fraction " + delta.str() + "/" + omega.str());
  if (gcd(delta, omega) != 1)
    throw Error("fraction " + delta.str() + "/" + omega.str() + " is not reduced");
  return Fraction{delta, omega};
}

HJString hj_expand(const Fraction& f) {
  HJString out;
  Int d = f.delta, o = f.omega;
  while (o > 0) {
    Int e = ceil_div(d, o);
    out.push_back(e);
    Int next = e * o - d;
    d = o;
    o = next;
  }
  // Loop ends with d = 1 exactly when the input was reduced.
  if (d != 1) throw Error("hj_expand: input not reduced");
  return out;
}

std::pair<Int, Int> hj_eval(const HJString& s) {
  Int p_prev = 0, p = 1;  // p_{-1}, p_0
  Int q_prev = -1, q = 0;
  for (const Int& e : s) {
    Int p_next = e * p - p_prev;
    Int q_next = e * q - q_prev;
    p_prev = p;
    p = p_next;
    q_prev = q;
    q = q_next;
  }
  return {p, q};
}

HJString hj_dual(const Fraction& f) {
  if (f.is_smooth()) return {};
  return hj_expand(make_fraction(f.delta, f.delta - f.omega));
}

HJString blow_down(const HJString& s) {
  if (s.empty()) return {};
  const std::size_t n = s.size();
  std::vector<Int> val(s);
  std::vector<std::size_t> prev(n), next(n);
  const std::size_t NONE = n;  // sentinel
  for (std::size_t i = 0; i < n; ++i) {
    prev[i] = (i == 0) ? NONE : i - 1;
    next[i] = (i + 1 == n) ? NONE : i + 1;
  }
  std::size_t head = 0;
  std::size_t alive = n;

  // Indices never get re-inserted, so original order is position order and
  // an ordered set of the live entries equal to 1 finds the leftmost in
  // O(log n).
  std::set<std::size_t> ones;
  for (std::size_t i = 0; i < n; ++i)
    if (val[i] == 1) ones.insert(i);

  auto decrement = [&](std::size_t i) {
    val[i] -= 1;
    if (val[i] == 1)
      ones.insert(i);
    else
      ones.erase(i);  // was 2 -> not a 1 before; erase is a no-op then
  };

  while (!ones.empty() && alive > 1) {
    std::size_t i = *ones.begin();
    ones.erase(ones.begin());
    std::size_t l = prev[i], rj = next[i];
    if (l != NONE) decrement(l);
    if (rj != NONE) decrement(rj);
    if (l != NONE) next[l] = rj; else head = rj;
    if (rj != NONE) prev[rj] = l;
    --alive;
  }

  HJString out;
  out.reserve(alive);
  if (alive == 1 && !ones.empty()) {
    // A lone surviving 1 has no neighbours to absorb it; it contracts away.
    return out;
  }
  for (std::size_t i = head; i != NONE; i = next[i]) out.push_back(val[i]);
  return out;
}

bool riemenschneider_zero(const Fraction& f) {
  HJString dual = hj_dual(f);
  std::reverse(dual.begin(), dual.end());
  dual.push_back(1);
  HJString e = hj_expand(f);
  dual.insert(dual.end(), e.begin(), e.end());
  HJString z = blow_down(dual);
  return z.size() == 1 && z[0] == 0;
}

std::string format_hj(const HJString& s) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) os << ',';
    os << s[i];
  }
  os << ']';
  return os.str();
}

HJString parse_hj(const std::string& text) {
  detail::Cursor c{text};
  c.expect('[', "'['");
  HJString out;
  if (c.peek() != ']') {
    out.push_back(c.integer());
    while (c.accept(',')) out.push_back(c.integer());
  }
  c.expect(']', "']'");
  c.finish();
  return out;
}

std::string format_fraction(const Fraction& f) {
  return f.delta.str() + "/" + f.omega.str();
}

Fraction parse_fraction(const std::string& text) {
  detail::Cursor c{text};
  Int delta = c.integer();
  c.expect('/', "'/'");
  Int omega = c.integer();
  c.finish();
  try {
    return make_fraction(delta, omega);
  } catch (const Error& e) {
    throw SyntaxError(e.what(), 0);
  }
}

}  // namespace cqsres
