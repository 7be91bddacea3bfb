#include "cqsres/chain.hpp"

#include <map>
#include <sstream>
#include <utility>

#include "cqsres/errors.hpp"
#include "scan.hpp"

namespace cqsres {

namespace {

Fraction canonical_or_throw(const HJString& contracted, const char* what) {
  if (contracted.empty()) return Fraction::smooth();
  for (const Int& e : contracted)
    if (e < 2)
      throw NotContractible(std::string(what) + " blows down to the non-canonical string " +
                            format_hj(contracted));
  auto [p, q] = hj_eval(contracted);
  return make_fraction(p, q);
}

// Discrepancies of the two ends of wahl_cf(w), from the exact solve, with a
// one-time check against the closed forms -(n-a)/n and -a/n.
struct Ends {
  Rat first;
  Rat last;
};

const Ends& discrepancy_ends(const WahlSingularity& w) {
  thread_local std::map<std::pair<Int, Int>, Ends> memo;
  auto key = std::make_pair(w.n, w.a);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  Ends e;
  if (w.is_smooth()) {
    e = Ends{Rat(0), Rat(0)};
  } else {
    std::vector<Rat> d = discrepancies(make_fraction(w.n * w.n, w.n * w.a - 1));
    e = Ends{d.front(), d.back()};
    if (e.first != Rat(-(w.n - w.a), w.n) || e.last != Rat(-w.a, w.n))
      throw FormulaMismatch("end discrepancies of " + format_wahl(w) +
                            " disagree with the closed form");
  }
  return memo.emplace(std::move(key), std::move(e)).first->second;
}

}  // namespace

WahlResolution make_resolution(const Fraction& target,
                               std::vector<WahlSingularity> sings,
                               std::vector<Int> curves) {
  if (sings.empty() || curves.size() + 1 != sings.size())
    throw ConstructionFailed("chain must have one more vertex than curves");
  for (const WahlSingularity& s : sings) make_wahl(s.n, s.a);
  for (const Int& c : curves)
    if (c < 1) throw ConstructionFailed("curve multiplicities must be >= 1");
  WahlResolution w{target, std::move(sings), std::move(curves)};
  Fraction got = [&] {
    try {
      return contracts_to(w);
    } catch (const NotContractible& e) {
      throw ConstructionFailed(std::string("chain does not contract: ") + e.what());
    }
  }();
  if (got != target)
    throw ConstructionFailed("chain " + print_chain(w) + " contracts to " +
                             format_fraction(got) + ", not " + format_fraction(target));
  return w;
}

HJString full_string(const WahlResolution& w) {
  HJString out;
  for (std::size_t i = 0; i < w.sings.size(); ++i) {
    if (i) out.push_back(w.curves[i - 1]);
    const HJString& cf = wahl_cf(w.sings[i]);
    out.insert(out.end(), cf.begin(), cf.end());
  }
  return out;
}

Fraction contracts_to(const WahlResolution& w) {
  return canonical_or_throw(blow_down(full_string(w)), "chain");
}

Fraction partial_contraction(const WahlResolution& w, std::size_t i, std::size_t j) {
  if (i > j || j >= w.sings.size())
    throw Error("partial_contraction: bad position range");
  HJString s;
  for (std::size_t k = i; k <= j; ++k) {
    if (k > i) s.push_back(w.curves[k - 1]);
    const HJString& cf = wahl_cf(w.sings[k]);
    s.insert(s.end(), cf.begin(), cf.end());
  }
  return canonical_or_throw(blow_down(s), "sub-chain");
}

std::vector<Rat> discrepancies(const Fraction& f) {
  HJString e = hj_expand(f);
  const std::size_t l = e.size();
  std::vector<Rat> d(l);
  if (l == 0) return d;

  // Tridiagonal system d_{k-1} - e_k d_k + d_{k+1} = e_k - 2 (Thomas
  // algorithm; the matrix is negative definite so no pivot vanishes).
  std::vector<Rat> diag(l), rhs(l);
  for (std::size_t k = 0; k < l; ++k) {
    diag[k] = Rat(-e[k]);
    rhs[k] = Rat(e[k] - 2);
  }
  for (std::size_t k = 1; k < l; ++k) {
    Rat m = Rat(1) / diag[k - 1];
    diag[k] -= m;
    rhs[k] -= m * rhs[k - 1];
  }
  d[l - 1] = rhs[l - 1] / diag[l - 1];
  for (std::size_t k = l - 1; k-- > 0;) d[k] = (rhs[k] - d[k + 1]) / diag[k];

  for (const Rat& x : d)
    if (x > 0 || x <= -1)
      throw FormulaMismatch("discrepancy outside (-1, 0] for " + format_fraction(f));
  return d;
}

Rat k_dot_gamma(const WahlSingularity& L, const Int& c, const WahlSingularity& R) {
  return Rat(c - 2) - discrepancy_ends(L).last - discrepancy_ends(R).first;
}

Int delta_signed(const WahlResolution& w, std::size_t i) {
  if (i < 1 || i > w.r()) throw Error("delta_signed: curve index out of range");
  const WahlSingularity& L = w.sings[i - 1];
  const WahlSingularity& R = w.sings[i];
  Rat s = k_dot_gamma(L, w.curves[i - 1], R) * Rat(L.n * R.n);
  if (!is_integer(s))
    throw NonIntegral("signed intersection at curve " + std::to_string(i) +
                      " of " + print_chain(w) + " is not integral");
  return rat_num(s);
}

Int curve_from_delta(const WahlSingularity& L, const WahlSingularity& R, const Int& s) {
  Rat c = Rat(s, L.n * R.n) + 2 + discrepancy_ends(L).last + discrepancy_ends(R).first;
  if (!is_integer(c) || rat_num(c) < 1)
    throw NoSuchCurve("no curve multiplicity gives intersection " + s.str() +
                      " between " + format_wahl(L) + " and " + format_wahl(R));
  return rat_num(c);
}

ChainParts parse_chain(const std::string& text) {
  detail::Cursor c{text};
  ChainParts parts;
  auto node = [&] {
    if (c.accept('*')) {
      parts.sings.push_back(WahlSingularity::smooth());
      return;
    }
    std::size_t at = c.pos;
    c.expect('[', "'[' or '*'");
    Int n = c.integer();
    c.expect('|', "'|'");
    Int a = c.integer();
    c.expect(']', "']'");
    try {
      parts.sings.push_back(make_wahl(n, a));
    } catch (const Error& e) {
      throw SyntaxError(e.what(), at);
    }
  };
  node();
  while (c.accept('-')) {
    c.expect('(', "'('");
    parts.curves.push_back(c.integer());
    c.expect(')', "')'");
    c.expect('-', "'-'");
    node();
  }
  c.finish();
  return parts;
}

std::string print_chain(const std::vector<WahlSingularity>& sings,
                        const std::vector<Int>& curves) {
  std::ostringstream os;
  for (std::size_t i = 0; i < sings.size(); ++i) {
    if (i) os << "-(" << curves[i - 1] << ")-";
    os << format_wahl(sings[i]);
  }
  return os.str();
}

std::string print_chain(const WahlResolution& w) {
  return print_chain(w.sings, w.curves);
}

std::string print_chain_cf(const WahlResolution& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.sings.size(); ++i) {
    if (i) os << "-(" << w.curves[i - 1] << ")-";
    if (w.sings[i].is_smooth()) {
      os << '*';
    } else {
      const HJString& cf = wahl_cf(w.sings[i]);
      os << '[';
      for (std::size_t k = 0; k < cf.size(); ++k) {
        if (k) os << ',';
        os << cf[k];
      }
      os << ']';
    }
  }
  return os.str();
}

}  // namespace cqsres
