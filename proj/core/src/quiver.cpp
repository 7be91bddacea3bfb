#include "cqsres/quiver.hpp"

#include <utility>

#include "cqsres/errors.hpp"

namespace cqsres {

std::vector<std::vector<Int>> hom_dims(const WahlResolution& nres) {
  const std::size_t v = nres.sings.size();
  std::vector<std::vector<Int>> H(v, std::vector<Int>(v, 0));

  // Prefix sums of delta_m / (n_{m-1} n_m) for the additive cross-check.
  std::vector<Rat> S(v, Rat(0));
  for (std::size_t m = 1; m < v; ++m) {
    Int s = delta_signed(nres, m);
    if (s > 0)
      throw FormulaMismatch("hom_dims expects an anti-nef chain, curve " +
                            std::to_string(m) + " has positive intersection");
    S[m] = S[m - 1] + Rat(-s, nres.sings[m - 1].n * nres.sings[m].n);
  }

  for (std::size_t i = 1; i < v; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const WahlSingularity& wi = nres.sings[i];
      const WahlSingularity& wj = nres.sings[j];
      H[i][j] = wj.n * wi.a - wi.n * wj.a;
      Rat additive = Rat(wi.n * wj.n) * (S[i] - S[j]);
      if (Rat(H[i][j]) != additive)
        throw FormulaMismatch("hom count (" + std::to_string(i) + "," +
                              std::to_string(j) + ") disagrees with the delta sum");
      if (H[i][j] < 0)
        throw FormulaMismatch("negative hom count between vertices " +
                              std::to_string(i) + " and " + std::to_string(j));
    }
  }
  return H;
}

std::vector<std::vector<Int>> arrows_from_homs(const std::vector<std::vector<Int>>& hom) {
  const std::size_t v = hom.size();
  std::vector<std::vector<Int>> A(v, std::vector<Int>(v, 0));
  for (std::size_t gap = 1; gap < v; ++gap) {
    for (std::size_t i = gap; i < v; ++i) {
      std::size_t j = i - gap;
      Int count = hom[i][j];
      for (std::size_t k = j + 1; k < i; ++k) count -= A[i][k] * hom[k][j];
      if (count < 0)
        throw NegativeArrowCount("arrow count (" + std::to_string(i) + "," +
                                 std::to_string(j) + ") is negative");
      A[i][j] = count;
    }
  }
  return A;
}

Quiver build_quiver(const WahlResolution& nres) {
  Quiver q;
  q.ranks.reserve(nres.sings.size());
  for (const WahlSingularity& s : nres.sings) q.ranks.push_back(s.n);
  q.hom = hom_dims(nres);
  q.arrows = arrows_from_homs(q.hom);
  return q;
}

Int euler_pairing(const WahlResolution& nres, std::size_t i) {
  return -delta_signed(nres, i);
}

bool rank_identity(const WahlResolution& mres, const WahlResolution& nres) {
  if (mres.target != nres.target) return false;
  if (mres.sings.size() != nres.sings.size()) return false;
  const std::size_t v = mres.sings.size();
  Int sum = 0;
  for (std::size_t i = 0; i < v; ++i) sum += mres.sings[i].n * nres.sings[v - 1 - i].n;
  return sum == mres.target.delta;
}

namespace {

// Build the candidate one-curve chain and keep it only if it is a valid
// resolution whose curve has signed intersection exactly +c.
std::optional<WahlResolution> extremal_chain(const WahlSingularity& left,
                                             const WahlSingularity& right,
                                             const Int& curve, const Int& c) {
  try {
    WahlResolution raw{Fraction::smooth(), {left, right}, {curve}};
    Fraction target = contracts_to(raw);
    WahlResolution w = make_resolution(target, {left, right}, {curve});
    if (delta_signed(w, 1) != c) return std::nullopt;
    return w;
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

std::optional<ExtremalWitness> check_Q_abc(const Int& a, const Int& b, const Int& c) {
  if (a < 0 || b < 0 || c < 0) throw Error("Q_abc indices must be >= 0");

  if (a == 0 || b == 0) {
    // A zero index stands for a rank-0 vertex; the only realizable value
    // is the other index and there is no chain to exhibit.
    Int other = a == 0 ? b : a;
    if (c != other) return std::nullopt;
    ExtremalWitness wit{a, b, 0, 0, 0, c, std::nullopt, true};
    return wit;
  }
  if (c == 0) return std::nullopt;  // K-trivial chains are not extremal

  if (a == 1 && b == 1) {
    // * -(lambda+1)- * has signed intersection lambda - 1.
    Int lambda = c + 1;
    auto chain = extremal_chain(WahlSingularity::smooth(), WahlSingularity::smooth(),
                                lambda + 1, c);
    if (!chain) return std::nullopt;
    return ExtremalWitness{a, b, 0, 0, lambda, c, std::move(chain), false};
  }

  if (a == 1 || b == 1) {
    // * -(lambda)- [b|eps_b] has signed intersection lambda b - b - eps_b
    // (mirrored when the smooth end is on the right).
    const bool smooth_left = (a == 1);
    const Int& idx = smooth_left ? b : a;
    for (Int lambda = 2; lambda <= c + 3; ++lambda) {
      for (Int eps = 1; eps < idx; ++eps) {
        if (gcd(idx, eps) != 1) continue;
        if (lambda * idx - idx - eps != c) continue;
        auto chain = smooth_left
                         ? extremal_chain(WahlSingularity::smooth(),
                                          make_wahl(idx, eps), lambda, c)
                         : extremal_chain(make_wahl(idx, idx - eps),
                                          WahlSingularity::smooth(), lambda, c);
        if (!chain) continue;
        ExtremalWitness wit{a, b, smooth_left ? Int(0) : eps,
                            smooth_left ? eps : Int(0), lambda, c,
                            std::move(chain), false};
        return wit;
      }
    }
    return std::nullopt;
  }

  // [a|a-eps_a] -(lambda-1)- [b|eps_b] has signed intersection
  // (lambda-1) a b - eps_a b - eps_b a.
  for (Int lambda = 2; lambda <= c + 3; ++lambda) {
    for (Int eps_a = 1; eps_a < a; ++eps_a) {
      if (gcd(a, eps_a) != 1) continue;
      for (Int eps_b = 1; eps_b < b; ++eps_b) {
        if (gcd(b, eps_b) != 1) continue;
        if ((lambda - 1) * a * b - eps_a * b - eps_b * a != c) continue;
        auto chain = extremal_chain(make_wahl(a, a - eps_a), make_wahl(b, eps_b),
                                    lambda - 1, c);
        if (!chain) continue;
        return ExtremalWitness{a, b, eps_a, eps_b, lambda, c, std::move(chain), false};
      }
    }
  }
  return std::nullopt;
}

std::vector<Int> enumerate_c(const Int& a, const Int& b, const Int& c_max) {
  std::vector<Int> out;
  for (Int c = 1; c <= c_max; ++c)
    if (check_Q_abc(a, b, c)) out.push_back(c);
  return out;
}

namespace {

HJString dolgachev_block(const Int& p, const Int& q) {
  // [2^{q-2}, q+1, p+1, 2^{p-4}, 3, 2^{q-2}, q], where for p = 3 the
  // segment [4, 2^{-1}, 3] collapses to [5].
  HJString s;
  for (Int t = 0; t < q - 2; ++t) s.push_back(2);
  s.push_back(q + 1);
  if (p == 3) {
    s.push_back(5);
  } else {
    s.push_back(p + 1);
    for (Int t = 0; t < p - 4; ++t) s.push_back(2);
    s.push_back(3);
  }
  for (Int t = 0; t < q - 2; ++t) s.push_back(2);
  s.push_back(q);
  return s;
}

}  // namespace

DolgachevReport dolgachev(const Int& p, const Int& q) {
  if (p < 3 || q < 2 || gcd(p, q) != 1 || q % 3 == 0)
    throw Error("dolgachev requires p >= 3, q >= 2 coprime with q not divisible by 3");

  const Int delta1 = p * q - p - q;
  WahlSingularity head = make_wahl(q, q - 1);
  WahlSingularity body = make_wahl(p, 1);

  std::vector<WahlSingularity> sings;
  sings.push_back(head);
  for (int i = 0; i < 9; ++i) sings.push_back(body);
  std::vector<Int> curves;
  curves.push_back(curve_from_delta(head, body, delta1));
  for (int i = 1; i < 9; ++i) curves.push_back(curve_from_delta(body, body, 0));

  WahlResolution raw{Fraction::smooth(), sings, curves};
  Fraction target = contracts_to(raw);
  WahlResolution mres = make_resolution(target, std::move(sings), std::move(curves));

  if (p >= 3) {
    // [2^{q-2}, q+1, p, 2^7, 3, 2^{p-2}]
    HJString expect;
    for (Int t = 0; t < q - 2; ++t) expect.push_back(2);
    expect.push_back(q + 1);
    expect.push_back(p);
    for (int t = 0; t < 7; ++t) expect.push_back(2);
    expect.push_back(3);
    for (Int t = 0; t < p - 2; ++t) expect.push_back(2);
    if (hj_expand(target) != expect)
      throw FormulaMismatch("dolgachev target expansion is off the expected pattern");
  }

  WahlResolution nres = apply_word(mres, mn_schedule(9));

  const HJString block = dolgachev_block(p, q);
  for (std::size_t k = 0; k < 9; ++k)
    if (wahl_cf(nres.sings[k]) != block)
      throw FormulaMismatch("dolgachev N-resolution vertex " + std::to_string(k) +
                            " is off the expected block");
  if (nres.sings[9] != head)
    throw FormulaMismatch("dolgachev N-resolution does not end in the head vertex");

  DolgachevReport rep;
  rep.p = p;
  rep.q = q;
  rep.m_res = std::move(mres);
  rep.n_res = std::move(nres);
  rep.delta.assign(9, 0);
  rep.delta[0] = delta1;
  rep.quiver = build_quiver(rep.n_res);

  for (std::size_t i = 1; i < 10; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      const Int& h = rep.quiver.hom[i][j];
      if ((i == 9 && h != delta1) || (i < 9 && h != 0))
        throw FormulaMismatch("dolgachev hom counts are off the nine-block pattern");
    }

  rep.gram_quoted = {{{Int(-1), 3 * delta1}, {Int(0), Int(-1)}}};
  return rep;
}

}  // namespace cqsres
