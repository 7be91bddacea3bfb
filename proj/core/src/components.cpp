#include "cqsres/components.hpp"

#include <algorithm>

#include "cqsres/errors.hpp"

namespace cqsres {

namespace {

// 1-based positions of the nonzero entries of d = b - k.
struct Grouping {
  HJString d;
  std::vector<std::size_t> positions;
  Int total = 0;  // sum of d = number of chain vertices
};

Grouping grouping_of(const ZeroFraction& z) {
  Grouping g;
  if (z.k.size() != z.b.size())
    throw ConstructionFailed("zero fraction and dual expansion differ in length");
  g.d.resize(z.k.size());
  for (std::size_t i = 0; i < z.k.size(); ++i) {
    g.d[i] = z.b[i] - z.k[i];
    if (g.d[i] < 0)
      throw ConstructionFailed("zero fraction exceeds the dual expansion at entry " +
                               std::to_string(i + 1));
    if (g.d[i] > 0) g.positions.push_back(i + 1);
    g.total += g.d[i];
  }
  if (g.positions.empty())
    throw ConstructionFailed("k = b has no singular content");
  return g;
}

WahlSingularity group_singularity_from(const HJString& contracted_prefix,
                                       const char* which) {
  if (contracted_prefix.empty()) return WahlSingularity::smooth();
  for (const Int& e : contracted_prefix)
    if (e < 2)
      throw ConstructionFailed(std::string(which) +
                               " group prefix does not contract to a canonical string");
  auto [p, q] = hj_eval(contracted_prefix);
  // p/q = n/(n-a).
  return make_wahl(p, p - q);
}

}  // namespace

DeltaVector delta_vector(const ZeroFraction& z) {
  Grouping g = grouping_of(z);
  std::size_t r = static_cast<std::size_t>(g.total - 1);
  DeltaVector dv;
  dv.delta.assign(r, 0);
  dv.eps.assign(r, 0);

  Int pos = 0;
  for (std::size_t gi = 0; gi + 1 < g.positions.size(); ++gi) {
    pos += g.d[g.positions[gi] - 1];
    // Window of b strictly between consecutive group positions.
    HJString window(z.b.begin() + g.positions[gi], z.b.begin() + (g.positions[gi + 1] - 1));
    Int delta = 1, eps = 0;
    if (!window.empty()) {
      auto [p, q] = hj_eval(window);
      delta = p;
      eps = q;
    }
    std::size_t at = static_cast<std::size_t>(pos - 1);
    dv.delta[at] = delta;
    dv.eps[at] = eps;
  }
  return dv;
}

WahlResolution m_resolution(const Fraction& f, const ZeroFraction& z) {
  if (z.b != hj_dual(f))
    throw ConstructionFailed("zero fraction does not belong to " + format_fraction(f));
  Grouping g = grouping_of(z);

  std::vector<WahlSingularity> sings;
  for (std::size_t gi = 0; gi < g.positions.size(); ++gi) {
    HJString prefix(z.k.begin(), z.k.begin() + (g.positions[gi] - 1));
    WahlSingularity w = group_singularity_from(blow_down(prefix), "M");
    for (Int c = 0; c < g.d[g.positions[gi] - 1]; ++c) sings.push_back(w);
  }

  DeltaVector dv = delta_vector(z);
  std::vector<Int> curves;
  curves.reserve(dv.delta.size());
  for (std::size_t i = 0; i < dv.delta.size(); ++i)
    curves.push_back(curve_from_delta(sings[i], sings[i + 1], dv.delta[i]));

  return make_resolution(f, std::move(sings), std::move(curves));
}

WahlResolution n_resolution(const Fraction& f, const ZeroFraction& z) {
  if (z.b != hj_dual(f))
    throw ConstructionFailed("zero fraction does not belong to " + format_fraction(f));
  Grouping g = grouping_of(z);

  // Group singularities from the unmodified prefixes of b, laid out from
  // the right end of the chain leftwards.
  std::vector<WahlSingularity> sings;
  for (std::size_t gi = g.positions.size(); gi-- > 0;) {
    HJString prefix(z.b.begin(), z.b.begin() + (g.positions[gi] - 1));
    WahlSingularity w = group_singularity_from(prefix, "N");
    for (Int c = 0; c < g.d[g.positions[gi] - 1]; ++c) sings.push_back(w);
  }

  // Anti-nef multiplicities: the delta vector of the component read
  // backwards with negative sign.
  DeltaVector dv = delta_vector(z);
  const std::size_t r = dv.delta.size();
  std::vector<Int> curves;
  curves.reserve(r);
  for (std::size_t i = 0; i < r; ++i)
    curves.push_back(curve_from_delta(sings[i], sings[i + 1], -dv.delta[r - 1 - i]));

  WahlResolution nres = make_resolution(f, std::move(sings), std::move(curves));

  // The two resolutions must contract identically stage by stage: the first
  // i + 1 vertices of M against the last i + 1 vertices of N.
  WahlResolution mres = m_resolution(f, z);
  for (std::size_t i = 0; i <= r; ++i) {
    Fraction from_m = partial_contraction(mres, 0, i);
    Fraction from_n = partial_contraction(nres, r - i, r);
    if (from_m != from_n)
      throw ConstructionFailed(
          "M- and N-resolutions of " + format_fraction(f) + " at " + format_hj(z.k) +
          " disagree at stage " + std::to_string(i) + ": " + format_fraction(from_m) +
          " vs " + format_fraction(from_n));
  }
  return nres;
}

Int component_dimension(const WahlResolution& mres) {
  Int dim = 0;
  for (const Int& c : mres.curves) dim += c - 1;
  for (const WahlSingularity& s : mres.sings)
    if (!s.is_smooth()) dim += 1;
  return dim;
}

std::vector<ComponentReport> components(const Fraction& f) {
  if (f.is_smooth()) throw Error("the smooth point has no deformation components");
  std::vector<ComponentReport> out;
  for (ZeroFraction& z : enumerate_zero_fractions(f)) {
    ComponentReport rep;
    rep.zf = z;
    rep.delta = delta_vector(z);
    rep.m_res = m_resolution(f, z);
    rep.n_res = n_resolution(f, z);
    rep.quiver = build_quiver(rep.n_res);
    rep.dimension = component_dimension(rep.m_res);
    rep.du_val = is_du_val(f);
    rep.artin = std::all_of(rep.m_res.sings.begin(), rep.m_res.sings.end(),
                            [](const WahlSingularity& s) { return s.is_smooth(); });
    out.push_back(std::move(rep));
  }
  return out;
}

}  // namespace cqsres
