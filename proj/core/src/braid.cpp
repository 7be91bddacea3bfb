#include "cqsres/braid.hpp"

#include <map>
#include <random>
#include <sstream>
#include <utility>

#include "cqsres/components.hpp"
#include "cqsres/errors.hpp"
#include "cqsres/zerofrac.hpp"
#include "scan.hpp"

namespace cqsres {

WahlResolution reversed(const WahlResolution& w) {
  WahlResolution out;
  out.target = w.target.is_smooth()
                   ? w.target
                   : make_fraction(w.target.delta,
                                   mod_inverse(w.target.omega, w.target.delta));
  out.sings.reserve(w.sings.size());
  for (std::size_t i = w.sings.size(); i-- > 0;) out.sings.push_back(w.sings[i].reversed());
  out.curves.assign(w.curves.rbegin(), w.curves.rend());
  return make_resolution(out.target, std::move(out.sings), std::move(out.curves));
}

WahlResolution right_antiflip(const WahlResolution& w, std::size_t i) {
  const std::size_t r = w.r();
  if (i < 1 || i > r) throw Error("antiflip index out of range");

  const WahlSingularity L = w.sings[i - 1];
  const WahlSingularity R = w.sings[i];
  const Int s = delta_signed(w, i);
  const Int d = abs(s);

  // Old signed intersections of the adjacent curves, before any mutation.
  Int s_left_old = 0, s_right_old = 0;
  if (i >= 2) s_left_old = delta_signed(w, i - 1);
  if (i + 1 <= r) s_right_old = delta_signed(w, i + 1);

  // Index of the incoming singularity and the sign of the new curve.
  Int n_new, s_new;
  if (s >= 0) {
    n_new = d * L.n + R.n;
    s_new = -d;
  } else {
    Int t = d * L.n - R.n;
    if (t == 0)
      throw Degenerate("antiflip at curve " + std::to_string(i) + " of " +
                       print_chain(w) + " degenerates");
    n_new = abs(t);
    s_new = (t > 0) ? -d : d;
  }

  // Solve n'(c'-1) + a' = (n' a_L + s') / n_L for the new vertex and curve.
  WahlSingularity p_new;
  Int c_new;
  Int num = n_new * L.a + s_new;
  if (num % L.n != 0)
    throw NonIntegral("antiflip at curve " + std::to_string(i) + " of " +
                      print_chain(w) + ": index solve is not integral");
  Int A = num / L.n;
  if (n_new == 1) {
    p_new = WahlSingularity::smooth();
    c_new = A + 1;  // a' = 1 forced; A = c' - 1
  } else {
    Int a_new = mod_floor(A - 1, n_new) + 1;
    c_new = 1 + (A - a_new) / n_new;
    if (a_new >= n_new || gcd(n_new, a_new) != 1)
      throw ConstructionFailed("antiflip produced an invalid index pair [" +
                               n_new.str() + "|" + a_new.str() + "]");
    p_new = make_wahl(n_new, a_new);
  }
  if (c_new < 1)
    throw ConstructionFailed("antiflip produced curve multiplicity " + c_new.str());
  if (s_new < 0 && c_new != 1)
    throw FormulaMismatch("anti-ample antiflipped curve with multiplicity != 1");
  if (s == 0 && p_new != R)
    throw FormulaMismatch("K-trivial antiflip changed the singularity content");

  std::vector<WahlSingularity> sings = w.sings;
  std::vector<Int> curves = w.curves;
  sings[i - 1] = p_new;
  sings[i] = L;
  curves[i - 1] = c_new;

  // Conservation of K across the move fixes both neighbouring curves:
  // K.Gamma_{i-1} = K'.(Gamma'_{i-1} + Gamma'_i) gives the left update,
  // K.(Gamma_i + Gamma_{i+1}) = K'.Gamma'_{i+1} the right one.
  if (i >= 2) {
    Int lnum = s_left_old * n_new - s_new * w.sings[i - 2].n;
    if (lnum % L.n != 0)
      throw NonIntegral("antiflip left neighbour update is not integral");
    curves[i - 2] = curve_from_delta(w.sings[i - 2], p_new, lnum / L.n);
  }
  if (i + 1 <= r) {
    Int rnum = s_right_old * L.n + s * w.sings[i + 1].n;
    if (rnum % R.n != 0)
      throw NonIntegral("antiflip right neighbour update is not integral");
    curves[i] = curve_from_delta(L, w.sings[i + 1], rnum / R.n);
  }

  WahlResolution out = make_resolution(w.target, std::move(sings), std::move(curves));
  if (delta_signed(out, i) != s_new)
    throw FormulaMismatch("antiflip did not realize the expected signed intersection");
  return out;
}

WahlResolution left_antiflip(const WahlResolution& w, std::size_t i) {
  const std::size_t r = w.r();
  if (i < 1 || i > r) throw Error("antiflip index out of range");
  return reversed(right_antiflip(reversed(w), r + 1 - i));
}

WahlResolution apply_step(const WahlResolution& w, const BraidStep& step) {
  return step.dir == Direction::Right ? right_antiflip(w, step.index)
                                      : left_antiflip(w, step.index);
}

WahlResolution apply_word(const WahlResolution& w, const BraidWord& word) {
  WahlResolution cur = w;
  for (const BraidStep& step : word) cur = apply_step(cur, step);
  return cur;
}

BraidWord mn_schedule(std::size_t m) {
  BraidWord word;
  word.reserve(m * (m + 1) / 2);
  for (std::size_t j = 1; j <= m; ++j)
    for (std::size_t idx = m; idx >= j; --idx)
      word.push_back(BraidStep{Direction::Right, idx});
  return word;
}

std::string format_braid_word(const BraidWord& word) {
  std::ostringstream os;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) os << ',';
    os << (word[i].dir == Direction::Right ? 'R' : 'L') << word[i].index;
  }
  return os.str();
}

BraidWord parse_braid_word(const std::string& text) {
  detail::Cursor c{text};
  BraidWord out;
  auto step = [&] {
    Direction dir;
    if (c.accept('R'))
      dir = Direction::Right;
    else if (c.accept('L'))
      dir = Direction::Left;
    else
      throw SyntaxError("expected 'R' or 'L'", c.pos);
    Int idx = c.integer();
    if (idx < 1) throw SyntaxError("braid index must be >= 1", c.pos);
    out.push_back(BraidStep{dir, static_cast<std::size_t>(idx)});
  };
  step();
  while (c.accept(',')) step();
  c.finish();
  return out;
}

BraidRelationResult check_braid_relations(const WahlResolution& w,
                                          std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  if (i == j || i < 1 || j > w.r()) return {true, true};

  BraidWord lhs, rhs;
  if (j == i + 1) {
    lhs = {{Direction::Right, i}, {Direction::Right, j}, {Direction::Right, i}};
    rhs = {{Direction::Right, j}, {Direction::Right, i}, {Direction::Right, j}};
  } else {
    lhs = {{Direction::Right, i}, {Direction::Right, j}};
    rhs = {{Direction::Right, j}, {Direction::Right, i}};
  }
  try {
    return {apply_word(w, lhs) == apply_word(w, rhs), false};
  } catch (const Degenerate&) {
    return {true, true};
  }
}

BraidSampleSummary sample_braid_relations(const Int& delta_max,
                                          std::size_t count,
                                          std::uint64_t seed) {
  BraidSampleSummary summary;
  std::mt19937_64 rng(seed);
  const long dmax = static_cast<long>(delta_max);
  std::uniform_int_distribution<long> pick_delta(2, dmax);

  std::map<std::pair<Int, Int>, std::vector<WahlResolution>> cache;
  auto resolutions_of = [&](const Fraction& f) -> const std::vector<WahlResolution>& {
    auto key = std::make_pair(f.delta, f.omega);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<WahlResolution> res;
    for (const ZeroFraction& z : enumerate_zero_fractions(f))
      res.push_back(m_resolution(f, z));
    return cache.emplace(std::move(key), std::move(res)).first->second;
  };

  std::size_t attempts = 0;
  const std::size_t max_attempts = count * 1000 + 1000;
  while (summary.checked < count && attempts++ < max_attempts) {
    Int delta(pick_delta(rng));
    std::uniform_int_distribution<long> pick_omega(1, static_cast<long>(delta) - 1);
    Int omega(pick_omega(rng));
    if (gcd(delta, omega) != 1) continue;
    const auto& res = resolutions_of(make_fraction(delta, omega));
    if (res.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick_res(0, res.size() - 1);
    const WahlResolution& w = res[pick_res(rng)];
    if (w.r() < 2) continue;
    std::uniform_int_distribution<std::size_t> pick_curve(1, w.r());
    std::size_t i = pick_curve(rng), j = pick_curve(rng);
    if (i == j) continue;
    BraidRelationResult result = check_braid_relations(w, i, j);
    ++summary.checked;
    if (result.vacuous) ++summary.vacuous;
    if (!result.holds) ++summary.failed;
    continue;
  }
  return summary;
}

}  // namespace cqsres
