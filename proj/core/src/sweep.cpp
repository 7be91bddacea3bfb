#include "cqsres/sweep.hpp"

#include <atomic>
#include <mutex>
#include <sstream>
#include <thread>

#include "cqsres/braid.hpp"
#include "cqsres/components.hpp"
#include "cqsres/errors.hpp"
#include "cqsres/quiver.hpp"
#include "cqsres/zerofrac.hpp"

namespace cqsres {

namespace {

// hom == A + A^2 + ... by explicit path counting; the quiver is acyclic
// (all arrows point down the chain), so the series terminates.
bool paths_reproduce_homs(const Quiver& q) {
  const std::size_t v = q.ranks.size();
  std::vector<std::vector<Int>> total = q.arrows, power = q.arrows;
  for (std::size_t step = 2; step < v; ++step) {
    std::vector<std::vector<Int>> next(v, std::vector<Int>(v, 0));
    for (std::size_t i = 0; i < v; ++i)
      for (std::size_t k = 0; k < i; ++k) {
        if (power[i][k] == 0) continue;
        for (std::size_t j = 0; j < k; ++j)
          next[i][j] += power[i][k] * q.arrows[k][j];
      }
    power = std::move(next);
    for (std::size_t i = 0; i < v; ++i)
      for (std::size_t j = 0; j < i; ++j) total[i][j] += power[i][j];
  }
  return total == q.hom;
}

void check_pair(const Fraction& f, bool check_oracle, SweepSummary& local) {
  std::vector<ComponentReport> reps = components(f);
  local.components += reps.size();

  if (check_oracle) {
    std::vector<HJString> expect;
    for (const ComponentReport& rep : reps) expect.push_back(rep.zf.k);
    std::vector<HJString> got = reference::zero_fractions_by_blowup(hj_dual(f));
    if (got != expect) {
      local.failures.push_back(format_fraction(f) +
                               ": blow-up oracle disagrees with the enumeration");
      return;
    }
  }

  std::size_t artin = 0;
  for (const ComponentReport& rep : reps) {
    if (rep.artin) ++artin;

    if (!rank_identity(rep.m_res, rep.n_res)) {
      local.failures.push_back(format_fraction(f) + " " + format_hj(rep.zf.k) +
                               ": rank identity fails");
      continue;
    }
    if (!paths_reproduce_homs(rep.quiver)) {
      local.failures.push_back(format_fraction(f) + " " + format_hj(rep.zf.k) +
                               ": path counting does not reproduce hom");
      continue;
    }

    // The antiflip schedule must land exactly on the N-resolution.
    WahlResolution replayed = apply_word(rep.m_res, mn_schedule(rep.m_res.r()));
    if (replayed != rep.n_res) {
      local.failures.push_back(format_fraction(f) + " " + format_hj(rep.zf.k) +
                               ": schedule replay does not reach the N-resolution");
      continue;
    }

    // Arrowless quivers occur exactly for T-singularity targets whose
    // M- and N-resolutions coincide.
    bool arrowless = true;
    for (const auto& row : rep.quiver.arrows)
      for (const Int& x : row)
        if (x != 0) arrowless = false;
    bool t_sing = parse_T(f).has_value() && rep.m_res == rep.n_res;
    if (arrowless != t_sing) {
      local.failures.push_back(format_fraction(f) + " " + format_hj(rep.zf.k) +
                               ": arrowless/T-singularity correspondence fails");
      continue;
    }
  }
  local.artin_components += artin;
  if (artin != 1)
    local.failures.push_back(format_fraction(f) + ": " + std::to_string(artin) +
                             " Artin components");
}

}  // namespace

SweepSummary run_sweep(const SweepOptions& options) {
  std::vector<Fraction> pairs;
  for (Int delta = 2; delta <= options.delta_max; ++delta)
    for (Int omega = 1; omega < delta; ++omega)
      if (gcd(delta, omega) == 1) pairs.push_back(Fraction{delta, omega});

  unsigned jobs = options.jobs;
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, pairs.size() ? pairs.size() : 1);

  SweepSummary summary;
  summary.pairs = pairs.size();

  std::atomic<std::size_t> cursor{0};
  std::mutex merge_mutex;
  auto worker = [&] {
    SweepSummary local;
    for (;;) {
      std::size_t at = cursor.fetch_add(1);
      if (at >= pairs.size()) break;
      const Fraction& f = pairs[at];
      try {
        check_pair(f, options.check_oracle, local);
      } catch (const Error& e) {
        local.failures.push_back(format_fraction(f) + ": " + e.what());
      }
    }
    std::lock_guard<std::mutex> lock(merge_mutex);
    summary.components += local.components;
    summary.artin_components += local.artin_components;
    for (std::string& s : local.failures) summary.failures.push_back(std::move(s));
  };

  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(worker);
    for (std::thread& t : threads) t.join();
  }

  if (options.braid_samples > 0) {
    BraidSampleSummary braid =
        sample_braid_relations(options.delta_max, options.braid_samples, options.seed);
    summary.braid_checked = braid.checked;
    summary.braid_vacuous = braid.vacuous;
    if (braid.failed > 0)
      summary.failures.push_back(std::to_string(braid.failed) +
                                 " braid relation checks failed");
    if (braid.checked < options.braid_samples)
      summary.failures.push_back("braid sampling exhausted its attempt budget");
  }
  return summary;
}

std::string format_sweep_summary(const SweepSummary& s) {
  std::ostringstream os;
  os << "pairs: " << s.pairs << '\n';
  os << "components: " << s.components << '\n';
  if (s.braid_checked > 0) {
    os << "braid checks: " << s.braid_checked << " (" << s.braid_vacuous
       << " vacuous)" << '\n';
  }
  os << "failures: " << s.failures.size() << '\n';
  for (const std::string& f : s.failures) os << "  " << f << '\n';
  return os.str();
}

}  // namespace cqsres
