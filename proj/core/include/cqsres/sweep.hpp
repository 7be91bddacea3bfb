#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cqsres/int_types.hpp"

namespace cqsres {

struct SweepOptions {
  Int delta_max = 100;
  std::uint64_t seed = 0x5eed5eedULL;
  unsigned jobs = 1;                // 0 = hardware concurrency
  std::size_t braid_samples = 0;    // seeded relation checks after the sweep
  bool check_oracle = true;         // blow-up enumeration cross-check
};

struct SweepSummary {
  std::uint64_t pairs = 0;
  std::uint64_t components = 0;
  std::uint64_t artin_components = 0;
  std::uint64_t braid_checked = 0;
  std::uint64_t braid_vacuous = 0;
  std::vector<std::string> failures;
};

// For every (delta, omega) with delta <= delta_max: enumerate components,
// validate every M- and N-resolution, replay the antiflip schedule and
// compare with the directly constructed N-resolution, check the rank
// identity, rebuild hom counts from arrows by path counting, check that the
// quiver is arrowless exactly for T-singularity targets with M == N, check
// that exactly one component is Artin, and compare the zero-fraction
// enumeration against the blow-up oracle. Failures are recorded, not thrown.
SweepSummary run_sweep(const SweepOptions& options);

std::string format_sweep_summary(const SweepSummary& s);

}  // namespace cqsres
