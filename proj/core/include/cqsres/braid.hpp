#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cqsres/chain.hpp"
#include "cqsres/int_types.hpp"

namespace cqsres {

enum class Direction { Right, Left };

struct BraidStep {
  Direction dir;
  std::size_t index;  // curve index, 1-based

  friend bool operator==(const BraidStep& x, const BraidStep& y) {
    return x.dir == y.dir && x.index == y.index;
  }
};

using BraidWord = std::vector<BraidStep>;

// Antiflip at curve i (1-based). The right move replaces (P_{i-1}, P_i)
// by (P', P_{i-1}) where P' is determined by the signed intersection
// s = n_{i-1} n_i K.Gamma_i:
//   s >= 0: n' = |s| n_{i-1} + n_i, new signed intersection -|s|;
//   s <  0: n' = | |s| n_{i-1} - n_i |, sign flipping to +|s| exactly when
//           |s| n_{i-1} < n_i; n' = 0 throws Degenerate.
// a' and the new multiplicity come from solving n'(c'-1) + a' = A with
// A = (n' a_{i-1} + s') / n_{i-1}, and the two adjacent curves are
// recomputed so that K.Gamma is conserved across the move:
//   K.Gamma_{i-1} (old) = K.(Gamma'_{i-1} + Gamma'_i) (new), and
//   K.(Gamma_i + Gamma_{i+1}) (old) = K.Gamma'_{i+1} (new).
// The target is unchanged; this is verified on every call.
WahlResolution right_antiflip(const WahlResolution& w, std::size_t i);

// Mirror image of the right move: conjugate by chain reversal, which sends
// [n|a] to [n|n-a] and the target (delta, omega) to (delta, omega^{-1}).
WahlResolution left_antiflip(const WahlResolution& w, std::size_t i);

// The whole chain read backwards (used by left_antiflip; also handy in tests).
WahlResolution reversed(const WahlResolution& w);

WahlResolution apply_step(const WahlResolution& w, const BraidStep& step);
WahlResolution apply_word(const WahlResolution& w, const BraidWord& word);

// The fixed word of m(m+1)/2 right moves taking an M-resolution with m
// curves to its N-resolution: rounds j = 1..m of indices m, m-1, ..., j.
BraidWord mn_schedule(std::size_t m);

// "R2,R1,R2"
std::string format_braid_word(const BraidWord& word);
BraidWord parse_braid_word(const std::string& text);

struct BraidRelationResult {
  bool holds;    // both sides agree (vacuously true when not applicable)
  bool vacuous;  // some step was undefined (Degenerate) or indices invalid
};

// Far apart (|i-j| >= 2): R_i R_j == R_j R_i.
// Adjacent: R_i R_{i+1} R_i == R_{i+1} R_i R_{i+1}.
// i == j or indices out of range: vacuous.
BraidRelationResult check_braid_relations(const WahlResolution& w,
                                          std::size_t i, std::size_t j);

struct BraidSampleSummary {
  std::uint64_t checked = 0;
  std::uint64_t vacuous = 0;
  std::uint64_t failed = 0;
};

// Seeded random relation checks over M-resolutions of fractions with
// delta <= delta_max (components are cached across samples). Deterministic
// for a fixed (delta_max, count, seed).
BraidSampleSummary sample_braid_relations(const Int& delta_max,
                                          std::size_t count,
                                          std::uint64_t seed);

}  // namespace cqsres
