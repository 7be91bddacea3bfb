#pragma once

#include <vector>

#include "cqsres/chain.hpp"
#include "cqsres/int_types.hpp"
#include "cqsres/quiver.hpp"
#include "cqsres/zerofrac.hpp"

namespace cqsres {

// The delta vector of a component, one entry per curve of its M-resolution,
// together with the auxiliary eps values at the special positions. delta is
// 0 everywhere except at the partial sums of the d-vector groups, where
// (delta, eps) is the evaluation of the window of b strictly between
// consecutive group positions (empty window giving (1, 0)).
struct DeltaVector {
  std::vector<Int> delta;
  std::vector<Int> eps;  // same length; 0 off the special positions
};

DeltaVector delta_vector(const ZeroFraction& z);

// The M-resolution of the component indexed by z: d = b - k groups the
// r + 1 = sum(d) chain positions into runs of equal Wahl singularities,
// the g-th singularity being read off the blow-down of [k_1 .. k_{i_g - 1}]
// (empty or fully contracting prefix = smooth end). Curve multiplicities
// are recovered from the delta vector.
WahlResolution m_resolution(const Fraction& f, const ZeroFraction& z);

// The N-resolution of the same component: anti-nef model with every signed
// intersection <= 0. Group g now evaluates the unmodified prefix
// [b_1 .. b_{i_g - 1}], and groups are laid out from the right end leftwards.
// Verified against the M-resolution by delta reversal and by comparing all
// partial contractions; ConstructionFailed on any mismatch.
WahlResolution n_resolution(const Fraction& f, const ZeroFraction& z);

// sum (c_i - 1) + #(non-smooth chain positions).
Int component_dimension(const WahlResolution& mres);

struct ComponentReport {
  ZeroFraction zf;
  DeltaVector delta;
  WahlResolution m_res;
  WahlResolution n_res;
  Quiver quiver;
  Int dimension;
  bool artin = false;        // M-resolution is the minimal resolution
  bool du_val = false;       // conventional k = [0] component
};

// All deformation components of f, in lexicographic order of k.
std::vector<ComponentReport> components(const Fraction& f);

}  // namespace cqsres
