#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cqsres/braid.hpp"
#include "cqsres/chain.hpp"
#include "cqsres/int_types.hpp"

namespace cqsres {

// Numerical shadow of the exceptional collection attached to an
// N-resolution. Vertex k corresponds to chain position k of the
// N-resolution (0 = leftmost), with rank n_k; smooth positions carry a
// rank-1 vertex. hom[i][j] and arrows[i][j] are lower triangular (i > j):
// all morphisms point from right to left along the chain.
struct Quiver {
  std::vector<Int> ranks;
  std::vector<std::vector<Int>> hom;
  std::vector<std::vector<Int>> arrows;
};

// hom(E_i, E_j) = n_j a_i - n_i a_j for i > j, where smooth positions enter
// as (1, 1). Checked against the additive form
//   n_i n_j sum_{m=j+1..i} delta_m / (n_{m-1} n_m)
// on every call; entries must be >= 0.
std::vector<std::vector<Int>> hom_dims(const WahlResolution& nres);

// Invert the unipotent path-count relation: A[i][j] = H[i][j] -
// sum_{i>k>j} A[i][k] H[k][j]. Negative counts throw NegativeArrowCount.
std::vector<std::vector<Int>> arrows_from_homs(const std::vector<std::vector<Int>>& hom);

Quiver build_quiver(const WahlResolution& nres);

// chi(E_i, E_{i-1}) = -delta_signed: the Euler pairing of consecutive
// vertices is minus the signed intersection at the connecting curve.
Int euler_pairing(const WahlResolution& nres, std::size_t i);

// delta == sum_i n_i(M) * n_{r-i}(N).
bool rank_identity(const WahlResolution& mres, const WahlResolution& nres);

// Witness for the question "is there an extremal P-resolution with
// singularity indices a, b and K.Gamma = c / (a b)": a one-curve chain
// with signed intersection exactly +c. Index 0 means a smooth end; such
// witnesses exist iff c equals the other index, and carry no chain.
struct ExtremalWitness {
  Int a, b;
  Int eps_a, eps_b;  // 0 against a smooth end
  Int lambda;        // >= 2; curve multiplicity is lambda + 1, lambda, or
                     // lambda - 1 according to how many ends are smooth
  Int c;
  std::optional<WahlResolution> chain;
  bool degenerate = false;  // a == 0 or b == 0
};

std::optional<ExtremalWitness> check_Q_abc(const Int& a, const Int& b, const Int& c);

// All c in [1, c_max] realizable for the pair (a, b).
std::vector<Int> enumerate_c(const Int& a, const Int& b, const Int& c_max);

// The family of examples with M-resolution
//   [q|q-1] -1- [p|1] -1- ... -1- [p|1]   (nine p-vertices),
// requiring p >= 3, q >= 2 coprime and q not divisible by 3. The N-resolution
// is reached by the full antiflip schedule; its first nine vertices share
// one continued-fraction pattern and the last is [q|q-1] again. The Gram
// matrix of the resulting rank-2 lattice is quoted, not computed.
struct DolgachevReport {
  Int p, q;
  WahlResolution m_res;
  WahlResolution n_res;
  std::vector<Int> delta;
  Quiver quiver;
  std::array<std::array<Int, 2>, 2> gram_quoted;
};

DolgachevReport dolgachev(const Int& p, const Int& q);

}  // namespace cqsres
