#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cqsres/hj.hpp"
#include "cqsres/int_types.hpp"
#include "cqsres/wahl.hpp"

namespace cqsres {

// A chain P_0 -Gamma_1- P_1 - ... -Gamma_r- P_r of Wahl singularities (or
// smooth points) joined by r curves, together with the cyclic quotient
// singularity the whole configuration contracts to. curves[i-1] is the
// multiplicity c_i >= 1 of Gamma_i.
//
// Orientation: P_0 is the left end. The full string of the chain is
//   wahl_cf(P_0) ++ [c_1] ++ wahl_cf(P_1) ++ ... ++ [c_r] ++ wahl_cf(P_r)
// and blows down to hj_expand(target). For a singularity written [n|a],
// the end of its string adjacent to the curve on its LEFT carries the
// discrepancy -(n-a)/n and the end adjacent to the curve on its RIGHT
// carries -a/n. Reversing a chain therefore swaps a and n-a.
struct WahlResolution {
  Fraction target;
  std::vector<WahlSingularity> sings;  // size r + 1
  std::vector<Int> curves;             // size r

  std::size_t r() const { return curves.size(); }

  friend bool operator==(const WahlResolution& x, const WahlResolution& y) {
    return x.target == y.target && x.sings == y.sings && x.curves == y.curves;
  }
  friend bool operator!=(const WahlResolution& x, const WahlResolution& y) {
    return !(x == y);
  }
};

// Validates shapes, singularity pairs, curve multiplicities >= 1, and that
// the chain contracts to `target`; throws ConstructionFailed otherwise.
WahlResolution make_resolution(const Fraction& target,
                               std::vector<WahlSingularity> sings,
                               std::vector<Int> curves);

// Concatenated string of the whole chain (see orientation note above).
HJString full_string(const WahlResolution& w);

// Blow the full string down; throws NotContractible if the result is not
// canonical. Empty result means the smooth point.
Fraction contracts_to(const WahlResolution& w);

// Same for the sub-chain P_i ... P_j (0 <= i <= j <= r).
Fraction partial_contraction(const WahlResolution& w, std::size_t i, std::size_t j);

// Discrepancies d_k of the exceptional curves of the minimal resolution of
// f, solved exactly from the intersection matrix. All lie in (-1, 0], and
// are 0 precisely in the Du Val case omega = delta - 1.
std::vector<Rat> discrepancies(const Fraction& f);

// K . Gamma for a curve of multiplicity c between L and R:
//   (c - 2) + a_L/n_L + (n_R - a_R)/n_R,
// smooth neighbours contributing nothing. The fractional parts are the
// discrepancies of the adjacent ends of wahl_cf, read off the exact solve
// and checked once per singularity against the closed form.
Rat k_dot_gamma(const WahlSingularity& L, const Int& c, const WahlSingularity& R);

// n_{i-1} n_i K.Gamma_i for the i-th curve (1-based). Integral for every
// chain of Wahl singularities; NonIntegral guards the division.
Int delta_signed(const WahlResolution& w, std::size_t i);

// Inverse of delta_signed in the curve multiplicity: the unique c >= 1 with
// n_L n_R K.Gamma = s, if it exists.
Int curve_from_delta(const WahlSingularity& L, const WahlSingularity& R, const Int& s);

// Chain grammar: chain := node ("-" "(" INT ")" "-" node)*
//                node  := "[" INT "|" INT "]" | "*"
// e.g. "[2|1]-(1)-[3|1]" or "*-(3)-[2|1]-(2)-*".
struct ChainParts {
  std::vector<WahlSingularity> sings;
  std::vector<Int> curves;
};
ChainParts parse_chain(const std::string& text);

std::string print_chain(const WahlResolution& w);
std::string print_chain(const std::vector<WahlSingularity>& sings,
                        const std::vector<Int>& curves);

// The same chain rendered with continued-fraction strings for the vertices,
// e.g. "[4]-(1)-[5,2]". Smooth points still render as "*".
std::string print_chain_cf(const WahlResolution& w);

}  // namespace cqsres
