#pragma once

// Euler characteristics: the general Riemann-Roch route and the closed forms
// for hypersurfaces in P^4, plus Ext bookkeeping from the local-to-global
// sequence.

#include <cstdint>
#include <functional>

#include "r2sheaf/chow.hpp"
#include "r2sheaf/rational.hpp"
#include "r2sheaf/sheaf.hpp"

namespace r2sheaf {

struct ChernInput {
  int rank = 2;  // 1 or 2
  std::int64_t k = 0;
  Rational S;
  Rational c3;
  NumericalThreefold x;

  // Throws InvalidInput unless rank is 1 or 2 and rank-1 data has S = c3 = 0.
  void validate() const;
};

ChernInput chern_input(const Rank2Sheaf& f);
ChernInput line_bundle_input(const NumericalThreefold& x, std::int64_t m);

// Hirzebruch-Riemann-Roch on a threefold, evaluated in rank-one numerics.
Rational chi_rr(const ChernInput& c);
inline Rational chi_rr(const Rank2Sheaf& f) { return chi_rr(chern_input(f)); }

// chi(F) on a degree-r hypersurface for F with det O(k) and a section
// vanishing on a curve of degree d and arithmetic genus pa.
Rational chi_closed_form(std::int64_t r, std::int64_t k, const Rational& d, const Rational& pa);

// chi(F*) for the same data, with binomials read as degree-4 polynomials.
Rational chi_dual_formula(std::int64_t r, std::int64_t k, const Rational& pa);
// Same formula with a caller-supplied "n choose 4".
using BinomialFn = std::function<Integer(const Integer&)>;
Rational chi_dual_formula(std::int64_t r, std::int64_t k, const Rational& pa, const BinomialFn& binom);

// Dimensions of Ext^i(F, G) constrained by
//   Ext^0 = H^0(Hom), Ext^3 = H^3(Hom) and
//   0 -> H^1(Hom) -> Ext^1 -> H^0(Ext^1-sheaf) -> H^2(Hom) -> Ext^2 -> 0.
struct ExtLedger {
  std::int64_t ext0 = 0;
  std::int64_t ext3 = 0;
  std::int64_t ext1_min = 0;
  std::int64_t ext1_max = 0;
  // ext2 = ext1 + ext2_offset, where ext2_offset = h2 - h1 - e1.
  std::int64_t ext2_offset = 0;

  std::int64_t ext2_for(std::int64_t ext1) const { return ext1 + ext2_offset; }
  bool admissible(std::int64_t ext1) const { return ext1 >= ext1_min && ext1 <= ext1_max; }
};

// h0..h3 are dim H^i(X, Hom(F,G)); e1 = dim H^0(X, Ext^1(F,G)).
// Throws InvalidInput on negative dimensions.
ExtLedger ext_constraints(std::int64_t h0, std::int64_t h1, std::int64_t h2, std::int64_t h3,
                          std::int64_t e1);

}  // namespace r2sheaf
