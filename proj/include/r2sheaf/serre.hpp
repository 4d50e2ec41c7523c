#pragma once

// Numerical shadow of the Serre correspondence between rank 2 reflexive
// sheaves with a section and Cohen-Macaulay curves:
//   c3(F) = 2 pa(C) - 2 + c1(X)c2(F) - c1(F)c2(F) = 2 pa - 2 + (a - k) d.

#include <cstdint>
#include <string>

#include "r2sheaf/chow.hpp"
#include "r2sheaf/rational.hpp"
#include "r2sheaf/sheaf.hpp"

namespace r2sheaf {

struct CurveData {
  Rational d;  // degree, equal to S when the polarization is h
  std::int64_t pa = 0;
  // Asserted flags; the numbers above cannot confirm them.
  bool connected = false;
  bool rational_curve = false;
  bool is_line = false;

  // Throws InvalidInput if d <= 0.
  void validate() const;
};

Rational c3_from_curve(const NumericalThreefold& x, std::int64_t k, const CurveData& c);

// The sheaf (F, s) whose section vanishes on C with det F = O(k).
// Throws InconsistentData when the resulting c3 is negative.
Rank2Sheaf sheaf_from_curve(const NumericalThreefold& x, std::int64_t k, const CurveData& c);

struct GenusResult {
  Rational pa;
  bool consistent = true;  // pa is a non-negative integer
  std::string warning;
};

// pa = (c3 - (a - k) d + 2) / 2.
GenusResult genus_from_c3(const NumericalThreefold& x, std::int64_t k, const Rational& d,
                          const Rational& c3);

}  // namespace r2sheaf
