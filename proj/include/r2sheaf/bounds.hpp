#pragma once

// Inequalities on c3 and the vanishing thresholds for twists of F, as exact
// predicates and minimal-integer solvers.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "r2sheaf/chow.hpp"
#include "r2sheaf/rational.hpp"
#include "r2sheaf/sheaf.hpp"

namespace r2sheaf {

enum class Comparison { Less, LessEqual, Greater, GreaterEqual };

std::string to_string(Comparison c);
bool compare(const Rational& lhs, Comparison c, const Rational& rhs);

struct BoundReport {
  std::string name;
  bool holds = false;
  Rational lhs;
  Comparison comparison = Comparison::LessEqual;
  Rational rhs;
  std::optional<Integer> threshold;
  // Inputs echoed back, and hypotheses that were assumed rather than checked.
  std::vector<std::string> context;
  std::vector<std::string> assumed;

  Rational slack() const { return rhs - lhs; }
};

// c3 <= S^2 - 3S + (a - k) S, for F with a section vanishing on a curve.
BoundReport section_c3_bound(const Rank2Sheaf& f);

// Riemann-Roch criterion for F (x) O(t)^n to have a section (needs k = 0 and
// H^2(F (x) L^n) = 0, which is recorded as assumed). Throws
// PreconditionViolation if k != 0 or t < 1.
BoundReport section_exists_rr(const Rank2Sheaf& f, std::int64_t n, std::int64_t t);

// The printed bound (S-3-2n+2n^2 d)(S+2n^2 d) + aS + 2n^2 a t^2 N with d = t^3 N.
Rational firstbound_c3(const NumericalThreefold& x, std::int64_t n, const Rational& S, std::int64_t t);

// The bound obtained by applying section_c3_bound to F(nt) with k = 0 and
// t = 1 polarization, for comparison with firstbound_c3.
Rational firstbound_c3_via_twist(const NumericalThreefold& x, std::int64_t n, const Rational& S,
                                 std::int64_t t);

// Minimal n for which H^2(F(n)) = 0 is guaranteed for a semistable F with
// c1 = 0 on a quintic: 31 for S <= 19, else the least n with
// n >= 4S - 27 + sqrt(60S - 525)/2. Throws InvalidInput for S < 1.
Integer oldbound_threshold(const Integer& S);
inline Integer oldbound_threshold(std::int64_t S) { return oldbound_threshold(Integer(static_cast<long>(S))); }

struct PThreshold {
  Integer p;           // least p with p d >= c3
  Rational c3;
  bool strict = false;  // p d > c3, so h^2(F (x) omega (p)) = 0; otherwise only <= 1
};

// Least twist p with c1(O(p)) c2(F) >= c3 for the curve's sheaf on a degree r
// hypersurface; equivalently p >= (2pa-2)/d + 5 - r - k.
PThreshold p_threshold(std::int64_t r, std::int64_t k, const Rational& d, std::int64_t pa);

// pa <= (S^2 - 3S + 2)/2 for a curve on a canonically trivial threefold.
BoundReport cy_genus_bound(const Rational& S, std::int64_t pa);

}  // namespace r2sheaf
