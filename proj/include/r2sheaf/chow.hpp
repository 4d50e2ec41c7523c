#pragma once

// Numerical intersection theory on a smooth projective threefold X whose
// Picard group is generated by one ample class h. Every divisor is an integer
// multiple of h and every curve class is recorded through its pairing with h.

#include <cstdint>
#include <optional>
#include <string>

#include "r2sheaf/rational.hpp"

namespace r2sheaf {

struct NumericalThreefold {
  std::int64_t N = 1;  // h^3
  std::int64_t a = 0;  // c1(X) = a*h
  Rational b;          // c2(X).h
  std::string label;
  // Set when X is a smooth hypersurface of this degree in P^4.
  std::optional<std::int64_t> hypersurface_degree;

  bool is_hypersurface() const { return hypersurface_degree.has_value(); }
  bool is_fano() const { return a > 0; }
  bool is_canonically_trivial() const { return a == 0; }

  // c1(X)c2(X) and c1(X)^3.
  Rational c1c2() const { return Rational(a) * b; }
  Rational c1_cubed() const { return Rational(a * a * a * N); }
};

bool operator==(const NumericalThreefold& x, const NumericalThreefold& y);

// X = (N, a, b) with no hypersurface structure. Throws InvalidInput if N < 1.
NumericalThreefold make_threefold(std::int64_t N, std::int64_t a, Rational b,
                                  std::string label = {});

// Smooth hypersurface of degree r in P^4: c(T_X) is the truncation of
// (1+h)^5 / (1+r h), giving N = r, a = 5 - r, b = r(10 - 5r + r^2).
NumericalThreefold hypersurface(std::int64_t r);

// chi(O_X) = c1(X)c2(X)/24.
Rational chi_structure_sheaf(const NumericalThreefold& x);

// n(n-1)(n-2)(n-3)/24 for every integer n (so binom_poly(-1) == 1).
Integer binom_poly(const Integer& n);
inline Integer binom_poly(std::int64_t n) { return binom_poly(Integer(static_cast<long>(n))); }

// chi(O_X(m)) on a degree-r hypersurface in P^4.
Integer chi_line_bundle(std::int64_t r, std::int64_t m);

}  // namespace r2sheaf
