#pragma once

// Numerical Chern data of a rank-2 reflexive sheaf F on a Picard-rank-one
// threefold: c1(F) = k*h, S = c2(F).h and c3(F).

#include <cstdint>
#include <optional>

#include "r2sheaf/chow.hpp"
#include "r2sheaf/rational.hpp"

namespace r2sheaf {

class Rank2Sheaf {
 public:
  // Throws InconsistentData when c3 < 0, or when claimed_locally_free is set
  // and disagrees with c3 == 0.
  static Rank2Sheaf make(NumericalThreefold x, std::int64_t k, Rational S, Rational c3,
                         std::optional<bool> claimed_locally_free = std::nullopt);

  const NumericalThreefold& threefold() const { return x_; }
  std::int64_t k() const { return k_; }
  const Rational& S() const { return S_; }
  const Rational& c3() const { return c3_; }
  bool reflexive() const { return true; }
  bool locally_free() const { return c3_ == 0; }

  // Derived pairings.
  Rational c1c2() const { return Rational(k_) * S_; }
  Rational c1X_c2() const { return Rational(x_.a) * S_; }
  Rational c1_cubed() const { return Rational(k_ * k_ * k_ * x_.N); }

  friend bool operator==(const Rank2Sheaf& f, const Rank2Sheaf& g) {
    return f.x_ == g.x_ && f.k_ == g.k_ && f.S_ == g.S_ && f.c3_ == g.c3_;
  }

 private:
  Rank2Sheaf(NumericalThreefold x, std::int64_t k, Rational S, Rational c3)
      : x_(std::move(x)), k_(k), S_(std::move(S)), c3_(std::move(c3)) {}

  NumericalThreefold x_;
  std::int64_t k_;
  Rational S_;
  Rational c3_;
};

// F(t): k' = k + 2t, S' = S + t k N + t^2 N, c3 unchanged.
Rank2Sheaf twist(const Rank2Sheaf& f, std::int64_t t);

// F* = F (x) det(F)^-1 for rank 2 reflexive F: k' = -k, S' = S, c3 unchanged.
Rank2Sheaf dual(const Rank2Sheaf& f);

// The unique m with c1(F(m)) = c1(omega_X), present iff -a-k is even.
std::optional<std::int64_t> canonical_parity(const Rank2Sheaf& f);

// c1(X).Delta(F) with Delta = 4 c2 - c1^2, i.e. 4aS - a k^2 N.
Rational delta_pair(const Rank2Sheaf& f);

}  // namespace r2sheaf
