#include "r2sheaf/sheaf.hpp"

#include <string>
#include <utility>

#include "r2sheaf/errors.hpp"

namespace r2sheaf {

Rank2Sheaf Rank2Sheaf::make(NumericalThreefold x, std::int64_t k, Rational S, Rational c3,
                            std::optional<bool> claimed_locally_free) {
  if (c3 < 0) {
    throw InconsistentData("c3 = " + to_string(c3) + " < 0: no rank 2 reflexive sheaf has negative c3");
  }
  if (claimed_locally_free && *claimed_locally_free != (c3 == 0)) {
    throw InconsistentData(*claimed_locally_free
                               ? "sheaf claimed locally free but c3 = " + to_string(c3) + " > 0"
                               : "sheaf claimed not locally free but c3 = 0");
  }
  return Rank2Sheaf(std::move(x), k, std::move(S), std::move(c3));
}

Rank2Sheaf twist(const Rank2Sheaf& f, std::int64_t t) {
  const auto& x = f.threefold();
  Rational S = f.S() + Rational(t * f.k() * x.N) + Rational(t * t * x.N);
  return Rank2Sheaf::make(x, f.k() + 2 * t, std::move(S), f.c3());
}

Rank2Sheaf dual(const Rank2Sheaf& f) { return Rank2Sheaf::make(f.threefold(), -f.k(), f.S(), f.c3()); }

std::optional<std::int64_t> canonical_parity(const Rank2Sheaf& f) {
  const std::int64_t diff = -f.threefold().a - f.k();
  if (diff % 2 != 0) return std::nullopt;
  return diff / 2;
}

Rational delta_pair(const Rank2Sheaf& f) {
  const auto& x = f.threefold();
  return Rational(4 * x.a) * f.S() - Rational(x.a * f.k() * f.k() * x.N);
}

}  // namespace r2sheaf
