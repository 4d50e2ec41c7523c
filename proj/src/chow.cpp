#include "r2sheaf/chow.hpp"

#include <utility>

#include "r2sheaf/errors.hpp"

namespace r2sheaf {

bool operator==(const NumericalThreefold& x, const NumericalThreefold& y) {
  return x.N == y.N && x.a == y.a && x.b == y.b && x.hypersurface_degree == y.hypersurface_degree;
}

NumericalThreefold make_threefold(std::int64_t N, std::int64_t a, Rational b, std::string label) {
  if (N < 1) throw InvalidInput("h^3 must be positive, got " + std::to_string(N));
  if (label.empty()) {
    label = "threefold N=" + std::to_string(N) + " a=" + std::to_string(a) + " b=" + to_string(b);
  }
  return NumericalThreefold{N, a, std::move(b), std::move(label), std::nullopt};
}

NumericalThreefold hypersurface(std::int64_t r) {
  if (r < 1) throw InvalidInput("hypersurface degree must be >= 1, got " + std::to_string(r));
  NumericalThreefold x;
  x.N = r;
  x.a = 5 - r;
  x.b = Rational(r * (10 - 5 * r + r * r));
  x.label = "hypersurface r=" + std::to_string(r);
  x.hypersurface_degree = r;
  return x;
}

Rational chi_structure_sheaf(const NumericalThreefold& x) { return x.c1c2() / 24; }

Integer binom_poly(const Integer& n) {
  Integer p = n * (n - 1) * (n - 2) * (n - 3);
  Integer q;
  mpz_divexact_ui(q.get_mpz_t(), p.get_mpz_t(), 24);
  return q;
}

Integer chi_line_bundle(std::int64_t r, std::int64_t m) {
  if (r < 1) throw InvalidInput("hypersurface degree must be >= 1, got " + std::to_string(r));
  return binom_poly(m + 4) - binom_poly(m + 4 - r);
}

}  // namespace r2sheaf
