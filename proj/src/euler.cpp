#include "r2sheaf/euler.hpp"

#include <algorithm>
#include <string>

#include "r2sheaf/errors.hpp"

namespace r2sheaf {

void ChernInput::validate() const {
  if (rank != 1 && rank != 2) throw InvalidInput("rank must be 1 or 2, got " + std::to_string(rank));
  if (rank == 1 && (S != 0 || c3 != 0)) {
    throw InvalidInput("a line bundle has c2 = c3 = 0 in this model");
  }
}

ChernInput chern_input(const Rank2Sheaf& f) { return ChernInput{2, f.k(), f.S(), f.c3(), f.threefold()}; }

ChernInput line_bundle_input(const NumericalThreefold& x, std::int64_t m) {
  return ChernInput{1, m, Rational(0), Rational(0), x};
}

Rational chi_rr(const ChernInput& c) {
  c.validate();
  const Rational k(c.k);
  const Rational N(c.x.N);
  const Rational a(c.x.a);
  const Rational& b = c.x.b;

  Rational chi = k * k * k * N / 6;
  chi -= k * c.S / 2;
  chi -= a * c.S / 2;
  chi += a * k * k * N / 4;
  chi += a * a * k * N / 12;
  chi += k * b / 12;
  chi += Rational(c.rank) * a * b / 24;
  chi += c.c3 / 2;
  return chi;
}

Rational chi_closed_form(std::int64_t r, std::int64_t k, const Rational& d, const Rational& pa) {
  if (r < 1) throw InvalidInput("hypersurface degree must be >= 1");
  const Integer rr(static_cast<long>(r));
  const Integer kk(static_cast<long>(k));
  Rational lead(rr * (kk + 5 - rr) * (2 * kk * kk + 5 * kk - kk * rr + 10 - 5 * rr + rr * rr), Integer(12));
  lead.canonicalize();
  return lead + pa - 1 - Rational(kk) * d;
}

Rational chi_dual_formula(std::int64_t r, std::int64_t k, const Rational& pa) {
  return chi_dual_formula(r, k, pa, [](const Integer& n) { return binom_poly(n); });
}

Rational chi_dual_formula(std::int64_t r, std::int64_t k, const Rational& pa, const BinomialFn& binom) {
  if (r < 1) throw InvalidInput("hypersurface degree must be >= 1");
  auto B = [&](std::int64_t n) { return Rational(binom(Integer(static_cast<long>(n)))); };
  return pa - B(r - 1 + k) + B(k - 1) - B(r - 1);
}

ExtLedger ext_constraints(std::int64_t h0, std::int64_t h1, std::int64_t h2, std::int64_t h3,
                          std::int64_t e1) {
  if (h0 < 0 || h1 < 0 || h2 < 0 || h3 < 0 || e1 < 0) {
    throw InvalidInput("cohomology dimensions must be non-negative");
  }
  ExtLedger out;
  out.ext0 = h0;
  out.ext3 = h3;
  // H^1(Hom) injects into Ext^1, whose image in H^0(Ext^1) has dim <= e1;
  // Ext^2 = coker(H^0(Ext^1) -> H^2(Hom)) must have non-negative dimension.
  out.ext1_max = h1 + e1;
  out.ext1_min = std::max(h1, h1 + e1 - h2);
  out.ext2_offset = h2 - h1 - e1;
  return out;
}

}  // namespace r2sheaf
