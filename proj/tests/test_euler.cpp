#include <doctest.h>

#include "r2sheaf/chow.hpp"
#include "r2sheaf/errors.hpp"
#include "r2sheaf/euler.hpp"
#include "r2sheaf/serre.hpp"

using namespace r2sheaf;

namespace {

// Additivity on 0 -> O_X -> F -> I_C(k) -> 0 and 0 -> I_C -> O_X -> O_C -> 0:
// chi(F) = chi(O_X) + chi(O_X(k)) - chi(O_C(k)), chi(O_C(k)) = k d + 1 - pa.
Rational chi_by_sequences(long r, long k, long d, long pa) {
  return Rational(chi_line_bundle(r, 0) + chi_line_bundle(r, k)) - Rational(k * d + 1 - pa);
}

// 0 -> O_X(-k) -> F* -> I_C -> 0.
Rational chi_dual_by_sequences(long r, long k, long pa) {
  return Rational(chi_line_bundle(r, -k) + chi_line_bundle(r, 0)) - Rational(1 - pa);
}

}  // namespace

TEST_SUITE("euler") {
  TEST_CASE("spec values") {
    const auto quartic_f = sheaf_from_curve(hypersurface(4), 1, CurveData{Rational(3), 1});
    CHECK(chi_rr(quartic_f) == 3);
    CHECK(chi_closed_form(4, 1, Rational(3), Rational(1)) == 3);
    CHECK(chi_rr(line_bundle_input(hypersurface(5), 1)) == 5);
    for (long pa = 0; pa <= 10; ++pa) {
      CHECK(chi_closed_form(5, 0, Rational(7), Rational(pa)) == pa - 1);
      if (2 * pa - 2 >= 0) {
        CHECK(chi_rr(Rank2Sheaf::make(hypersurface(5), 0, Rational(7), Rational(2 * pa - 2))) == pa - 1);
      }
    }
    CHECK(chi_dual_formula(4, 1, Rational(1)) == 0);
    CHECK(chi_dual_formula(1, 1, Rational(0)) == 0);
    for (long pa = 0; pa <= 10; ++pa) CHECK(chi_dual_formula(5, 1, Rational(pa)) == pa - 6);
  }

  TEST_CASE("RR agrees with the exact-sequence oracle, including c3 < 0 numerics") {
    for (long r = 1; r <= 7; ++r) {
      const auto x = hypersurface(r);
      for (long k = -4; k <= 4; ++k) {
        for (long d = 1; d <= 12; ++d) {
          for (long pa = 0; pa <= 12; ++pa) {
            ChernInput c{2, k, Rational(d), c3_from_curve(x, k, CurveData{Rational(d), pa}), x};
            CHECK(chi_rr(c) == chi_by_sequences(r, k, d, pa));
            CHECK(chi_closed_form(r, k, Rational(d), Rational(pa)) == chi_by_sequences(r, k, d, pa));
            ChernInput cd{2, -k, Rational(d), c.c3, x};
            CHECK(chi_rr(cd) == chi_dual_by_sequences(r, k, pa));
            CHECK(chi_dual_formula(r, k, Rational(pa)) == chi_dual_by_sequences(r, k, pa));
          }
        }
      }
    }
  }

  TEST_CASE("line bundle input validation") {
    ChernInput bad{1, 0, Rational(1), Rational(0), hypersurface(3)};
    CHECK_THROWS_AS(bad.validate(), InvalidInput);
    ChernInput rank3{3, 0, Rational(0), Rational(0), hypersurface(3)};
    CHECK_THROWS_AS(chi_rr(rank3), InvalidInput);
    CHECK_THROWS_AS(chi_closed_form(0, 0, Rational(1), Rational(0)), InvalidInput);
  }

  TEST_CASE("Ext bookkeeping") {
    const auto lf = ext_constraints(2, 3, 1, 4, 0);
    CHECK(lf.ext0 == 2);
    CHECK(lf.ext3 == 4);
    CHECK(lf.ext1_min == 3);
    CHECK(lf.ext1_max == 3);
    CHECK(lf.ext2_for(3) == 1);

    const auto a = ext_constraints(1, 0, 0, 0, 2);
    CHECK(a.ext1_min == 2);
    CHECK(a.ext1_max == 2);
    CHECK(a.ext2_for(2) == 0);

    const auto b = ext_constraints(0, 3, 1, 0, 2);
    CHECK(b.ext1_min == 4);
    CHECK(b.ext1_max == 5);
    CHECK(b.ext2_for(4) == 0);
    CHECK(b.ext2_for(5) == 1);
    CHECK(!b.admissible(3));
    CHECK(b.admissible(5));

    CHECK_THROWS_AS(ext_constraints(-1, 0, 0, 0, 0), InvalidInput);
  }
}
