#include <doctest.h>

#include "r2sheaf/chow.hpp"
#include "r2sheaf/errors.hpp"
#include "r2sheaf/serre.hpp"

using namespace r2sheaf;

TEST_SUITE("serre") {
  TEST_CASE("c3 of the curve's sheaf") {
    for (long pa = 0; pa < 6; ++pa) {
      CHECK(c3_from_curve(hypersurface(5), 0, CurveData{Rational(9), pa}) == 2 * pa - 2);
    }
    CHECK(c3_from_curve(hypersurface(4), 1, CurveData{Rational(3), 1}) == 0);
    CHECK(c3_from_curve(hypersurface(3), 1, CurveData{Rational(2), 0}) == 0);
  }

  TEST_CASE("sheaf from curve") {
    CHECK_THROWS_AS(sheaf_from_curve(hypersurface(4), 0, CurveData{Rational(1), 0}), InconsistentData);
    const auto f = sheaf_from_curve(hypersurface(5), 0, CurveData{Rational(6), 4});
    CHECK(f.k() == 0);
    CHECK(f.S() == 6);
    CHECK(f.c3() == 6);
    CHECK(sheaf_from_curve(hypersurface(4), 1, CurveData{Rational(3), 1}).locally_free());
    CHECK_THROWS_AS((CurveData{Rational(0), 0}.validate()), InvalidInput);
  }

  TEST_CASE("genus from c3") {
    CHECK(genus_from_c3(hypersurface(5), 0, Rational(6), Rational(6)).pa == 4);
    const auto g = genus_from_c3(hypersurface(4), 1, Rational(3), Rational(0));
    CHECK(g.pa == 1);
    CHECK(g.consistent);
    const auto half = genus_from_c3(hypersurface(3), 1, Rational(2), Rational(1));
    CHECK(half.pa == make_rational(1, 2));
    CHECK(!half.consistent);
    CHECK(!half.warning.empty());
  }

  TEST_CASE("genus and c3 are inverse") {
    for (long r = 1; r <= 6; ++r) {
      for (long k = -3; k <= 3; ++k) {
        for (long d = 1; d <= 9; ++d) {
          for (long pa = 0; pa <= 9; ++pa) {
            const auto x = hypersurface(r);
            const Rational c3 = c3_from_curve(x, k, CurveData{Rational(d), pa});
            CHECK(genus_from_c3(x, k, Rational(d), c3).pa == pa);
          }
        }
      }
    }
  }
}
