#include <doctest.h>

#include <array>

#include "r2sheaf/chow.hpp"
#include "r2sheaf/errors.hpp"

using namespace r2sheaf;

namespace {

// (1+h)^5 / (1+r h) truncated at h^3, by long division.
std::array<long, 3> tangent_series(long r) {
  const std::array<long, 3> num{1, 5, 10};
  std::array<long, 3> q{};
  std::array<long, 3> rem = num;
  for (int i = 0; i < 3; ++i) {
    q[i] = rem[i];
    if (i + 1 < 3) rem[i + 1] -= q[i] * r;
  }
  return q;
}

// chi(O_{P^4}(m)) as a polynomial in m; counts degree-m monomials for m >= 0.
long chi_p4(long m) { return (m + 4) * (m + 3) * (m + 2) * (m + 1) / 24; }

}  // namespace

TEST_SUITE("chow") {
  TEST_CASE("hypersurface constants") {
    const auto quintic = hypersurface(5);
    CHECK(quintic.N == 5);
    CHECK(quintic.a == 0);
    CHECK(quintic.b == 50);
    const auto p3 = hypersurface(1);
    CHECK((p3.N == 1 && p3.a == 4 && p3.b == 6));
    const auto cubic = hypersurface(3);
    CHECK((cubic.N == 3 && cubic.a == 2 && cubic.b == 12));
    CHECK(cubic.is_fano());
    CHECK(quintic.is_canonically_trivial());
    CHECK_THROWS_AS(hypersurface(0), InvalidInput);
  }

  TEST_CASE("hypersurface numerics match series division") {
    for (long r = 1; r <= 20; ++r) {
      const auto s = tangent_series(r);
      const auto x = hypersurface(r);
      CHECK(x.a == s[1]);
      CHECK(x.b == Rational(r * s[2]));
    }
  }

  TEST_CASE("chi of the structure sheaf") {
    CHECK(chi_structure_sheaf(hypersurface(1)) == 1);
    CHECK(chi_structure_sheaf(hypersurface(5)) == 0);
    CHECK(chi_structure_sheaf(hypersurface(3)) == 1);
    CHECK(chi_structure_sheaf(make_threefold(2, 1, make_rational(3))) == make_rational(1, 8));
  }

  TEST_CASE("polynomial binomial") {
    CHECK(binom_poly(4) == 1);
    CHECK(binom_poly(2) == 0);
    CHECK(binom_poly(-1) == 1);
    CHECK(binom_poly(-2) == 5);
    CHECK(binom_poly(10) == 210);
  }

  TEST_CASE("chi of line bundles") {
    CHECK(chi_line_bundle(5, 0) == 0);
    CHECK(chi_line_bundle(4, 0) == 1);
    CHECK(chi_line_bundle(1, 2) == 10);
    // 0 -> O(m-r) -> O(m) -> O_X(m) -> 0 on P^4.
    for (long r = 1; r <= 8; ++r) {
      for (long m = -12; m <= 12; ++m) CHECK(chi_line_bundle(r, m) == chi_p4(m) - chi_p4(m - r));
    }
  }

  TEST_CASE("threefold validation") {
    CHECK_THROWS_AS(make_threefold(0, 1, make_rational(1)), InvalidInput);
    const auto x = make_threefold(2, -1, make_rational(7, 3));
    CHECK(!x.is_hypersurface());
    CHECK(x.c1c2() == make_rational(-7, 3));
    CHECK(x.c1_cubed() == -2);
  }
}
