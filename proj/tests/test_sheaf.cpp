#include <doctest.h>

#include "r2sheaf/chow.hpp"
#include "r2sheaf/errors.hpp"
#include "r2sheaf/sheaf.hpp"

using namespace r2sheaf;

namespace {
Rank2Sheaf make(std::int64_t r, std::int64_t k, long S, long c3 = 0) {
  return Rank2Sheaf::make(hypersurface(r), k, Rational(S), Rational(c3));
}
}  // namespace

TEST_SUITE("sheaf") {
  TEST_CASE("construction invariants") {
    CHECK_THROWS_AS(make(5, 0, 3, -1), InconsistentData);
    CHECK_THROWS_AS(Rank2Sheaf::make(hypersurface(5), 0, Rational(3), Rational(2), true), InconsistentData);
    CHECK_THROWS_AS(Rank2Sheaf::make(hypersurface(5), 0, Rational(3), Rational(0), false), InconsistentData);
    const auto f = make(3, 1, 2);
    CHECK(f.locally_free());
    CHECK(f.c1c2() == 2);
    CHECK(f.c1X_c2() == 4);
    CHECK(f.c1_cubed() == 3);
    CHECK(!make(3, 1, 2, 4).locally_free());
  }

  TEST_CASE("twist") {
    const auto f = make(5, 0, 5);
    CHECK(twist(f, 0) == f);
    const auto g = twist(f, 1);
    CHECK(g.k() == 2);
    CHECK(g.S() == 10);
    CHECK(g.c3() == 0);
    CHECK(twist(twist(f, 3), -5) == twist(f, -2));
  }

  TEST_CASE("dual") {
    const auto f = make(4, 1, 3);
    const auto g = dual(f);
    CHECK(g.k() == -1);
    CHECK(g.S() == 3);
    CHECK(g.c3() == 0);
    CHECK(dual(g) == f);
    CHECK(dual(make(5, 0, 7)) == make(5, 0, 7));
    // F* = F ⊗ det(F)^-1 = F(-k).
    const auto h = make(4, 2, 5, 2);
    CHECK(dual(h) == twist(h, -2));
  }

  TEST_CASE("canonical parity") {
    CHECK(canonical_parity(make(5, 0, 1)) == 0);
    CHECK(canonical_parity(make(4, 1, 1)) == -1);
    CHECK(!canonical_parity(make(4, 0, 1)).has_value());
    const auto f = make(2, -3, 4);
    const auto m = canonical_parity(f);
    REQUIRE(m.has_value());
    CHECK(twist(f, *m).k() == -hypersurface(2).a);
  }

  TEST_CASE("discriminant pairing") {
    CHECK(delta_pair(make(5, 3, 11)) == 0);
    CHECK(delta_pair(make(3, 1, 2)) == 10);
    CHECK(delta_pair(make(1, 0, 1)) == 16);
  }
}
