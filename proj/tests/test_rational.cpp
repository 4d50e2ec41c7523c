#include <doctest.h>

#include "r2sheaf/errors.hpp"
#include "r2sheaf/rational.hpp"

using namespace r2sheaf;

TEST_SUITE("rational") {
  TEST_CASE("rendering is reduced with bare integers") {
    CHECK(to_string(make_rational(6, 4)) == "3/2");
    CHECK(to_string(make_rational(-6, 4)) == "-3/2");
    CHECK(to_string(make_rational(8, 4)) == "2");
    CHECK(to_string(make_rational(0, 7)) == "0");
    CHECK(to_string(make_rational(3, -9)) == "-1/3");
  }

  TEST_CASE("parsing round-trips and rejects junk") {
    for (const char* s : {"0", "5", "-5", "3/2", "-7/3"}) CHECK(to_string(parse_rational(s)) == s);
    CHECK(parse_rational("4/6") == make_rational(2, 3));
    for (const char* s : {"", "1/0", "x", "1.5", "1/", "/2", "--1", "1 "}) {
      CHECK_THROWS_AS(parse_rational(s), InvalidInput);
    }
  }

  TEST_CASE("floor and ceiling") {
    CHECK(floor_div(make_rational(7, 2)) == 3);
    CHECK(ceil_div(make_rational(7, 2)) == 4);
    CHECK(floor_div(make_rational(-7, 2)) == -4);
    CHECK(ceil_div(make_rational(-7, 2)) == -3);
    CHECK(ceil_div(make_rational(-2)) == -2);
  }

  TEST_CASE("narrowing") {
    CHECK(to_int64(Integer(-12)) == -12);
    Integer huge("123456789012345678901234567890");
    CHECK_THROWS_AS(to_int64(huge), InvalidInput);
  }
}
