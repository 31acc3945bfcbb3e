#include <doctest.h>

#include "rzr/rational.hpp"
#include "support.hpp"

using namespace rzr;
using namespace rzr::testing;

TEST_SUITE("rational") {
  TEST_CASE("string round trip") {
    CHECK(to_string(make_rat(6, -4)) == "-3/2");
    CHECK(to_string(make_rat(8, 4)) == "2");
    CHECK(parse_rat(" -3/2 ") == make_rat(-3, 2));
    CHECK(parse_rat("0") == 0);
    CHECK_THROWS(make_rat(1, 0));
    CHECK_THROWS(parse_rat("1/x"));
  }

  TEST_CASE("primitive vectors") {
    CHECK(primitive_integer_vector(rats({"1/2", "-1/3", "0"})) == ints({3, -2, 0}));
    CHECK(primitive_integer_vector(rats({"0", "0"})) == ints({0, 0}));
    IntVector v = ints({0, 3, -1});
    normalize_sign_first_negative(v);
    CHECK(v == ints({0, -3, 1}));
  }

  TEST_CASE("factorial and powers") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK(pow2(10) == 1024);
  }
}
