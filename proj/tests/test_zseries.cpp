#include <doctest.h>

#include "rzr/zseries.hpp"
#include "support.hpp"

using namespace rzr;
using namespace rzr::testing;

TEST_SUITE("zseries") {
  TEST_CASE("product and truncation bookkeeping") {
    // (1 + z^2)(1 - z^2) = 1 - z^4
    const ZSeries a(0, 8, {c(1), c(1)});
    const ZSeries b(0, 8, {c(1), c(-1)});
    const ZSeries p = a * b;
    CHECK(p.truncation() == 8);
    CHECK(p.coeff(0) == c(1));
    CHECK(p.coeff(2).is_zero());
    CHECK(p.coeff(4) == c(-1));
    CHECK_THROWS_AS(p.coeff(10), std::out_of_range);
  }

  TEST_CASE("reciprocal is an involution") {
    const ZSeries s(1, 13, {c(1), c(q("-1/6")) - k2() * q("1/6"), c(2), k2()});
    const ZSeries r = s.reciprocal();
    CHECK(r.order() == -1);
    CHECK(r.reciprocal().agrees_with(s));
    CHECK((s * r).agrees_with(ZSeries::constant(c(1), 10)));
  }

  TEST_CASE("non-invertible and odd leading coefficient") {
    const ZSeries s(0, 6, {k2(), c(1)});
    CHECK_THROWS_AS(s.reciprocal(), std::domain_error);
  }

  TEST_CASE("derivative and dilation") {
    // z^3 + 2 z^5 -> 3 z^2 + 10 z^4
    const ZSeries s(3, 9, {c(1), c(2)});
    const ZSeries d = s.derivative();
    CHECK(d.truncation() == 8);
    CHECK(d.coeff(2) == c(3));
    CHECK(d.coeff(4) == c(10));
    const ZSeries t = s.dilate(2);
    CHECK(t.coeff(3) == c(8));
    CHECK(t.coeff(5) == c(64));
  }

  TEST_CASE("leading zeros are stripped") {
    const ZSeries s(0, 6, {c(0), c(0), c(5)});
    CHECK(s.order() == 4);
    CHECK(ZSeries(0, 6, {}).is_zero());
  }
}
