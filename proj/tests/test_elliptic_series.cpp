#include <doctest.h>

#include "rzr/elliptic_series.hpp"
#include "support.hpp"

using namespace rzr;
using namespace rzr::testing;

TEST_SUITE("elliptic_series") {
  TEST_CASE("sn Maclaurin coefficients") {
    const ZSeries sn = sn_series(10);
    CHECK(sn.coeff(1) == c(1));
    CHECK(sn.coeff(3) == (c(1) + k2()) * q("-1/6"));
    CHECK(sn.coeff(5) == (c(1) + k2() * 14 + k2() * k2()) * q("1/120"));
    const ModPoly k4 = k2() * k2();
    CHECK(sn.coeff(7) == (c(1) + k2() * 135 + k4 * 135 + k4 * k2()) * q("-1/5040"));
  }

  TEST_CASE("sn satisfies the first-order equation") {
    // (sn')^2 = (1 - sn^2)(1 - k^2 sn^2), an identity not used to build sn.
    const ZSeries sn = sn_series(30);
    const ZSeries d = sn.derivative();
    const ZSeries s2 = sn.square();
    const ZSeries one = ZSeries::constant(c(1), 30);
    const ZSeries rhs = (one - s2) * (one - s2 * k2());
    CHECK((d * d).agrees_with(rhs));
  }

  TEST_CASE("Glaisher series are mutually consistent") {
    const GlaisherSeries g = glaisher_series(12);
    const ZSeries one = ZSeries::constant(c(1), 24);
    CHECK((g.sn2 * g.ns2).agrees_with(one));
    CHECK((g.cn2 * g.nc2).agrees_with(one));
    CHECK((g.dn2 * g.nd2).agrees_with(one));
    CHECK((g.sn2 + g.cn2).agrees_with(one));
    CHECK((g.sn2 * k2() + g.dn2).agrees_with(one));
  }

  TEST_CASE("reference values for j = 1, 2") {
    const LaurentCoeffTable t = build_laurent_table(2);
    const ModPoly k4 = k2() * k2();
    CHECK(t.c(1) == (c(1) - k2() + k4) * q("1/15"));
    CHECK(t.c(2) == (c(1) + k2()) * (c(1) - k2() * 2) * (c(2) - k2()) * q("1/189"));
    CHECK(t.d(1) == k2() * (c(1) - k2()));
    CHECK(t.d(2) == k2() * (c(1) - k2()) * (c(1) - k2() * 2) * q("-1/3"));
    CHECK(t.e(1) == c(1) - k2());
    CHECK(t.f(1) == -k2());
    CHECK(t.e(2) == (c(1) - k2()) * (c(2) - k2()) * q("1/3"));
    CHECK(t.f(2) == k2() * (c(1) + k2()) * q("1/3"));
    const TrigCoeffTable tr = build_trig_table(2);
    CHECK(tr.a(0) == q("1/3"));
    CHECK(tr.a(1) == q("1/15"));
    CHECK(tr.a(2) == q("2/189"));
    CHECK(tr.b(0) == 1);
    CHECK(tr.b(1) == 1);
    CHECK(tr.b(2) == q("2/3"));
  }

  TEST_CASE("degree bounds") {
    const LaurentCoeffTable t = build_laurent_table(20);
    for (int j = 1; j <= 20; ++j) {
      const auto bound = static_cast<std::size_t>(j + 1);
      CHECK(t.c(j).degree().value_or(0) <= bound);
      CHECK(t.d(j).degree().value_or(0) <= bound);
      CHECK(t.e(j).degree().value_or(0) <= bound - 1);
      CHECK(t.f(j).degree().value_or(0) <= bound - 1);
    }
  }

  TEST_CASE("c/d/e/f identity") {
    const LaurentCoeffTable t = build_laurent_table(24);
    for (int j = 1; j <= 24; ++j) CHECK(check_cdef_identity(t, j));
  }

  TEST_CASE("duplication formula at series level") {
    // 4 ns^2(2z) = (1-k^2)(nc^2 - nd^2) + (ns^2 - dn^2) + (2 + k^2).
    const GlaisherSeries g = glaisher_series(16);
    const ZSeries lhs = g.ns2.dilate(2) * c(4);
    const ZSeries rhs = (g.nc2 - g.nd2) * (c(1) - k2()) + (g.ns2 - g.dn2) +
                        ZSeries::constant(c(2) + k2(), 32);
    CHECK(lhs.agrees_with(rhs));
    CHECK(rhs.truncation() >= 30);
  }

  TEST_CASE("range errors") {
    const LaurentCoeffTable t = build_laurent_table(3);
    CHECK_THROWS(t.c(0));
    CHECK_THROWS(t.c(4));
    CHECK_THROWS(sn_series(3));
  }
}
