#include <doctest.h>

#include "rzr/aux_polys.hpp"
#include "rzr/kernel_basis.hpp"
#include "support.hpp"

using namespace rzr;
using namespace rzr::testing;

TEST_SUITE("aux_polys") {
  TEST_CASE("reference values for j = 1, 2") {
    const AuxPolySet aux = build_aux(build_laurent_table(2));
    const ModPoly k4 = k2() * k2();
    CHECK(aux.theta_minus(1) == (k4 * 16 - k2() * 16 + c(1)) * q("1/15"));
    CHECK(aux.theta_plus(1) == (c(1) + k2() * 14 - k4 * 14) * q("1/15"));
    CHECK(aux.theta_minus(2) == (k2() * 2 - c(1)) * (k4 * 32 - k2() * 32 - c(1)) * q("2/189"));
    CHECK(aux.theta_plus(2) == (k2() * 2 - c(1)) * (k4 * 31 - k2() * 31 + c(1)) * q("-2/189"));
    CHECK(aux.lambda_minus(1) == c(1));
    CHECK(aux.lambda_plus(1) == c(1) - k2() * 2);
    CHECK(aux.lambda_minus(2) == (c(1) - k2() * 2) * q("2/3"));
    CHECK(aux.lambda_plus(2) == (k4 - k2() + c(1)) * q("2/3"));
  }

  TEST_CASE("kappa constants") {
    CHECK(kappa(2) == q("-1/1"));
    CHECK(kappa(3) == q("1/3"));
    CHECK(kappa_hat(2) == q("1/16"));
  }

  TEST_CASE("closed forms of low coefficients") {
    const int n = 16;
    const AuxPolySet aux = build_aux(build_laurent_table(n));
    const TrigCoeffTable trig = build_trig_table(n);
    for (int j = 2; j <= n + 1; ++j) CHECK(check_closed_forms(aux, trig, j));
    CHECK_THROWS_AS(check_closed_forms(aux, trig, 1), std::out_of_range);
    CHECK_THROWS_AS(check_closed_forms(aux, trig, n + 2), std::out_of_range);
  }

  TEST_CASE("relation kernel of the four polynomials") {
    const AuxPolySet aux = build_aux(build_laurent_table(12));
    CHECK(xi_kernel(aux, 1) == ints({-7, 8, 1, 0}));
    for (int j = 1; j <= 12; ++j) {
      CHECK(xi_kernel(aux, j) == xi_kernel_closed_form(j));
      // Oracle: the generator annihilates every coefficient.
      const auto xi = xi_vector(aux, j);
      const IntVector v = xi_kernel(aux, j);
      ModPoly sum;
      for (std::size_t i = 0; i < 4; ++i) sum += xi[i] * Rat(v[i]);
      CHECK(sum.is_zero());
    }
  }

  TEST_CASE("Theta/Lambda identity") {
    const AuxPolySet aux = build_aux(build_laurent_table(20));
    for (int j = 1; j <= 20; ++j) {
      const Rat p = Rat(pow2(static_cast<unsigned long>(2 * j + 1)));
      CHECK((aux.theta_minus(j) * (p - 1) + aux.theta_plus(j) * p - aux.lambda_minus(j)).is_zero());
    }
  }
}
