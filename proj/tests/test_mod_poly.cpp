#include <doctest.h>

#include <random>

#include "rzr/mod_poly.hpp"
#include "support.hpp"

using namespace rzr;
using namespace rzr::testing;

TEST_SUITE("mod_poly") {
  TEST_CASE("arithmetic and degree") {
    const ModPoly p = c(1) - k2() + k2() * k2();
    CHECK(p.degree() == 2u);
    CHECK(p.to_string() == "1 - k^2 + k^4");
    CHECK((p - p).is_zero());
    CHECK(!(p - p).degree());
    CHECK(p.coeff(7) == 0);
    CHECK((p * q("1/15")).to_string() == "1/15 - 1/15*k^2 + 1/15*k^4");
  }

  TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-9, 9);
    auto random_poly = [&](int deg) {
      std::vector<Rat> v;
      for (int i = 0; i <= deg; ++i) v.push_back(make_rat(d(rng), 1 + (d(rng) + 9) % 5));
      return ModPoly(v);
    };
    for (int trial = 0; trial < 50; ++trial) {
      const ModPoly a = random_poly(trial % 6), b = random_poly((trial * 7) % 5);
      const Rat x = make_rat(d(rng), 7);
      CHECK((a * b).eval(x) == a.eval(x) * b.eval(x));
      CHECK((a + b).eval(x) == a.eval(x) + b.eval(x));
      CHECK((a - b).eval(x) == a.eval(x) - b.eval(x));
      CHECK(a * b == b * a);
    }
  }
}
