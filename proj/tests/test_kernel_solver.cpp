#include <doctest.h>

#include "rzr/kernel_solver.hpp"
#include "support.hpp"

using namespace rzr;
using namespace rzr::testing;

TEST_SUITE("kernel_solver") {
  TEST_CASE("m = 1") {
    const RelationBasis b = relation_space(1);
    REQUIRE(b.dim() == 1);
    CHECK(b.vectors[0].t == ints({-2, 1, 0, 1}));
    CHECK(zero_pattern_check(b));
  }

  TEST_CASE("m = 2 family") {
    const RelationBasis b = relation_space(2);
    CHECK(b.dim() == 2);
    // (-2u+v, u, 0, u-v, -7v, 8v, v, 0)
    for (auto [u, v] : {std::pair{1, 0}, std::pair{0, 1}, std::pair{3, -5}}) {
      const RatVector t{Rat(-2 * u + v), Rat(u), Rat(0), Rat(u - v), Rat(-7 * v), Rat(8 * v), Rat(v), Rat(0)};
      CHECK(membership_check(b, t));
    }
    CHECK(membership_check(b, rats({"1", "0", "0", "-1", "-7", "8", "1", "0"})));
  }

  TEST_CASE("m = 3 family") {
    const RelationBasis b = relation_space(3);
    CHECK(b.dim() == 3);
    CHECK(membership_check(b, rats({"-1", "1", "0", "0", "1", "0", "1", "0", "128/3", "-124/3", "0", "-4/3"})));
    CHECK(membership_check(b, rats({"0", "0", "0", "0", "-1", "1", "0", "0", "-16/3", "31/6", "0", "1/6"})));
    CHECK(membership_check(b, rats({"-1", "0", "0", "1", "-1", "0", "-1", "0", "-128/3", "124/3", "0", "4/3"})));
    CHECK(membership_check(b, rats({"0", "0", "0", "0", "-6", "6", "0", "0", "-32", "31", "0", "1"})));
    CHECK(membership_check(b, rats({"-3", "3", "0", "0", "3", "0", "3", "0", "128", "-124", "0", "-4"})));
    CHECK(!membership_check(b, rats({"-1", "1", "0", "0", "1", "0", "1", "0", "128/3", "-124/3", "0", "4/3"})));
  }

  TEST_CASE("membership errors and negatives") {
    CHECK(!membership_check(rats({"1", "0", "0", "0"}), 1));
    CHECK(membership_check(rats({"-2", "1", "0", "1"}), 1));
    CHECK_THROWS_AS(membership_check(rats({"1", "0", "0"}), 1), std::invalid_argument);
    CHECK_THROWS_AS(relation_space(0), std::invalid_argument);
  }

  TEST_CASE("dimension, zero pattern and A t = 0 up to m = 12") {
    for (int m = 1; m <= 12; ++m) {
      const SymbolicTables t = build_tables(m);
      const RelationBasis b = relation_space(m, t);
      CHECK(b.dim() == static_cast<std::size_t>(m));
      CHECK(zero_pattern_check(b));
      const AssembledMatrix a = assemble(m, t.aux, t.wt, t.trig);
      for (const auto& v : b.vectors)
        for (const Rat& x : a.scalar_form.apply(to_rat_vector(v.t))) CHECK(x == 0);
    }
  }

  TEST_CASE("structured elimination agrees with the scalar kernel") {
    for (int m = 1; m <= 8; ++m) {
      const SymbolicTables t = build_tables(m);
      CHECK(structured_kernel(m, t) == scalar_kernel(assemble(m, t.aux, t.wt, t.trig)));
    }
  }

  TEST_CASE("V_m embeds in V_{m+1}") {
    for (int m = 1; m <= 8; ++m) {
      const RelationBasis small = relation_space(m), big = relation_space(m + 1);
      for (const auto& v : small.vectors) {
        RatVector padded = to_rat_vector(v.t);
        padded.resize(static_cast<std::size_t>(4 * (m + 1)), Rat(0));
        CHECK(membership_check(big, padded));
      }
    }
  }

  TEST_CASE("zero pattern detects violations") {
    CHECK(zero_pattern_holds(ints({-2, 1, 0, 1})));
    CHECK(!zero_pattern_holds(ints({-2, 1, 1, 1})));
    CHECK(!zero_pattern_holds(ints({0, 0, 0, 0, 0, 0, 0, 1})));
  }

  TEST_CASE("rendering") {
    const RelationVector v{1, ints({-2, 1, 0, 1})};
    CHECK(format_relation(v, RelationStyle::PhiPsi) == "−2Φ₂ + Φ₂* + Ψ₂* = 0");
    CHECK(format_relation(v, RelationStyle::ZetaFibonacci) == "−2ζ_F(2) + ζ_F*(2) + 5ζ_L*(2) = 0");
    CHECK(format_relation_latex(v, RelationStyle::PhiPsi) == "-2\\Phi_{2} + \\Phi_{2}^{*} + \\Psi_{2}^{*} = 0");
    CHECK(format_relation({1, ints({0, 0, 0, 0})}, RelationStyle::PhiPsi) == "0 = 0");
    const RelationVector w{3, ints({0, 0, 0, 0, -6, 6, 0, 0, -32, 31, 0, 1})};
    CHECK(format_relation(w, RelationStyle::PhiPsi) == "−6Φ₄ + 6Φ₄* − 32Φ₆ + 31Φ₆* + Ψ₆* = 0");
    CHECK(styled_coefficients(w, RelationStyle::ZetaFibonacci) ==
          ints({0, 0, 0, 0, -30, 30, 0, 0, -32, 31, 0, 125}));
  }
}
