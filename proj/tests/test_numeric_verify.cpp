#include <doctest.h>

#include <random>

#include "rzr/numeric_verify.hpp"
#include "support.hpp"

using namespace rzr;
using namespace rzr::testing;

namespace {

bool below(const Real& x, long exponent) { return x < pow10(exponent, x.precision()); }

// Independent oracle: sum_{n<=N} 1/F_n^{2s} with plain MPFR calls and a
// generous fixed number of terms.
Real fib_zeta_oracle(int s, long digits) {
  const mpfr_prec_t prec = bits_for_digits(digits + 20);
  mpz_class a = 1, b = 1;
  mpfr_t acc, t;
  mpfr_init2(acc, prec);
  mpfr_init2(t, prec);
  mpfr_set_zero(acc, 1);
  const long n = 20 + static_cast<long>(digits * 2.4 / s);
  for (long i = 1; i <= n; ++i) {
    mpfr_set_z(t, a.get_mpz_t(), MPFR_RNDN);
    mpfr_pow_si(t, t, -2L * s, MPFR_RNDN);
    mpfr_add(acc, acc, t, MPFR_RNDN);
    const mpz_class c = a + b;
    a = b;
    b = c;
  }
  Real out(prec);
  mpfr_set(out.get(), acc, MPFR_RNDN);
  mpfr_clear(acc);
  mpfr_clear(t);
  return out;
}

}  // namespace

TEST_SUITE("numeric_verify") {
  TEST_CASE("sequence terms") {
    const SequenceTerms t = gen_terms(SequenceSpec::fibonacci(), 8, 128);
    CHECK(t.u_exact == ints({0, 1, 1, 2, 3, 5, 8, 13, 21}));
    CHECK(t.v_exact == ints({2, 1, 3, 4, 7, 11, 18, 29, 47}));
    const SequenceTerms pell = gen_terms(SequenceSpec::parse("pell"), 5, 128);
    CHECK(pell.u_exact == ints({0, 1, 2, 5, 12, 29}));
    // A decimal beta close to the Fibonacci one gives nearly Fibonacci terms.
    const SequenceTerms r = gen_terms(SequenceSpec::parse("beta=-0.6180339887498948482045868"), 10, 256);
    CHECK(std::abs(r.u[10].to_double() - 55.0) < 1e-15);
    CHECK_THROWS(SequenceSpec::parse("beta=1.5"));
    CHECK_THROWS(SequenceSpec::parse("trace=0"));
    CHECK_THROWS(SequenceSpec::parse("lucas"));
    CHECK_THROWS(gen_terms(SequenceSpec::fibonacci(), 0, 64));
  }

  TEST_CASE("summation against an independent oracle") {
    const SeriesValue v = sum_series(SequenceSpec::fibonacci(), 1, SeriesKind::Phi, 50);
    const Real zeta2 = v.value * Real(5L, v.value.precision());
    CHECK(zeta2.to_string(10) == "2.426320751e+00");
    CHECK(below(abs(zeta2 - fib_zeta_oracle(1, 50)), -50));
    CHECK(below(v.tail_bound, -50 - v.guard));
    const SeriesValue w = sum_series(SequenceSpec::fibonacci(), 1, SeriesKind::Phi, 100);
    CHECK(below(abs(w.value - v.value), -48));
    for (int s = 2; s <= 4; ++s) {
      const SeriesValue x = sum_series(SequenceSpec::fibonacci(), s, SeriesKind::Phi, 60);
      const Real scaled = x.value * pow(Real(5L, x.value.precision()), s);
      CHECK(below(abs(scaled - fib_zeta_oracle(s, 60)), -60));
    }
  }

  TEST_CASE("batched and single summation agree") {
    const auto all = sum_all_series(SequenceSpec::parse("trace=3"), 3, 40);
    for (int s = 1; s <= 3; ++s)
      for (SeriesKind k : kAllSeriesKinds) {
        const SeriesValue one = sum_series(SequenceSpec::parse("trace=3"), s, k, 40);
        CHECK(below(abs(one.value - all[static_cast<std::size_t>(4 * (s - 1) + static_cast<int>(k))].value), -40));
      }
  }

  TEST_CASE("nome round trip") {
    const mpfr_prec_t prec = bits_for_digits(130);
    const Real b = SequenceSpec::fibonacci().beta(prec);
    for (const Real& q : {Real("0.1", prec), Real("0.25", prec), b * b}) {
      const EllipticContext ctx = nome_to_elliptic(q, 100);
      CHECK(below(ctx.roundtrip_residual, -100 + ctx.guard));
      CHECK(ctx.k.sign() > 0);
      CHECK(ctx.K.sign() > 0);
      CHECK(ctx.E.sign() > 0);
      CHECK(below(abs(ctx.k2 + ctx.kp * ctx.kp - Real(1L, prec)), -100));
    }
    const EllipticContext small = nome_to_elliptic(Real("1e-40", prec), 60);
    CHECK(below(abs(small.K - pi(prec) / 2), -18));
    CHECK(below(small.k, -18));
    CHECK_THROWS(nome_to_elliptic(Real("1.5", prec), 60));
    CHECK_THROWS(nome_to_elliptic(Real(0L, prec), 60));
  }

  TEST_CASE("closed forms match summation") {
    const SequenceSpec fib = SequenceSpec::fibonacci();
    const SymbolicTables t = build_tables(4);
    const EllipticContext ctx = elliptic_for(fib, 60);
    const auto sums = sum_all_series(fib, 4, 60);
    const auto via = eval_via_linear_forms(4, ctx, t);
    for (int s = 1; s <= 4; ++s)
      for (SeriesKind k : kAllSeriesKinds) {
        const auto i = static_cast<std::size_t>(4 * (s - 1) + static_cast<int>(k));
        const Real closed = eval_closed_form(s, k, ctx, t);
        CHECK(below(abs(closed - sums[i].value), -60));
        CHECK(below(abs(via[i] - closed), -60));
      }
    // Non-integral trace.
    const SequenceSpec other = SequenceSpec::parse("beta=0.3");
    const EllipticContext c2 = elliptic_for(other, 40);
    const auto s2 = sum_all_series(other, 2, 40);
    CHECK(below(abs(eval_closed_form(2, SeriesKind::PsiStar, c2, t) - s2[7].value), -40));
  }

  TEST_CASE("Jacobi functions") {
    const long p = 60;
    const mpfr_prec_t prec = bits_for_digits(p + 20);
    const Real zero(0L, prec);
    const Complex z(Real("0.7", prec), Real("0.1", prec));
    const JacobiValues trig = jacobi_fn(z, zero, p);
    CHECK(below(abs(trig.sn - sin(z)), -p));
    CHECK(below(abs(jacobi_fn(Complex(zero), Real("0.3", prec), p).sn), -p));
    CHECK_THROWS_AS(jacobi_fn(Complex(zero), Real("0.3", prec), p).ns2(), std::domain_error);

    // sn(K) = 1 at k^2 = 1/2, with K from the AGM.
    const Real half(make_rat(1, 2), prec);
    Real a(1L, prec), b = sqrt(half);
    for (int i = 0; i < 40; ++i) {
      const Real na = (a + b) / 2;
      b = sqrt(a * b);
      a = na;
    }
    const Real big_k = pi(prec) / (a * 2);
    CHECK(below(abs(jacobi_fn(Complex(big_k), half, p).sn - Complex(Real(1L, prec))), -p + 12));

    std::mt19937 rng(3);
    std::uniform_int_distribution<int> re(50, 1200), im(-400, 400), kk(0, 950);
    const Complex one(Real(1L, prec));
    for (int i = 0; i < 10; ++i) {
      const Complex w(Real(make_rat(re(rng), 1000), prec), Real(make_rat(im(rng), 1000), prec));
      const Real k2(make_rat(kk(rng), 1000), prec);
      const JacobiValues j = jacobi_fn(w, k2, p);
      CHECK(below(abs(j.sn2() + square(j.cn) - one), -p + 12));
      CHECK(below(abs(j.sn2() * k2 + j.dn2() - one), -p + 12));
    }
    CHECK_THROWS(jacobi_fn(z, Real(1L, prec), p));
  }

  TEST_CASE("duplication formula numerically") {
    const long p = 60;
    const mpfr_prec_t prec = bits_for_digits(p + 20);
    CHECK(below(check_lemma54(Complex(Real("0.7", prec)), Real(0L, prec), p), -p + 12));
    CHECK(below(check_lemma54(Complex(Real("0.3", prec), Real("0.2", prec)), Real("0.5", prec), p), -p + 12));
  }

  TEST_CASE("Fibonacci eighth powers") {
    CHECK(below(check_fib8(50), -45));
    CHECK(below(check_fib8(100), -95));
  }

  TEST_CASE("relation residuals") {
    const auto res = relation_residuals(relation_space(4), SequenceSpec::fibonacci(), 60);
    REQUIRE(res.size() == 4);
    for (const auto& r : res) CHECK(below(r.absolute, -50));
    const auto pell = relation_residuals(relation_space(3), SequenceSpec::parse("pell"), 40);
    for (const auto& r : pell) CHECK(below(r.absolute, -30));
    // A non-relation has a residual of order one.
    RelationBasis fake{1, {RelationVector{1, IntVector{-2, 1, 1, 1}}}};
    const auto bad = relation_residuals(fake, SequenceSpec::fibonacci(), 40);
    CHECK(!below(bad[0].absolute, -3));
  }
}
