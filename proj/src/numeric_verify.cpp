#include "rzr/numeric_verify.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace rzr {

long guard_digits(long terms) {
  if (const char* env = std::getenv("RZR_GUARD_DIGITS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long g = std::strtol(env, &end, 10);
    if (*end != '\0' || g < 0) throw std::invalid_argument("RZR_GUARD_DIGITS must be a non-negative integer");
    return g;
  }
  return 10 + static_cast<long>(std::ceil(std::log10(static_cast<double>(std::max(terms, 1L)))));
}

SequenceSpec SequenceSpec::parse(const std::string& text) {
  if (text == "fibonacci") return fibonacci();
  if (text == "pell") return {"pell", 2, {}};
  if (text.rfind("trace=", 0) == 0) {
    std::size_t used = 0;
    long c = 0;
    try {
      c = std::stol(text.substr(6), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != text.size() - 6) throw std::invalid_argument("bad trace: " + text);
    if (c == 0) throw std::invalid_argument("trace must be nonzero (beta = -1 is not allowed)");
    return {text, c, {}};
  }
  if (text.rfind("beta=", 0) == 0) {
    SequenceSpec spec{text, std::nullopt, text.substr(5)};
    const Real b = spec.beta(128);
    if (b.is_zero() || abs(b) >= Real(1L, 128))
      throw std::invalid_argument("beta must satisfy 0 < |beta| < 1");
    return spec;
  }
  throw std::invalid_argument("unknown sequence: " + text);
}

Real SequenceSpec::beta(mpfr_prec_t prec) const {
  if (trace) {
    const long c = *trace;
    const Real root = sqrt(Real(c * c + 4, prec));
    Real b = c > 0 ? Real(c, prec) - root : Real(c, prec) + root;
    return b / 2;
  }
  return Real(beta_decimal, prec);
}

Real SequenceSpec::alpha(mpfr_prec_t prec) const { return Real(-1L, prec) / beta(prec); }

std::optional<Rat> SequenceSpec::alpha_minus_beta_sq_exact() const {
  if (!trace) return std::nullopt;
  return Rat(*trace * *trace + 4);
}

SequenceTerms gen_terms(const SequenceSpec& spec, long n_max, mpfr_prec_t prec) {
  if (n_max < 1) throw std::invalid_argument("gen_terms: n_max must be >= 1");
  SequenceTerms t;
  const auto n = static_cast<std::size_t>(n_max);
  if (spec.trace) {
    const Int c = *spec.trace;
    t.u_exact = {0, 1};
    t.v_exact = {2, c};
    for (std::size_t i = 2; i <= n; ++i) {
      t.u_exact.push_back(c * t.u_exact[i - 1] + t.u_exact[i - 2]);
      t.v_exact.push_back(c * t.v_exact[i - 1] + t.v_exact[i - 2]);
    }
    t.u_exact.resize(n + 1);
    t.v_exact.resize(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      if (i > 0 && (t.u_exact[i] == 0 || t.v_exact[i] == 0))
        throw std::domain_error("series undefined");
      t.u.emplace_back(t.u_exact[i], prec);
      t.v.emplace_back(t.v_exact[i], prec);
    }
    return t;
  }
  const Real b = spec.beta(prec);
  const Real c = spec.alpha(prec) + b;
  t.u = {Real(0L, prec), Real(1L, prec)};
  t.v = {Real(2L, prec), c};
  for (std::size_t i = 2; i <= n; ++i) {
    t.u.push_back(c * t.u[i - 1] + t.u[i - 2]);
    t.v.push_back(c * t.v[i - 1] + t.v[i - 2]);
  }
  t.u.resize(n + 1, Real(prec));
  t.v.resize(n + 1, Real(prec));
  for (std::size_t i = 1; i <= n; ++i)
    if (t.u[i].is_zero() || t.v[i].is_zero()) throw std::domain_error("series undefined");
  return t;
}

namespace {

double abs_beta_double(const SequenceSpec& spec) { return std::fabs(spec.beta(128).to_double()); }

// log10 of the tail bound after N terms for exponent 2s.
double log10_tail(double b, int s, long n) {
  const double lb = std::log10(b);
  const double bn = std::pow(b, 2.0 * static_cast<double>(n + 1));
  const double b2s = std::pow(b, 2.0 * s);
  return 2.0 * s * static_cast<double>(n + 1) * lb - 2.0 * s * std::log10(1.0 - bn) -
         std::log10(1.0 - b2s);
}

// |beta|^{2s(N+1)} / ((1 - |beta|^{2(N+1)})^{2s} (1 - |beta|^{2s})). Bounds
// the tail of all four series (with the Phi prefactor applied).
Real tail_bound(const Real& abs_b, int s, long n) {
  const Real one(1L, abs_b.precision());
  const Real bn = pow(abs_b, 2 * (n + 1));
  return pow(bn, s) / (pow(one - bn, 2L * s) * (one - pow(abs_b, 2L * s)));
}

struct SumPlan {
  long terms;
  long guard;
  mpfr_prec_t prec;
};

SumPlan plan_sum(const SequenceSpec& spec, int s, long digits) {
  const double b = abs_beta_double(spec);
  long guard = guard_digits(100);
  long n = 1;
  for (int round = 0; round < 3; ++round) {
    const double target = -static_cast<double>(digits + guard) - 1.0;
    n = 1;
    while (log10_tail(b, s, n) >= target) ++n;
    guard = guard_digits(n);
  }
  return {n, guard, bits_for_digits(digits + guard)};
}

std::vector<SeriesValue> sum_up_to(const SequenceSpec& spec, int m, long digits) {
  if (m < 1) throw std::invalid_argument("sum_series: s must be >= 1");
  if (digits < 10) throw std::invalid_argument("sum_series: precision must be >= 10 digits");
  SumPlan plan = plan_sum(spec, 1, digits);
  const Real abs_b = abs(spec.beta(plan.prec));
  const Real limit = pow10(-(digits + plan.guard), plan.prec);
  while (tail_bound(abs_b, 1, plan.terms) >= limit) ++plan.terms;

  const SequenceTerms terms = gen_terms(spec, plan.terms, plan.prec);
  const auto mm = static_cast<std::size_t>(m);
  std::vector<Real> phi(mm, Real(plan.prec)), phi_star(mm, Real(plan.prec)),
      psi(mm, Real(plan.prec)), psi_star(mm, Real(plan.prec));
  const Real one(1L, plan.prec);
  for (long n = 1; n <= plan.terms; ++n) {
    const auto i = static_cast<std::size_t>(n);
    const Real iu = one / (terms.u[i] * terms.u[i]);
    const Real iv = one / (terms.v[i] * terms.v[i]);
    Real pu = iu, pv = iv;
    for (std::size_t s = 0; s < mm; ++s) {
      if (s > 0) {
        pu *= iu;
        pv *= iv;
      }
      phi[s] += pu;
      psi[s] += pv;
      if (n % 2 == 1) {
        phi_star[s] += pu;
        psi_star[s] += pv;
      } else {
        phi_star[s] -= pu;
        psi_star[s] -= pv;
      }
    }
  }

  std::vector<SeriesValue> out;
  const auto exact = spec.alpha_minus_beta_sq_exact();
  const Real d2 = exact ? Real(*exact, plan.prec) : pow(spec.alpha(plan.prec) - spec.beta(plan.prec), 2);
  for (std::size_t s = 0; s < mm; ++s) {
    const long ss = static_cast<long>(s) + 1;
    const Real pre = one / pow(d2, ss);
    const Real tail = tail_bound(abs_b, static_cast<int>(ss), plan.terms);
    for (Real* v : {&phi[s], &phi_star[s], &psi[s], &psi_star[s]}) {
      Real value = (v == &phi[s] || v == &phi_star[s]) ? *v * pre : *v;
      out.push_back({std::move(value), plan.terms, tail, plan.guard});
    }
  }
  return out;
}

}  // namespace

SeriesValue sum_series(const SequenceSpec& spec, int s, SeriesKind kind, long digits) {
  if (s < 1) throw std::invalid_argument("sum_series: s must be >= 1");
  // A dedicated pass sized for this s only.
  SumPlan plan = plan_sum(spec, s, digits);
  const Real abs_b = abs(spec.beta(plan.prec));
  const Real limit = pow10(-(digits + plan.guard), plan.prec);
  while (tail_bound(abs_b, s, plan.terms) >= limit) ++plan.terms;
  const SequenceTerms terms = gen_terms(spec, plan.terms, plan.prec);
  const bool use_u = kind == SeriesKind::Phi || kind == SeriesKind::PhiStar;
  const bool alternating = kind == SeriesKind::PhiStar || kind == SeriesKind::PsiStar;
  const Real one(1L, plan.prec);
  Real sum(plan.prec);
  for (long n = 1; n <= plan.terms; ++n) {
    const auto i = static_cast<std::size_t>(n);
    const Real term = one / pow(use_u ? terms.u[i] : terms.v[i], 2L * s);
    if (alternating && n % 2 == 0)
      sum -= term;
    else
      sum += term;
  }
  if (use_u) {
    const auto exact = spec.alpha_minus_beta_sq_exact();
    const Real d2 =
        exact ? Real(*exact, plan.prec) : pow(spec.alpha(plan.prec) - spec.beta(plan.prec), 2);
    sum /= pow(d2, s);
  }
  return {std::move(sum), plan.terms, tail_bound(abs_b, s, plan.terms), plan.guard};
}

std::vector<SeriesValue> sum_all_series(const SequenceSpec& spec, int m, long digits) {
  return sum_up_to(spec, m, digits);
}

namespace {

Real agm(Real a, Real b) {
  const Real eps = pow10(-static_cast<long>(a.precision() * 0.30103) + 2, a.precision());
  for (int i = 0; i < 10000; ++i) {
    if (abs(a - b) <= eps * abs(a)) break;
    Real na = (a + b) / 2;
    b = sqrt(a * b);
    a = std::move(na);
  }
  return a;
}

struct NullTheta {
  Real t2, t3, t4;
};

// theta_2, theta_3, theta_4 at argument 0 for a real nome.
NullTheta null_theta(const Real& q) {
  const mpfr_prec_t prec = q.precision();
  const Real eps = pow10(-static_cast<long>(prec * 0.30103) - 2, prec);
  Real s2(1L, prec), s3(prec), s4(prec);
  for (long n = 1;; ++n) {
    const Real qn2 = pow(q, n * n);
    const Real qnn = pow(q, n * (n + 1));
    s2 += qnn;
    s3 += qn2;
    if (n % 2 == 0)
      s4 += qn2;
    else
      s4 -= qn2;
    if (qn2 < eps) break;
  }
  Real q14 = sqrt(sqrt(q));
  return {q14 * s2 * 2, Real(1L, prec) + s3 * 2, Real(1L, prec) + s4 * 2};
}

}  // namespace

EllipticContext nome_to_elliptic(const Real& q_in, long digits) {
  if (q_in.sign() <= 0 || q_in >= Real(1L, q_in.precision()))
    throw std::domain_error("nome must satisfy 0 < q < 1");
  EllipticContext ctx;
  ctx.digits = digits;
  ctx.guard = guard_digits(100);
  const mpfr_prec_t prec = bits_for_digits(digits + ctx.guard);
  ctx.q = q_in;
  Real q = q_in;
  mpfr_prec_round(q.get(), prec, MPFR_RNDN);
  const NullTheta th = null_theta(q);
  const Real t3sq = th.t3 * th.t3;
  ctx.k = th.t2 * th.t2 / t3sq;
  ctx.kp = th.t4 * th.t4 / t3sq;
  ctx.k2 = ctx.k * ctx.k;
  const Real pi_v = pi(prec);
  ctx.K = pi_v * t3sq / 2;

  // Second kind alongside the AGM for K: E = K (1 - sum 2^{n-1} c_n^2).
  {
    Real a(1L, prec), b = ctx.kp, c = ctx.k;
    Real sum = c * c / 2;
    Real pw(1L, prec);
    const Real eps = pow10(-(digits + ctx.guard) - 5, prec);
    for (int i = 0; i < 10000 && abs(c) > eps; ++i) {
      Real na = (a + b) / 2;
      c = (a - b) / 2;
      b = sqrt(a * b);
      a = std::move(na);
      sum += pw * c * c;
      pw *= 2;
    }
    ctx.E = ctx.K * (Real(1L, prec) - sum);
  }
  ctx.Kp = pi_v / (agm(Real(1L, prec), ctx.k) * 2);
  ctx.roundtrip_residual = abs(exp(-(pi_v * ctx.Kp / ctx.K)) - q);
  return ctx;
}

EllipticContext elliptic_for(const SequenceSpec& spec, long digits) {
  const mpfr_prec_t prec = bits_for_digits(digits + guard_digits(100));
  const Real b = spec.beta(prec);
  return nome_to_elliptic(b * b, digits);
}

namespace {

Real eval_poly(const ModPoly& p, const Real& k2) {
  Real acc(k2.precision());
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= k2;
    acc += Real(*it, k2.precision());
  }
  return acc;
}

}  // namespace

Real eval_closed_form(int s, SeriesKind kind, const EllipticContext& ctx,
                      const SymbolicTables& tables) {
  if (s < 1) throw std::invalid_argument("eval_closed_form: s must be >= 1");
  if (s - 1 > tables.aux.max_j || s - 1 > tables.trig.max_j)
    throw std::out_of_range("eval_closed_form: tables too shallow");
  const mpfr_prec_t prec = ctx.K.precision();
  const Real one(1L, prec);
  const Real two_k_pi = ctx.K * 2 / pi(prec);
  const Real x = two_k_pi * two_k_pi;
  const Real& k2 = ctx.k2;
  const Real ek = ctx.E / ctx.K;
  const bool even = s % 2 == 0;
  const Real f24 = Real(Rat(factorial(static_cast<unsigned long>(s - 1)) *
                            factorial(static_cast<unsigned long>(s - 1))),
                        prec) /
                   24;
  const Real f8 = f24 * 3;
  const Real with_e = one - x * (ek * 6 - Real(5L, prec) + k2 * 4);  // 1 - X(6E/K - 5 + 4k^2)
  const Real without_e = one - x * (one - k2 * 2);                 // 1 - X(1 - 2k^2)
  const Real psi_e = one + x * (one - ek * 2);                      // 1 + X(1 - 2E/K)

  Real lead(prec);
  switch (kind) {
    case SeriesKind::Phi: lead = even ? -(f24 * with_e) : f24 * without_e; break;
    case SeriesKind::PhiStar: lead = even ? f24 * without_e : -(f24 * with_e); break;
    case SeriesKind::Psi: lead = even ? -(f8 * psi_e) : f8 * (x - one); break;
    case SeriesKind::PsiStar: lead = even ? -(f8 * (x - one)) : f8 * psi_e; break;
  }

  Real sum(prec);
  Real xp = x;
  for (int j = 1; j <= s - 1; ++j) {
    xp *= x;  // X^{j+1}
    const Rat wr = sigma(s - j - 1, s) * Rat(factorial(static_cast<unsigned long>(2 * j))) /
                   Rat(pow2(static_cast<unsigned long>(2 * j + 3))) * (j % 2 == 0 ? 1 : -1);
    const Real w(wr, prec);
    const Real a(tables.trig.a(j), prec);
    const Real b(tables.trig.b(j), prec);
    Real term(prec);
    switch (kind) {
      case SeriesKind::Phi:
        term = a - xp * eval_poly(even ? tables.aux.theta_minus(j) : tables.aux.theta_plus(j), k2);
        break;
      case SeriesKind::PhiStar:
        term = -(a - xp * eval_poly(even ? tables.aux.theta_plus(j) : tables.aux.theta_minus(j), k2));
        break;
      case SeriesKind::Psi:
        term = even ? b - xp * eval_poly(tables.aux.lambda_minus(j), k2)
                    : xp * eval_poly(tables.aux.lambda_plus(j), k2) - b;
        break;
      case SeriesKind::PsiStar:
        term = even ? xp * eval_poly(tables.aux.lambda_plus(j), k2) - b
                    : b - xp * eval_poly(tables.aux.lambda_minus(j), k2);
        break;
    }
    sum += w * term;
  }
  return (lead + sum) / Real(factorial(static_cast<unsigned long>(2 * s - 1)), prec);
}

std::vector<Real> coordinate_values(int m, const EllipticContext& ctx,
                                    const SymbolicTables& tables) {
  const mpfr_prec_t prec = ctx.K.precision();
  const Real one(1L, prec);
  const Real two_k_pi = ctx.K * 2 / pi(prec);
  const Real x = two_k_pi * two_k_pi;
  const Real& k2 = ctx.k2;
  std::vector<Real> out;
  for (const Coordinate& c : coordinate_frame(m)) {
    switch (c.index) {
      case 1: out.push_back(one); break;
      case 2: out.push_back(x); break;
      case 3: out.push_back(x * (k2 * 2 - one)); break;
      case 4: out.push_back(x * (ctx.E / ctx.K * 6 - Real(5L, prec) + k2 * 4)); break;
      default:
        out.push_back(pow(x, c.power / 2) * eval_poly(aux_poly(tables.aux, c.kind, c.aux_index), k2));
    }
  }
  return out;
}

std::vector<Real> eval_via_linear_forms(int m, const EllipticContext& ctx,
                                        const SymbolicTables& tables) {
  const std::vector<Real> x = coordinate_values(m, ctx, tables);
  const RatMatrix l = linear_forms(m, tables.wt, tables.trig);
  const mpfr_prec_t prec = ctx.K.precision();
  std::vector<Real> out;
  for (std::size_t col = 0; col < l.cols(); ++col) {
    Real acc(prec);
    for (std::size_t i = 0; i < l.rows(); ++i)
      if (l(i, col) != 0) acc += Real(l(i, col), prec) * x[i];
    out.push_back(std::move(acc));
  }
  return out;
}

namespace {

Complex checked_inverse_square(const Complex& w, const Real& threshold) {
  if (abs(w) < threshold) throw std::domain_error("argument near pole");
  const Complex one(Real(1L, w.precision()));
  return one / square(w);
}

}  // namespace

Complex JacobiValues::ns2() const { return checked_inverse_square(sn, pole_threshold); }
Complex JacobiValues::nc2() const { return checked_inverse_square(cn, pole_threshold); }
Complex JacobiValues::nd2() const { return checked_inverse_square(dn, pole_threshold); }

JacobiValues jacobi_fn(const Complex& z_in, const Real& k2_in, long digits,
                       std::optional<Real> pole_threshold) {
  const long guard = guard_digits(100);
  const mpfr_prec_t prec = bits_for_digits(digits + guard);
  Real k2 = k2_in;
  mpfr_prec_round(k2.get(), prec, MPFR_RNDN);
  if (k2.sign() < 0 || k2 >= Real(1L, prec)) throw std::domain_error("jacobi_fn: need 0 <= k^2 < 1");
  Complex z = z_in;
  mpfr_prec_round(z.re.get(), prec, MPFR_RNDN);
  mpfr_prec_round(z.im.get(), prec, MPFR_RNDN);
  const Real one(1L, prec);
  JacobiValues out{Complex(prec), Complex(prec), Complex(prec),
                   pole_threshold ? *pole_threshold : pow10(-digits / 4, prec)};
  if (k2.is_zero()) {
    out.sn = sin(z);
    out.cn = cos(z);
    out.dn = Complex(one);
    return out;
  }
  const Real k = sqrt(k2);
  const Real kp = sqrt(one - k2);
  const Real agm_kp = agm(one, kp);
  const Real pi_v = pi(prec);
  const Real big_k = pi_v / (agm_kp * 2);
  const Real big_kp = pi_v / (agm(one, k) * 2);
  const Real q = exp(-(pi_v * big_kp / big_k));
  const Complex v = z * agm_kp;  // pi z / (2K)

  // Theta functions at v, summed until the terms fall below the working
  // precision (|cos w|, |sin w| <= cosh(Im w)).
  const Real eps = pow10(-(digits + guard) - 5, prec);
  const Real y = abs(v.im);
  Complex t1(prec), t2(prec), t3{one}, t4{one};
  for (long n = 0;; ++n) {
    const Real qh = exp(log(q) * Real(Rat((2 * n + 1) * (2 * n + 1), 4), prec));  // q^{(n+1/2)^2}
    const Real odd(2 * n + 1, prec);
    const Complex so = sin(v * odd), co = cos(v * odd);
    Complex a = so * qh, b = co * qh;
    if (n % 2 == 1) a = -a;
    t1 += a;
    t2 += b;
    const long m = n + 1;
    const Real qn = pow(q, m * m);
    const Complex ce = cos(v * Real(2 * m, prec)) * qn;
    t3 += ce;
    if (m % 2 == 0)
      t4 += ce;
    else
      t4 -= ce;
    if (qh * cosh(y * odd) < eps && qn * cosh(y * Real(2 * m, prec)) < eps) break;
  }
  // The loop accumulated half of each non-constant series.
  t1 *= Real(2L, prec);
  t2 *= Real(2L, prec);
  t3 = t3 + t3 - Complex(one);
  t4 = t4 + t4 - Complex(one);

  const NullTheta th = null_theta(q);
  out.sn = Complex(th.t3 / th.t2) * t1 / t4;
  out.cn = Complex(th.t4 / th.t2) * t2 / t4;
  out.dn = Complex(th.t4 / th.t3) * t3 / t4;
  return out;
}

Real check_lemma54(const Complex& z, const Real& k2, long digits) {
  const JacobiValues at_z = jacobi_fn(z, k2, digits);
  const Complex z2 = z + z;
  const JacobiValues at_2z = jacobi_fn(z2, k2, digits);
  const mpfr_prec_t prec = at_z.sn.precision();
  Real k2p = k2;
  mpfr_prec_round(k2p.get(), prec, MPFR_RNDN);
  const Real one(1L, prec);
  const Complex lhs = at_2z.ns2() * Real(4L, prec);
  Complex rhs = (at_z.nc2() - at_z.nd2()) * (one - k2p);
  rhs += at_z.ns2() - at_z.dn2();
  rhs += Complex(Real(2L, prec) + k2p);
  return abs(lhs - rhs);
}

Real check_fib8(long digits) {
  const auto sums = sum_all_series(SequenceSpec::fibonacci(), 4, digits);
  const mpfr_prec_t prec = sums[0].value.precision();
  auto zeta = [&](long s) {
    return sums[static_cast<std::size_t>(4 * (s - 1))].value * pow(Real(5L, prec), s);
  };
  const Real x = zeta(1), y = zeta(2), z = zeta(3), w = zeta(4);
  const Real x2 = x * x, x3 = x2 * x;
  Real poly = pow(x, 6) * 256 - pow(x, 5) * 3456 + pow(x, 4) * 2880 + x3 * z * 1792 - x3 * 11100 +
              x2 * z * 20160 - x2 * 10125 + x * z * 7560 + z * z * 3136 - z * 1050;
  const Real d = x * 4 + Real(5L, prec);
  const Real rhs = y * 15 / 14 + poly / (d * d * 378);
  return abs(w - rhs);
}

std::vector<RelationResidual> relation_residuals(const RelationBasis& basis,
                                                 const SequenceSpec& spec, long digits) {
  long extra = 0;
  for (const auto& v : basis.vectors)
    for (const Int& x : v.t) extra = std::max(extra, static_cast<long>(mpz_sizeinbase(x.get_mpz_t(), 10)));
  const auto sums = sum_all_series(spec, basis.m, digits + extra);
  const mpfr_prec_t prec = sums[0].value.precision();
  std::vector<RelationResidual> out;
  for (const auto& v : basis.vectors) {
    Real acc(prec);
    Int max_t = 0;
    for (std::size_t i = 0; i < v.t.size(); ++i) {
      if (v.t[i] == 0) continue;
      acc += Real(v.t[i], prec) * sums[i].value;
      if (abs(v.t[i]) > max_t) max_t = abs(v.t[i]);
    }
    Real a = abs(acc);
    Real n = max_t == 0 ? a : a / Real(max_t, prec);
    out.push_back({v.t, std::move(a), std::move(n)});
  }
  return out;
}

}  // namespace rzr
