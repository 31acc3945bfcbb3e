#pragma once

// Numerical certification at arbitrary precision: the four reciprocal series
// summed directly with a certified tail, the closed forms in k, K, E, Jacobi
// elliptic functions via theta quotients, and residuals of relations.

#include <optional>
#include <string>
#include <vector>

#include "rzr/kernel_solver.hpp"
#include "rzr/real.hpp"
#include "rzr/relation_matrix.hpp"

namespace rzr {

/// Guard digits for a computation that accumulates `terms` terms:
/// 10 + ceil(log10(terms)), unless RZR_GUARD_DIGITS is set.
long guard_digits(long terms);

/// The pair (alpha, beta) with alpha * beta = -1 and |beta| < 1.
/// Either alpha + beta is an integer `trace` (exact integer sequences), or
/// beta is given as a decimal literal.
struct SequenceSpec {
  std::string name;
  std::optional<long> trace;
  std::string beta_decimal;

  static SequenceSpec fibonacci() { return {"fibonacci", 1, {}}; }
  /// "fibonacci", "pell", "trace=<nonzero int>" or "beta=<decimal>".
  static SequenceSpec parse(const std::string& text);

  Real beta(mpfr_prec_t prec) const;
  Real alpha(mpfr_prec_t prec) const;
  /// (alpha - beta)^2, exact when the trace is an integer.
  std::optional<Rat> alpha_minus_beta_sq_exact() const;
};

struct SequenceTerms {
  /// Indices 0..n_max; U_0 = 0, V_0 = 2.
  std::vector<Real> u;
  std::vector<Real> v;
  /// Filled only for integer traces.
  std::vector<Int> u_exact;
  std::vector<Int> v_exact;
};

/// Throws std::domain_error("series undefined") if some U_n or V_n vanishes.
SequenceTerms gen_terms(const SequenceSpec& spec, long n_max, mpfr_prec_t prec);

struct SeriesValue {
  Real value;
  long terms_used = 0;
  /// Certified bound on the neglected tail, below 10^{-p-g}.
  Real tail_bound;
  long guard = 0;
};

/// Phi_2s, Phi*_2s (with the (alpha - beta)^{-2s} prefactor), Psi_2s or
/// Psi*_2s, to `digits` decimal digits plus guard digits.
SeriesValue sum_series(const SequenceSpec& spec, int s, SeriesKind kind, long digits);

/// All four series for s = 1..m, sharing one pass over the terms.
/// Element [4(s-1) + kind].
std::vector<SeriesValue> sum_all_series(const SequenceSpec& spec, int m, long digits);

struct EllipticContext {
  long digits = 0;
  long guard = 0;
  Real q, k, k2, kp, K, E, Kp;
  /// |exp(-pi K'/K) - q|.
  Real roundtrip_residual;
};

/// Requires 0 < q < 1; throws std::domain_error otherwise.
EllipticContext nome_to_elliptic(const Real& q, long digits);
/// q = beta^2 for the sequence.
EllipticContext elliptic_for(const SequenceSpec& spec, long digits);

/// The closed form for the given series, evaluated from k, K, E; tables must
/// reach index s - 1.
Real eval_closed_form(int s, SeriesKind kind, const EllipticContext& ctx,
                      const SymbolicTables& tables);

/// Numeric values of the coordinates x_1 .. x_4m.
std::vector<Real> coordinate_values(int m, const EllipticContext& ctx,
                                    const SymbolicTables& tables);

/// xi_col = sum_i L(i, col) x_{i+1}, for every column.
std::vector<Real> eval_via_linear_forms(int m, const EllipticContext& ctx,
                                        const SymbolicTables& tables);

struct JacobiValues {
  Complex sn, cn, dn;
  Real pole_threshold;

  Complex sn2() const { return square(sn); }
  Complex dn2() const { return square(dn); }
  /// Throw std::domain_error("argument near pole") when the denominator is
  /// smaller than pole_threshold.
  Complex ns2() const;
  Complex nc2() const;
  Complex nd2() const;
};

/// Requires 0 <= k2 < 1. The default threshold is 10^{-digits/4}.
JacobiValues jacobi_fn(const Complex& z, const Real& k2, long digits,
                       std::optional<Real> pole_threshold = std::nullopt);

/// |4 ns^2(2z) - [(1-k^2)(nc^2 z - nd^2 z) + (ns^2 z - dn^2 z) + (2 + k^2)]|.
Real check_lemma54(const Complex& z, const Real& k2, long digits);

/// Sum 1/F_n^8 minus the rational expression in the sums of 1/F_n^2, ^4, ^6.
Real check_fib8(long digits);

struct RelationResidual {
  IntVector t;
  /// |sum t_i xi_i|.
  Real absolute;
  /// absolute / max |t_i|.
  Real normalized;
};

/// Residuals of each basis vector under directly summed series.
std::vector<RelationResidual> relation_residuals(const RelationBasis& basis,
                                                 const SequenceSpec& spec, long digits);

}  // namespace rzr
