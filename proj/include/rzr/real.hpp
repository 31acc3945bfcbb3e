#pragma once

// Arbitrary-precision reals over MPFR. Every value carries its own precision;
// binary operations produce a result at the larger of the two operand
// precisions. Nothing here touches MPFR's global default precision.

#include <mpfr.h>

#include <algorithm>
#include <string>
#include <utility>

#include "rzr/rational.hpp"

namespace rzr {

/// Bits needed for `digits` decimal digits (plus a few spare).
mpfr_prec_t bits_for_digits(long digits);

class Real {
 public:
  explicit Real(mpfr_prec_t prec = 64);
  Real(long v, mpfr_prec_t prec);
  Real(const Int& v, mpfr_prec_t prec);
  Real(const Rat& v, mpfr_prec_t prec);
  /// Decimal literal such as "-0.6180339887".
  Real(const std::string& decimal, mpfr_prec_t prec);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Base-10 exponent e with 10^e <= |x| < 10^{e+1}; very negative for 0.
  long log10_floor() const;
  /// Scientific notation with `digits` significant digits.
  std::string to_string(int digits) const;

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real& operator*=(long o);
  Real& operator/=(long o);

  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }
  friend Real operator*(Real a, long b) { return a *= b; }
  friend Real operator/(Real a, long b) { return a /= b; }
  Real operator-() const;

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) {
    return mpfr_greaterequal_p(a.v_, b.v_) != 0;
  }

 private:
  void widen_to(mpfr_prec_t prec);
  mpfr_t v_;
};

Real pi(mpfr_prec_t prec);
Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real pow(const Real& x, long n);
/// 10^e at the given precision.
Real pow10(long e, mpfr_prec_t prec);

struct Complex {
  Real re;
  Real im;

  explicit Complex(mpfr_prec_t prec = 64) : re(prec), im(prec) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  explicit Complex(const Real& r) : re(r), im(0L, r.precision()) {}

  mpfr_prec_t precision() const { return std::max(re.precision(), im.precision()); }

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
  Complex& operator*=(const Real& o);

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator*(Complex a, const Real& b) { return a *= b; }
  Complex operator-() const { return {-re, -im}; }
};

Real abs(const Complex& z);
Complex sin(const Complex& z);
Complex cos(const Complex& z);
Complex square(const Complex& z);

}  // namespace rzr
