#include "rzr/real.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace rzr {

mpfr_prec_t bits_for_digits(long digits) {
  return static_cast<mpfr_prec_t>(std::ceil(static_cast<double>(digits) * 3.3219280948873623)) + 16;
}

Real::Real(mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

Real::Real(long v, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_si(v_, v, MPFR_RNDN);
}

Real::Real(const Int& v, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const Rat& v, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const std::string& decimal, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  char* end = nullptr;
  mpfr_strtofr(v_, decimal.c_str(), &end, 10, MPFR_RNDN);
  if (end == decimal.c_str() || *end != '\0') {
    mpfr_clear(v_);
    throw std::invalid_argument("not a decimal number: " + decimal);
  }
}

Real::Real(const Real& other) {
  mpfr_init2(v_, other.precision());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(v_, other.precision());
  mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

void Real::widen_to(mpfr_prec_t prec) {
  if (prec > precision()) mpfr_prec_round(v_, prec, MPFR_RNDN);
}

long Real::log10_floor() const {
  if (is_zero()) return -1000000000L;
  Real t(precision());
  mpfr_abs(t.v_, v_, MPFR_RNDN);
  mpfr_log10(t.v_, t.v_, MPFR_RNDD);
  mpfr_floor(t.v_, t.v_);
  return mpfr_get_si(t.v_, MPFR_RNDN);
}

std::string Real::to_string(int digits) const {
  char* buf = nullptr;
  const std::string fmt = "%." + std::to_string(std::max(digits - 1, 0)) + "Re";
  if (mpfr_asprintf(&buf, fmt.c_str(), v_) < 0) throw std::runtime_error("mpfr_asprintf failed");
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

Real& Real::operator+=(const Real& o) {
  widen_to(o.precision());
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& o) {
  widen_to(o.precision());
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& o) {
  widen_to(o.precision());
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& o) {
  widen_to(o.precision());
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(long o) {
  mpfr_mul_si(v_, v_, o, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(long o) {
  mpfr_div_si(v_, v_, o, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real r(*this);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

namespace {

template <typename F>
Real unary(const Real& x, F f) {
  Real r(x.precision());
  f(r.get(), x.get(), MPFR_RNDN);
  return r;
}

}  // namespace

Real pi(mpfr_prec_t prec) {
  Real r(prec);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

Real abs(const Real& x) { return unary(x, mpfr_abs); }
Real sqrt(const Real& x) { return unary(x, mpfr_sqrt); }
Real exp(const Real& x) { return unary(x, mpfr_exp); }
Real log(const Real& x) { return unary(x, mpfr_log); }
Real sin(const Real& x) { return unary(x, mpfr_sin); }
Real cos(const Real& x) { return unary(x, mpfr_cos); }
Real sinh(const Real& x) { return unary(x, mpfr_sinh); }
Real cosh(const Real& x) { return unary(x, mpfr_cosh); }

Real pow(const Real& x, long n) {
  Real r(x.precision());
  mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
  return r;
}

Real pow10(long e, mpfr_prec_t prec) {
  Real r(prec);
  Real ten(10L, prec);
  mpfr_pow_si(r.get(), ten.get(), e, MPFR_RNDN);
  return r;
}

Complex& Complex::operator+=(const Complex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) {
  Real r = re * o.re - im * o.im;
  im = re * o.im + im * o.re;
  re = std::move(r);
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  const Real d = o.re * o.re + o.im * o.im;
  Real r = (re * o.re + im * o.im) / d;
  im = (im * o.re - re * o.im) / d;
  re = std::move(r);
  return *this;
}

Complex& Complex::operator*=(const Real& o) {
  re *= o;
  im *= o;
  return *this;
}

Real abs(const Complex& z) {
  Real r(z.precision());
  mpfr_hypot(r.get(), z.re.get(), z.im.get(), MPFR_RNDN);
  return r;
}

Complex sin(const Complex& z) { return {sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im)}; }

Complex cos(const Complex& z) { return {cos(z.re) * cosh(z.im), -(sin(z.re) * sinh(z.im))}; }

Complex square(const Complex& z) { return z * z; }

}  // namespace rzr
