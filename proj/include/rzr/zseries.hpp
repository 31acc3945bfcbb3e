#pragma once

// Truncated Laurent series in z whose exponents share one parity, with
// ModPoly coefficients. An even series is a series in z^2; an odd one is
// z times a series in z^2 (used for sn).
//
// Every series is exact through z^truncation(). Results of arithmetic carry
// the largest truncation the operands justify.

#include <string>
#include <vector>

#include "rzr/mod_poly.hpp"

namespace rzr {

class ZSeries {
 public:
  /// coeffs[i] is the coefficient of z^(order + 2i). Coefficients beyond the
  /// truncation are dropped, missing ones are zero. Requires
  /// truncation - order to be even and nonnegative.
  ZSeries(int order, int truncation, std::vector<ModPoly> coeffs);

  static ZSeries constant(const ModPoly& c, int truncation);

  /// Smallest exponent with a nonzero coefficient (truncation + 2 for zero).
  int order() const { return order_; }
  int truncation() const { return truncation_; }
  bool is_odd() const { return (order_ & 1) != 0; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of z^exponent. Throws std::out_of_range past the truncation.
  ModPoly coeff(int exponent) const;

  ZSeries& operator+=(const ZSeries& o);
  ZSeries& operator-=(const ZSeries& o);
  ZSeries& operator*=(const ModPoly& c);

  friend ZSeries operator+(ZSeries a, const ZSeries& b) { return a += b; }
  friend ZSeries operator-(ZSeries a, const ZSeries& b) { return a -= b; }
  friend ZSeries operator*(ZSeries a, const ModPoly& c) { return a *= c; }
  friend ZSeries operator*(const ModPoly& c, ZSeries a) { return a *= c; }
  friend ZSeries operator*(const ZSeries& a, const ZSeries& b);

  ZSeries square() const { return *this * *this; }

  /// 1/s. The leading coefficient must be a nonzero constant; otherwise
  /// throws std::domain_error("series not invertible").
  ZSeries reciprocal() const;

  /// d/dz; flips parity and lowers the truncation by one.
  ZSeries derivative() const;

  /// s(factor * z).
  ZSeries dilate(long factor) const;

  /// Drops every term above z^new_truncation (which may not exceed the
  /// current truncation).
  ZSeries truncated(int new_truncation) const;

  /// Equality of all coefficients through min of both truncations.
  bool agrees_with(const ZSeries& o) const;

  std::string to_string() const;

 private:
  ZSeries() = default;
  void normalize();
  ZSeries& add_scaled(const ZSeries& o, int sign);

  int order_ = 0;
  int truncation_ = 0;
  std::vector<ModPoly> coeffs_;
};

}  // namespace rzr
