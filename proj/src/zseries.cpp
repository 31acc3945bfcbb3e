#include "rzr/zseries.hpp"

#include <algorithm>
#include <stdexcept>

namespace rzr {

namespace {

bool same_parity(int a, int b) { return ((a ^ b) & 1) == 0; }

}  // namespace

ZSeries::ZSeries(int order, int truncation, std::vector<ModPoly> coeffs)
    : order_(order), truncation_(truncation), coeffs_(std::move(coeffs)) {
  if (truncation < order || !same_parity(order, truncation))
    throw std::invalid_argument("ZSeries: truncation must be >= order with the same parity");
  coeffs_.resize(static_cast<std::size_t>((truncation - order) / 2 + 1));
  normalize();
}

ZSeries ZSeries::constant(const ModPoly& c, int truncation) {
  return ZSeries(0, truncation, {c});
}

void ZSeries::normalize() {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
  if (lead == 0) return;
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
  order_ += 2 * static_cast<int>(lead);
}

ModPoly ZSeries::coeff(int exponent) const {
  if (exponent > truncation_) throw std::out_of_range("ZSeries: exponent beyond truncation");
  if (exponent < order_ || !same_parity(exponent, order_)) return {};
  auto idx = static_cast<std::size_t>((exponent - order_) / 2);
  return idx < coeffs_.size() ? coeffs_[idx] : ModPoly{};
}

ZSeries& ZSeries::add_scaled(const ZSeries& o, int sign) {
  if (!same_parity(truncation_, o.truncation_))
    throw std::invalid_argument("ZSeries: adding series of different parity");
  const int trunc = std::min(truncation_, o.truncation_);
  const int ord = std::min({order_, o.order_, trunc});
  std::vector<ModPoly> out(static_cast<std::size_t>((trunc - ord) / 2 + 1));
  for (std::size_t i = 0; i < out.size(); ++i) {
    const int e = ord + 2 * static_cast<int>(i);
    out[i] = coeff(e);
    if (sign > 0)
      out[i] += o.coeff(e);
    else
      out[i] -= o.coeff(e);
  }
  *this = ZSeries(ord, trunc, std::move(out));
  return *this;
}

ZSeries& ZSeries::operator+=(const ZSeries& o) { return add_scaled(o, +1); }
ZSeries& ZSeries::operator-=(const ZSeries& o) { return add_scaled(o, -1); }

ZSeries& ZSeries::operator*=(const ModPoly& c) {
  for (auto& x : coeffs_) x = x * c;
  normalize();
  return *this;
}

ZSeries operator*(const ZSeries& a, const ZSeries& b) {
  const int trunc = std::min(a.truncation_ + b.order_, b.truncation_ + a.order_);
  const int ord = a.order_ + b.order_;
  if (a.is_zero() || b.is_zero() || trunc < ord) {
    ZSeries z;
    z.order_ = trunc + 2;
    z.truncation_ = trunc;
    return z;
  }
  const auto n = static_cast<std::size_t>((trunc - ord) / 2 + 1);
  std::vector<ModPoly> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    ModPoly acc;
    for (std::size_t i = 0; i <= k && i < a.coeffs_.size(); ++i) {
      const std::size_t j = k - i;
      if (j >= b.coeffs_.size()) continue;
      acc += a.coeffs_[i] * b.coeffs_[j];
    }
    out[k] = std::move(acc);
  }
  return ZSeries(ord, trunc, std::move(out));
}

ZSeries ZSeries::reciprocal() const {
  if (is_zero() || !coeffs_.front().is_constant())
    throw std::domain_error("series not invertible");
  const Rat inv_lead = 1 / coeffs_.front().coeff(0);
  const std::size_t n = coeffs_.size();
  std::vector<ModPoly> out(n);
  out[0] = ModPoly::constant(inv_lead);
  for (std::size_t k = 1; k < n; ++k) {
    ModPoly acc;
    for (std::size_t i = 1; i <= k; ++i) acc += coeffs_[i] * out[k - i];
    out[k] = acc * Rat(-inv_lead);
  }
  const int ord = -order_;
  return ZSeries(ord, ord + 2 * static_cast<int>(n - 1), std::move(out));
}

ZSeries ZSeries::derivative() const {
  std::vector<ModPoly> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    out[i] = coeffs_[i] * Rat(order_ + 2 * static_cast<int>(i));
  if (coeffs_.empty()) return ZSeries(truncation_ - 1, truncation_ - 1, {});
  return ZSeries(order_ - 1, truncation_ - 1, std::move(out));
}

ZSeries ZSeries::dilate(long factor) const {
  ZSeries r = *this;
  Int f(static_cast<signed long>(factor));
  Int fpow;
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
    const int e = order_ + 2 * static_cast<int>(i);
    if (e >= 0) {
      mpz_pow_ui(fpow.get_mpz_t(), f.get_mpz_t(), static_cast<unsigned long>(e));
      r.coeffs_[i] *= Rat(fpow);
    } else {
      mpz_pow_ui(fpow.get_mpz_t(), f.get_mpz_t(), static_cast<unsigned long>(-e));
      r.coeffs_[i] *= Rat(1) / Rat(fpow);
    }
  }
  return r;
}

ZSeries ZSeries::truncated(int new_truncation) const {
  if (new_truncation > truncation_) throw std::invalid_argument("ZSeries: cannot extend truncation");
  if (!same_parity(new_truncation, truncation_))
    throw std::invalid_argument("ZSeries: truncation parity mismatch");
  if (new_truncation < order_) {
    ZSeries z;
    z.order_ = new_truncation + 2;
    z.truncation_ = new_truncation;
    return z;
  }
  std::vector<ModPoly> out(coeffs_.begin(),
                           coeffs_.begin() + std::min<std::ptrdiff_t>(
                                                 static_cast<std::ptrdiff_t>(coeffs_.size()),
                                                 (new_truncation - order_) / 2 + 1));
  return ZSeries(order_, new_truncation, std::move(out));
}

bool ZSeries::agrees_with(const ZSeries& o) const {
  if (!same_parity(truncation_, o.truncation_)) return false;
  const int trunc = std::min(truncation_, o.truncation_);
  for (int e = std::min(order_, o.order_); e <= trunc; e += 2)
    if (!(coeff(e) == o.coeff(e))) return false;
  return true;
}

std::string ZSeries::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + coeffs_[i].to_string() + ")*z^" + std::to_string(order_ + 2 * static_cast<int>(i));
  }
  if (s.empty()) s = "0";
  return s + " + O(z^" + std::to_string(truncation_ + 2) + ")";
}

}  // namespace rzr
