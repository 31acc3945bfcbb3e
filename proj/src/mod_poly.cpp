#include "rzr/mod_poly.hpp"

#include <algorithm>

namespace rzr {

ModPoly::ModPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

ModPoly::ModPoly(std::initializer_list<Rat> coeffs) : coeffs_(coeffs) { trim(); }

ModPoly ModPoly::constant(const Rat& c) { return ModPoly({c}); }

ModPoly ModPoly::k2() { return ModPoly({Rat(0), Rat(1)}); }

void ModPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<std::size_t> ModPoly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Rat ModPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rat(0); }

Rat ModPoly::eval(const Rat& k2) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * k2 + *it;
  return acc;
}

ModPoly& ModPoly::operator+=(const ModPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

ModPoly& ModPoly::operator-=(const ModPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

ModPoly& ModPoly::operator*=(const Rat& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

ModPoly ModPoly::operator-() const {
  ModPoly r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

namespace {

// Integer numerators over a common denominator: p = nums / den.
struct Cleared {
  std::vector<Int> nums;
  Int den = 1;
};

Cleared clear_denominators(const std::vector<Rat>& c) {
  Cleared out;
  for (const auto& x : c) mpz_lcm(out.den.get_mpz_t(), out.den.get_mpz_t(), x.get_den_mpz_t());
  out.nums.reserve(c.size());
  for (const auto& x : c) out.nums.push_back(x.get_num() * (out.den / x.get_den()));
  return out;
}

}  // namespace

// Convolution is done on integer numerators; only the final coefficients are
// canonicalized, which keeps gcd work out of the inner loop.
ModPoly operator*(const ModPoly& a, const ModPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const Cleared ca = clear_denominators(a.coeffs_);
  const Cleared cb = clear_denominators(b.coeffs_);
  std::vector<Int> prod(ca.nums.size() + cb.nums.size() - 1);
  for (std::size_t i = 0; i < ca.nums.size(); ++i) {
    if (ca.nums[i] == 0) continue;
    for (std::size_t j = 0; j < cb.nums.size(); ++j)
      mpz_addmul(prod[i + j].get_mpz_t(), ca.nums[i].get_mpz_t(), cb.nums[j].get_mpz_t());
  }
  const Int den = ca.den * cb.den;
  std::vector<Rat> out;
  out.reserve(prod.size());
  for (auto& n : prod) out.push_back(make_rat(n, den));
  return ModPoly(std::move(out));
}

std::string ModPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rat& c = coeffs_[i];
    if (c == 0) continue;
    Rat mag = abs(c);
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    first = false;
    if (i == 0) {
      s += rzr::to_string(mag);
    } else {
      if (mag != 1) s += rzr::to_string(mag) + "*";
      s += i == 1 ? "k^2" : "k^" + std::to_string(2 * i);
    }
  }
  return s;
}

}  // namespace rzr
