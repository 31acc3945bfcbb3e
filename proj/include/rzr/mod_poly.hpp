#pragma once

// Dense polynomials with rational coefficients in the single variable k^2.
// Coefficient i is the coefficient of k^(2i).

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "rzr/rational.hpp"

namespace rzr {

class ModPoly {
 public:
  ModPoly() = default;
  explicit ModPoly(std::vector<Rat> coeffs);
  ModPoly(std::initializer_list<Rat> coeffs);

  static ModPoly constant(const Rat& c);
  /// The polynomial k^2 itself.
  static ModPoly k2();

  /// Highest power of k^2 with a nonzero coefficient; nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  /// Coefficient of k^(2i); zero past the degree.
  Rat coeff(std::size_t i) const;
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  Rat eval(const Rat& k2) const;

  ModPoly& operator+=(const ModPoly& o);
  ModPoly& operator-=(const ModPoly& o);
  ModPoly& operator*=(const Rat& c);

  friend ModPoly operator+(ModPoly a, const ModPoly& b) { return a += b; }
  friend ModPoly operator-(ModPoly a, const ModPoly& b) { return a -= b; }
  friend ModPoly operator*(ModPoly a, const Rat& c) { return a *= c; }
  friend ModPoly operator*(const Rat& c, ModPoly a) { return a *= c; }
  friend ModPoly operator*(const ModPoly& a, const ModPoly& b);
  ModPoly operator-() const;

  friend bool operator==(const ModPoly& a, const ModPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Human-readable form, e.g. "1/15 - 1/15*k^2 + 1/15*k^4".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

}  // namespace rzr
