#pragma once

#include <string>
#include <vector>

#include "rzr/mod_poly.hpp"
#include "rzr/rational.hpp"

namespace rzr::testing {

inline Rat q(const char* text) { return parse_rat(text); }
inline ModPoly k2() { return ModPoly::k2(); }
inline ModPoly c(const Rat& v) { return ModPoly::constant(v); }
inline ModPoly c(long v) { return ModPoly::constant(Rat(v)); }

inline IntVector ints(std::initializer_list<long> v) {
  IntVector out;
  for (long x : v) out.emplace_back(x);
  return out;
}

inline RatVector rats(std::initializer_list<const char*> v) {
  RatVector out;
  for (const char* x : v) out.push_back(parse_rat(x));
  return out;
}

/// Plain power-series inverse of a[0] + a[1] x + ..., through x^(n-1).
inline std::vector<Rat> series_inverse(const std::vector<Rat>& a, std::size_t n) {
  std::vector<Rat> b(n);
  b[0] = 1 / a[0];
  for (std::size_t i = 1; i < n; ++i) {
    Rat acc = 0;
    for (std::size_t j = 1; j <= i && j < a.size(); ++j) acc += a[j] * b[i - j];
    b[i] = -acc / a[0];
  }
  return b;
}

}  // namespace rzr::testing
