#include "rzr/rational.hpp"

#include <stdexcept>

namespace rzr {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const Int& n) { return n.get_str(); }

Rat parse_rat(std::string_view text) {
  auto first = text.find_first_not_of(" \t\n");
  auto last = text.find_last_not_of(" \t\n");
  if (first == std::string_view::npos) throw std::invalid_argument("empty rational");
  std::string s(text.substr(first, last - first + 1));
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    return make_rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational: " + s);
  }
}

Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Int pow2(unsigned long e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

IntVector primitive_integer_vector(const RatVector& v) {
  Int lcm = 1;
  for (const auto& x : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
  IntVector out;
  out.reserve(v.size());
  Int g = 0;
  for (const auto& x : v) {
    Int n = x.get_num() * (lcm / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    out.push_back(std::move(n));
  }
  if (g > 1)
    for (auto& n : out) mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), g.get_mpz_t());
  return out;
}

void normalize_sign_first_negative(IntVector& v) {
  for (const auto& x : v) {
    if (x == 0) continue;
    if (x > 0)
      for (auto& y : v) y = -y;
    return;
  }
}

RatVector to_rat_vector(const IntVector& v) {
  RatVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

}  // namespace rzr
