#include "rzr/elliptic_series.hpp"

#include <stdexcept>
#include <string>

#include "rzr/bernoulli.hpp"

namespace rzr {

namespace {

void check_index(int j, int lo, int hi, const char* what) {
  if (j < lo || j > hi)
    throw std::out_of_range(std::string(what) + ": index " + std::to_string(j) + " outside [" +
                            std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

const ModPoly one_minus_k2{Rat(1), Rat(-1)};

}  // namespace

const ModPoly& LaurentCoeffTable::c(int j) const {
  check_index(j, 1, max_j, "c_j");
  return c_[static_cast<std::size_t>(j)];
}
const ModPoly& LaurentCoeffTable::d(int j) const {
  check_index(j, 1, max_j, "d_j");
  return d_[static_cast<std::size_t>(j)];
}
const ModPoly& LaurentCoeffTable::e(int j) const {
  check_index(j, 1, max_j, "e_j");
  return e_[static_cast<std::size_t>(j)];
}
const ModPoly& LaurentCoeffTable::f(int j) const {
  check_index(j, 1, max_j, "f_j");
  return f_[static_cast<std::size_t>(j)];
}

const Rat& TrigCoeffTable::a(int j) const {
  check_index(j, 0, max_j, "a_j");
  return a_[static_cast<std::size_t>(j)];
}
const Rat& TrigCoeffTable::b(int j) const {
  check_index(j, 0, max_j, "b_j");
  return b_[static_cast<std::size_t>(j)];
}

ZSeries sn_series(int truncation) {
  if (truncation < 2 || truncation % 2 != 0)
    throw std::invalid_argument("sn_series: truncation must be even and >= 2");
  const auto terms = static_cast<std::size_t>(truncation / 2 + 1);
  const ModPoly one_plus_k2{Rat(1), Rat(1)};
  const ModPoly two_k2{Rat(0), Rat(2)};

  // s[n] is the coefficient of z^(2n+1); sq and cube hold the coefficients of
  // S^2 and S^3 in w = z^2, filled as soon as their inputs are known.
  std::vector<ModPoly> s(terms), sq, cube;
  s[0] = ModPoly::constant(1);
  for (std::size_t n = 0; n + 1 < terms; ++n) {
    ModPoly rhs = -(one_plus_k2 * s[n]);
    if (n >= 1) {
      const std::size_t m = n - 1;
      ModPoly acc;
      for (std::size_t i = 0; i <= m; ++i) acc += s[i] * s[m - i];
      sq.push_back(std::move(acc));
      ModPoly acc3;
      for (std::size_t i = 0; i <= m; ++i) acc3 += s[i] * sq[m - i];
      cube.push_back(std::move(acc3));
      rhs += two_k2 * cube[m];
    }
    const Rat denom((2 * n + 3) * (2 * n + 2));
    s[n + 1] = rhs * Rat(1 / denom);
  }
  return ZSeries(1, truncation + 1, std::move(s));
}

GlaisherSeries glaisher_series(int max_j) {
  if (max_j < 1) throw std::invalid_argument("glaisher_series: max_j must be >= 1");
  // ns^2 = z^-2 / S^2 loses two orders to the leading z^2 of sn^2.
  ZSeries sn = sn_series(2 * max_j + 2);
  ZSeries sn2 = sn.square();
  const int trunc = 2 * max_j;
  ZSeries ns2 = sn2.reciprocal();
  ZSeries one = ZSeries::constant(ModPoly::constant(1), sn2.truncation());
  ZSeries cn2 = one - sn2;
  ZSeries dn2 = one - sn2 * ModPoly::k2();
  ZSeries nc2 = cn2.reciprocal();
  ZSeries nd2 = dn2.reciprocal();
  return GlaisherSeries{sn,
                        sn2.truncated(trunc + 2),
                        ns2.truncated(trunc),
                        cn2.truncated(trunc + 2),
                        nc2.truncated(trunc + 2),
                        dn2.truncated(trunc + 2),
                        nd2.truncated(trunc + 2)};
}

LaurentCoeffTable build_laurent_table(int max_j) {
  if (max_j < 1) throw std::invalid_argument("build_laurent_table: max_j must be >= 1");
  const GlaisherSeries g = glaisher_series(max_j);
  LaurentCoeffTable t;
  t.max_j = max_j;
  const auto n = static_cast<std::size_t>(max_j + 1);
  t.c_.resize(n);
  t.d_.resize(n);
  t.e_.resize(n);
  t.f_.resize(n);
  for (int j = 1; j <= max_j; ++j) {
    const auto idx = static_cast<std::size_t>(j);
    t.c_[idx] = g.ns2.coeff(2 * j);
    t.d_[idx] = one_minus_k2 * g.nd2.coeff(2 * j);
    t.e_[idx] = one_minus_k2 * g.nc2.coeff(2 * j);
    t.f_[idx] = g.dn2.coeff(2 * j);
  }
  return t;
}

TrigCoeffTable build_trig_table(int max_j) {
  if (max_j < 0) throw std::invalid_argument("build_trig_table: max_j must be >= 0");
  TrigCoeffTable t;
  t.max_j = max_j;
  for (int j = 0; j <= max_j; ++j) {
    const auto uj = static_cast<unsigned long>(j);
    const Int p = pow2(2 * uj + 2);
    Rat base = Rat((2 * j + 1) * p) * bernoulli(2 * j + 2) / Rat(factorial(2 * uj + 2));
    if (j % 2 == 1) base = -base;
    t.a_.push_back(base);
    t.b_.push_back(base * Rat(p - 1));
  }
  return t;
}

bool check_cdef_identity(const LaurentCoeffTable& table, int j) {
  check_index(j, 1, table.max_j, "check_cdef_identity");
  const Rat scale(pow2(2 * static_cast<unsigned long>(j) + 2) - 1);
  ModPoly sum = table.c(j) * scale + table.d(j) - table.e(j) + table.f(j);
  return sum.is_zero();
}

}  // namespace rzr
