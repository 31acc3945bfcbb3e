#pragma once

// Exact Laurent/Taylor coefficient tables of the squared Jacobi functions and
// of cosec^2, sec^2. All series are generated from the single differential
// equation sn'' = -(1+k^2) sn + 2 k^2 sn^3 together with
// sn^2 + cn^2 = 1 and k^2 sn^2 + dn^2 = 1.

#include <vector>

#include "rzr/mod_poly.hpp"
#include "rzr/zseries.hpp"

namespace rzr {

/// c_j, d_j, e_j, f_j for 1 <= j <= max_j, defined by
///   ns^2(z) - 1/z^2 - (1+k^2)/3 = sum c_j z^{2j}
///   (1-k^2)(nd^2(z) - 1)        = sum d_j z^{2j}
///   (1-k^2)(nc^2(z) - 1)        = sum e_j z^{2j}
///   dn^2(z) - 1                 = sum f_j z^{2j}
struct LaurentCoeffTable {
  int max_j = 0;
  const ModPoly& c(int j) const;
  const ModPoly& d(int j) const;
  const ModPoly& e(int j) const;
  const ModPoly& f(int j) const;

  // Index 0 is unused.
  std::vector<ModPoly> c_, d_, e_, f_;
};

/// cosec^2 z = 1/z^2 + sum_{j>=0} a_j z^{2j},  sec^2 z = sum_{j>=0} b_j z^{2j}.
struct TrigCoeffTable {
  int max_j = 0;
  const Rat& a(int j) const;
  const Rat& b(int j) const;

  std::vector<Rat> a_, b_;
};

/// The squared Glaisher functions as exact truncated series.
struct GlaisherSeries {
  ZSeries sn, sn2, ns2, cn2, nc2, dn2, nd2;
};

/// sn(z, k) = z * S(z^2), exact through z^(truncation + 1).
/// truncation must be even and >= 2.
ZSeries sn_series(int truncation);

/// Every series in GlaisherSeries exact at least through z^(2 * max_j).
GlaisherSeries glaisher_series(int max_j);

LaurentCoeffTable build_laurent_table(int max_j);
TrigCoeffTable build_trig_table(int max_j);

/// (2^{2j+2} - 1) c_j + d_j - e_j + f_j == 0 as a polynomial.
bool check_cdef_identity(const LaurentCoeffTable& table, int j);

}  // namespace rzr
