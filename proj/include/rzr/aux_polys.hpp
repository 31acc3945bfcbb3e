#pragma once

// The auxiliary polynomials
//   Theta_j^- = c_j - d_j,  Theta_j^+ = c_j + d_j,
//   Lambda_j^- = e_j - f_j, Lambda_j^+ = e_j + f_j,
// their low-order coefficients in closed form, and the one-dimensional space
// of rational relations among (-Theta_j^-, Theta_j^+, -Lambda_j^-, Lambda_j^+).

#include <vector>

#include "rzr/elliptic_series.hpp"
#include "rzr/mod_poly.hpp"

namespace rzr {

struct AuxPolySet {
  int max_j = 0;

  const ModPoly& theta_minus(int j) const;
  const ModPoly& theta_plus(int j) const;
  const ModPoly& lambda_minus(int j) const;
  const ModPoly& lambda_plus(int j) const;

  // Coefficient of k^(2i) in Theta_{j-1}^-, Theta_{j-1}^+, Lambda_{j-1}^-,
  // Lambda_{j-1}^+ respectively (note the shifted index). 2 <= j <= max_j + 1.
  Rat alpha(int j, int i) const { return theta_minus(j - 1).coeff(static_cast<std::size_t>(i)); }
  Rat beta(int j, int i) const { return theta_plus(j - 1).coeff(static_cast<std::size_t>(i)); }
  Rat gamma(int j, int i) const { return lambda_minus(j - 1).coeff(static_cast<std::size_t>(i)); }
  Rat delta(int j, int i) const { return lambda_plus(j - 1).coeff(static_cast<std::size_t>(i)); }

  // Index 0 is unused.
  std::vector<ModPoly> theta_minus_, theta_plus_, lambda_minus_, lambda_plus_;
};

/// kappa_{j-1} = (-1)^{j-1} 2^{2j-3} / (2j-2)!, for j >= 2.
Rat kappa(int j);
/// hat kappa_{j-1} = j (4j - 7) / 32.
Rat kappa_hat(int j);

AuxPolySet build_aux(const LaurentCoeffTable& table);

/// The closed forms for the coefficients of k^0, k^2, k^4 and k^(2j) of the
/// four polynomials with index j-1. Requires 2 <= j <= aux.max_j + 1 and
/// trig.max_j >= j - 1; throws std::out_of_range otherwise.
bool check_closed_forms(const AuxPolySet& aux, const TrigCoeffTable& trig, int j);

/// (-Theta_j^-, Theta_j^+, -Lambda_j^-, Lambda_j^+) as one vector.
std::vector<ModPoly> xi_vector(const AuxPolySet& aux, int j);

/// Primitive integer generator of {t in Q^4 : <t, xi_vector(j)> = 0}, computed
/// from every k^2-coefficient. Throws std::logic_error if the kernel is not
/// one-dimensional.
IntVector xi_kernel(const AuxPolySet& aux, int j);

/// (1 - 2^{2j+1}, 2^{2j+1}, 1, 0).
IntVector xi_kernel_closed_form(int j);

}  // namespace rzr
