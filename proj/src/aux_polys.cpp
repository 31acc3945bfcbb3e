#include "rzr/aux_polys.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "rzr/kernel_basis.hpp"

namespace rzr {

namespace {

const ModPoly& at(const std::vector<ModPoly>& v, int j, int max_j, const char* what) {
  if (j < 1 || j > max_j)
    throw std::out_of_range(std::string(what) + ": index " + std::to_string(j) + " outside [1, " +
                            std::to_string(max_j) + "]");
  return v[static_cast<std::size_t>(j)];
}

}  // namespace

const ModPoly& AuxPolySet::theta_minus(int j) const { return at(theta_minus_, j, max_j, "Theta^-"); }
const ModPoly& AuxPolySet::theta_plus(int j) const { return at(theta_plus_, j, max_j, "Theta^+"); }
const ModPoly& AuxPolySet::lambda_minus(int j) const { return at(lambda_minus_, j, max_j, "Lambda^-"); }
const ModPoly& AuxPolySet::lambda_plus(int j) const { return at(lambda_plus_, j, max_j, "Lambda^+"); }

Rat kappa(int j) {
  const auto uj = static_cast<unsigned long>(j);
  Rat k = Rat(pow2(2 * uj - 3)) / Rat(factorial(2 * uj - 2));
  return (j - 1) % 2 == 0 ? k : Rat(-k);
}

Rat kappa_hat(int j) { return make_rat(static_cast<long>(j) * (4 * j - 7), 32); }

AuxPolySet build_aux(const LaurentCoeffTable& table) {
  if (table.max_j < 1) throw std::invalid_argument("build_aux: empty table");
  AuxPolySet aux;
  aux.max_j = table.max_j;
  const auto n = static_cast<std::size_t>(table.max_j + 1);
  aux.theta_minus_.resize(n);
  aux.theta_plus_.resize(n);
  aux.lambda_minus_.resize(n);
  aux.lambda_plus_.resize(n);
  for (int j = 1; j <= table.max_j; ++j) {
    const auto i = static_cast<std::size_t>(j);
    aux.theta_minus_[i] = table.c(j) - table.d(j);
    aux.theta_plus_[i] = table.c(j) + table.d(j);
    aux.lambda_minus_[i] = table.e(j) - table.f(j);
    aux.lambda_plus_[i] = table.e(j) + table.f(j);
  }
  return aux;
}

bool check_closed_forms(const AuxPolySet& aux, const TrigCoeffTable& trig, int j) {
  if (j < 2 || j > aux.max_j + 1)
    throw std::out_of_range("check_closed_forms: j = " + std::to_string(j) + " outside [2, " +
                            std::to_string(aux.max_j + 1) + "]");
  const Rat& a = trig.a(j - 1);
  const Rat& b = trig.b(j - 1);
  const Rat k = kappa(j);
  const Rat kh = kappa_hat(j);
  const Rat half_j = make_rat(j, 2);
  const Rat p = Rat(pow2(2 * static_cast<unsigned long>(j) - 1));  // 2^{2j-1}
  const Rat top = Rat(pow2(2 * static_cast<unsigned long>(j)));     // 2^{2j}

  const bool constant_terms =
      aux.alpha(j, 0) == a && aux.beta(j, 0) == a && aux.gamma(j, 0) == b && aux.delta(j, 0) == b;
  const bool quadratic_terms = aux.alpha(j, 1) == k - half_j * a &&
                               aux.alpha(j, 1) == aux.beta(j, 1) + 2 * k &&
                               aux.gamma(j, 1) + 2 * k == k - half_j * b &&
                               aux.delta(j, 1) == k - half_j * b;
  const bool quartic_terms = aux.alpha(j, 2) == k / 16 * (7 - 8 * j - p) + kh * a &&
                             aux.beta(j, 2) == k / 16 * (-9 + 8 * j + p) + kh * a &&
                             aux.gamma(j, 2) == k / 16 * (-7 + 8 * j - p) + kh * b &&
                             aux.delta(j, 2) == k / 16 * (9 - 8 * j + p) + kh * b;
  const bool leading_terms = aux.alpha(j, j) == top * a && aux.beta(j, j) == (2 - top) * a &&
                             aux.gamma(j, j) == 0 && aux.delta(j, j) == 0;
  return constant_terms && quadratic_terms && quartic_terms && leading_terms;
}

std::vector<ModPoly> xi_vector(const AuxPolySet& aux, int j) {
  return {-aux.theta_minus(j), aux.theta_plus(j), -aux.lambda_minus(j), aux.lambda_plus(j)};
}

IntVector xi_kernel(const AuxPolySet& aux, int j) {
  const auto polys = xi_vector(aux, j);
  std::size_t rows = 0;
  for (const auto& p : polys) rows = std::max(rows, p.coeffs().size());
  RatMatrix m(rows, 4);
  for (std::size_t c = 0; c < 4; ++c)
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = polys[c].coeff(r);
  auto basis = kernel_basis(m);
  if (basis.size() != 1)
    throw std::logic_error("xi kernel is not one-dimensional: dimension " + std::to_string(basis.size()) +
                           " at j = " + std::to_string(j));
  return basis.front();
}

IntVector xi_kernel_closed_form(int j) {
  const Int p = pow2(2 * static_cast<unsigned long>(j) + 1);
  return {1 - p, p, Int(1), Int(0)};
}

}  // namespace rzr
