#pragma once

// The relation space V_m: its canonical basis, the zero-pattern property,
// membership tests, and rendering of relations.

#include <string>
#include <vector>

#include "rzr/kernel_basis.hpp"
#include "rzr/relation_matrix.hpp"

namespace rzr {

struct RelationVector {
  int m = 0;
  /// 4m primitive integers, ordered (Phi_2s, Phi*_2s, Psi_2s, Psi*_2s) by s.
  IntVector t;
};

struct RelationBasis {
  int m = 0;
  std::vector<RelationVector> vectors;
  std::size_t dim() const { return vectors.size(); }
};

/// Kernel of the scalar form of `a`, canonical, without any checks.
std::vector<IntVector> scalar_kernel(const AssembledMatrix& a);

/// Second route to the same kernel: solves the polynomial rows bottom-up one
/// group of four at a time using the closed-form generators
/// (1 - 2^{2j+1}, 2^{2j+1}, 1, 0) and the signed permutations between the
/// even and odd column patterns, then imposes the four scalar rows on the
/// remaining m + 3 parameters.
std::vector<IntVector> structured_kernel(int m, const SymbolicTables& tables);

/// Basis of V_m. Verifies dim == m, the zero pattern, and A t = 0 for each
/// vector; for m <= 6 also compares against structured_kernel. Any failure
/// throws std::logic_error("theorem violated: ...").
RelationBasis relation_space(int m);
RelationBasis relation_space(int m, const SymbolicTables& tables);

/// t_{4s} = 0 for even s and t_{4s-1} = 0 for odd s, for every vector.
bool zero_pattern_check(const RelationBasis& basis);
bool zero_pattern_holds(const IntVector& t);

/// v in V_m. Throws std::invalid_argument unless v.size() == 4 * basis.m.
bool membership_check(const RelationBasis& basis, const RatVector& v);
bool membership_check(const RatVector& v, int m);

enum class RelationStyle { PhiPsi, ZetaFibonacci };

/// Coefficients as rendered in the given style: unchanged for PhiPsi; for
/// ZetaFibonacci the Phi-slots are divided by 5^s and the result cleared to
/// primitive integers (Phi_2s = 5^{-s} zeta_F(2s), Psi_2s = zeta_L(2s)).
IntVector styled_coefficients(const RelationVector& v, RelationStyle style);

/// e.g. "−2Φ₂ + Φ₂* + Ψ₂* = 0" or "−2ζ_F(2) + ζ_F*(2) + 5ζ_L*(2) = 0".
std::string format_relation(const RelationVector& v, RelationStyle style);
std::string format_relation_latex(const RelationVector& v, RelationStyle style);

}  // namespace rzr
