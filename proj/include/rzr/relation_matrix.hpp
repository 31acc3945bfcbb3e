#pragma once

// The exact linear system whose kernel is the space of rational relations
//   sum_s t_{4s-3} Phi_2s + t_{4s-2} Phi*_2s + t_{4s-1} Psi_2s + t_{4s} Psi*_2s = 0.
//
// Columns are grouped by s ascending, (Phi, Phi*, Psi, Psi*) within a group.
// The block form has m + 3 rows: four scalar rows for the coordinates
// 1, (2K/pi)^2, (2K/pi)^2 (2k^2-1), (2K/pi)^2 (6E/K - 5 + 4k^2), then one row
// of polynomial entries per power (2K/pi)^{2j}, 2 <= j <= m. The scalar form
// splits every polynomial row into its k^2-coefficients.

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rzr/aux_polys.hpp"
#include "rzr/elliptic_series.hpp"
#include "rzr/kernel_basis.hpp"
#include "rzr/mod_poly.hpp"

namespace rzr {

enum class SeriesKind { Phi = 0, PhiStar = 1, Psi = 2, PsiStar = 3 };
enum class AuxKind { ThetaMinus, ThetaPlus, LambdaMinus, LambdaPlus };

inline constexpr std::array<SeriesKind, 4> kAllSeriesKinds{SeriesKind::Phi, SeriesKind::PhiStar,
                                                           SeriesKind::Psi, SeriesKind::PsiStar};

const char* to_string(SeriesKind kind);
const char* to_string(AuxKind kind);
const ModPoly& aux_poly(const AuxPolySet& aux, AuxKind kind, int j);

/// sigma_i(s): coefficient of x^i in prod_{r=1}^{s-1} (1 - r^2 x).
Rat sigma(int i, int s);

struct WeightTable {
  int m = 0;
  Rat sigma(int i, int s) const;
  /// w_j^{(s)} = (-1)^j sigma_{s-j-1}(s) (2j)! / (2^{2j+3} (2s-1)!), 1 <= j <= s-1.
  Rat w(int j, int s) const;
  /// (s-1)!^2 / (24 (2s-1)!).
  Rat w_hat(int s) const;

  std::map<std::pair<int, int>, Rat> sigma_;  // (i, s)
  std::map<std::pair<int, int>, Rat> w_;      // (j, s)
  std::map<int, Rat> w_hat_;
};

WeightTable weights(int m);

/// Rational parts R^(xi) of the closed forms: the first row of BlockR.
std::array<Rat, 4> rational_remainders(int s, const TrigCoeffTable& trig, const WeightTable& wt);

struct BlockR {
  int s = 0;
  std::array<std::array<Rat, 4>, 4> entries{};
};

BlockR block_R(int s, const TrigCoeffTable& trig, const WeightTable& wt);

struct SignedAux {
  int sign;
  AuxKind kind;
};

/// P_j^{(s)} as signed auxiliary polynomials, in column order
/// (Phi, Phi*, Psi, Psi*); depends only on the parity of s.
std::array<SignedAux, 4> p_block_pattern(int s);

struct AssembledMatrix {
  int m = 0;
  /// (m + 3) x 4m; rows 0..3 hold constant polynomials.
  std::vector<std::vector<ModPoly>> blocks;
  RatMatrix scalar_form;
  std::vector<std::string> scalar_row_labels;

  std::size_t block_rows() const { return blocks.size(); }
  std::size_t cols() const { return static_cast<std::size_t>(4 * m); }
  const ModPoly& entry(std::size_t row, std::size_t col) const { return blocks.at(row).at(col); }
};

/// Requires m >= 1, aux.max_j >= m - 1, trig.max_j >= m - 1, wt.m >= m.
AssembledMatrix assemble(int m, const AuxPolySet& aux, const WeightTable& wt,
                         const TrigCoeffTable& trig);

/// Coordinate x_i (1-based) and what it stands for.
struct Coordinate {
  int index = 0;
  /// Power 2p of (2K/pi); 0 for x_1.
  int power = 0;
  /// For index >= 5: the auxiliary polynomial multiplying (2K/pi)^power.
  AuxKind kind = AuxKind::ThetaMinus;
  int aux_index = 0;
  std::string definition;
};

using CoordinateFrame = std::vector<Coordinate>;

CoordinateFrame coordinate_frame(int m);

/// 4m x 4m matrix L with xi_col = sum_i L(i, col) x_{i+1}.
RatMatrix linear_forms(int m, const WeightTable& wt, const TrigCoeffTable& trig);

/// Whether the four entries of block row 4 + nu in group nu + 1 and the four
/// entries in group nu + 1 + l agree up to a signed permutation and one
/// nonzero rational factor. Requires m >= 3, 1 <= nu <= m - 2,
/// 1 <= l <= m - nu - 1; throws std::out_of_range otherwise.
bool quasi_periodicity_check(const AssembledMatrix& a, int nu, int l);

}  // namespace rzr

namespace rzr {

/// Every exact table needed to assemble the system for a given m.
struct SymbolicTables {
  int m = 0;
  LaurentCoeffTable laurent;
  TrigCoeffTable trig;
  AuxPolySet aux;
  WeightTable wt;
};

/// Tables deep enough for assemble(m); max_j is at least `min_depth`.
SymbolicTables build_tables(int m, int min_depth = 1);

}  // namespace rzr
