#include "rzr/relation_matrix.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace rzr {

const char* to_string(SeriesKind kind) {
  switch (kind) {
    case SeriesKind::Phi: return "Phi";
    case SeriesKind::PhiStar: return "Phi*";
    case SeriesKind::Psi: return "Psi";
    case SeriesKind::PsiStar: return "Psi*";
  }
  return "?";
}

const char* to_string(AuxKind kind) {
  switch (kind) {
    case AuxKind::ThetaMinus: return "Theta-";
    case AuxKind::ThetaPlus: return "Theta+";
    case AuxKind::LambdaMinus: return "Lambda-";
    case AuxKind::LambdaPlus: return "Lambda+";
  }
  return "?";
}

const ModPoly& aux_poly(const AuxPolySet& aux, AuxKind kind, int j) {
  switch (kind) {
    case AuxKind::ThetaMinus: return aux.theta_minus(j);
    case AuxKind::ThetaPlus: return aux.theta_plus(j);
    case AuxKind::LambdaMinus: return aux.lambda_minus(j);
    case AuxKind::LambdaPlus: return aux.lambda_plus(j);
  }
  throw std::invalid_argument("aux_poly: bad kind");
}

Rat sigma(int i, int s) {
  if (s < 1 || i < 0) throw std::invalid_argument("sigma: need s >= 1, i >= 0");
  // Coefficients of prod_{r=1}^{s-1} (1 - r^2 x), built one factor at a time.
  std::vector<Int> poly{Int(1)};
  for (int r = 1; r < s; ++r) {
    poly.emplace_back(0);
    for (std::size_t k = poly.size() - 1; k >= 1; --k) poly[k] -= Int(r) * r * poly[k - 1];
  }
  return i < static_cast<int>(poly.size()) ? Rat(poly[static_cast<std::size_t>(i)]) : Rat(0);
}

Rat WeightTable::sigma(int i, int s) const {
  if (i > s - 1 && s >= 1 && s <= m) return 0;
  auto it = sigma_.find({i, s});
  if (it == sigma_.end()) throw std::out_of_range("WeightTable::sigma: outside table");
  return it->second;
}

Rat WeightTable::w(int j, int s) const {
  auto it = w_.find({j, s});
  if (it == w_.end())
    throw std::out_of_range("WeightTable::w: need 1 <= j <= s - 1 and s <= " + std::to_string(m));
  return it->second;
}

Rat WeightTable::w_hat(int s) const {
  auto it = w_hat_.find(s);
  if (it == w_hat_.end()) throw std::out_of_range("WeightTable::w_hat: outside table");
  return it->second;
}

WeightTable weights(int m) {
  if (m < 1) throw std::invalid_argument("weights: m must be >= 1");
  WeightTable t;
  t.m = m;
  for (int s = 1; s <= m; ++s) {
    const auto us = static_cast<unsigned long>(s);
    for (int i = 0; i <= s - 1; ++i) t.sigma_[{i, s}] = sigma(i, s);
    const Rat inv_fact = Rat(1) / Rat(factorial(2 * us - 1));
    const Int f = factorial(us - 1);
    t.w_hat_[s] = Rat(f * f) * inv_fact / 24;
    for (int j = 1; j <= s - 1; ++j) {
      const auto uj = static_cast<unsigned long>(j);
      Rat w = t.sigma_.at({s - j - 1, s}) * Rat(factorial(2 * uj)) / Rat(pow2(2 * uj + 3)) * inv_fact;
      if (j % 2 == 1) w = -w;
      t.w_[{j, s}] = w;
    }
  }
  return t;
}

std::array<Rat, 4> rational_remainders(int s, const TrigCoeffTable& trig, const WeightTable& wt) {
  const Rat wh = wt.w_hat(s);
  Rat sum_a = 0, sum_b = 0;
  for (int j = 1; j <= s - 1; ++j) {
    sum_a += trig.a(j) * wt.w(j, s);
    sum_b += trig.b(j) * wt.w(j, s);
  }
  const Rat r_phi = (s % 2 == 1 ? wh : Rat(-wh)) + sum_a;
  const Rat r_psi = -3 * wh + (s % 2 == 0 ? sum_b : Rat(-sum_b));
  return {r_phi, -r_phi, r_psi, -r_psi};
}

BlockR block_R(int s, const TrigCoeffTable& trig, const WeightTable& wt) {
  if (s < 1) throw std::invalid_argument("block_R: s must be >= 1");
  BlockR b;
  b.s = s;
  b.entries[0] = rational_remainders(s, trig, wt);
  const Rat w = wt.w_hat(s);
  const Rat z = 0;
  if (s % 2 == 0) {
    b.entries[1] = {z, z, z, -3 * w};
    b.entries[2] = {z, w, -2 * w, z};
    b.entries[3] = {w, z, w, z};
  } else {
    b.entries[1] = {z, z, 3 * w, z};
    b.entries[2] = {w, z, z, 2 * w};
    b.entries[3] = {z, w, z, -w};
  }
  return b;
}

std::array<SignedAux, 4> p_block_pattern(int s) {
  if (s % 2 == 0)
    return {SignedAux{-1, AuxKind::ThetaMinus}, SignedAux{+1, AuxKind::ThetaPlus},
            SignedAux{-1, AuxKind::LambdaMinus}, SignedAux{+1, AuxKind::LambdaPlus}};
  return {SignedAux{-1, AuxKind::ThetaPlus}, SignedAux{+1, AuxKind::ThetaMinus},
          SignedAux{+1, AuxKind::LambdaPlus}, SignedAux{-1, AuxKind::LambdaMinus}};
}

AssembledMatrix assemble(int m, const AuxPolySet& aux, const WeightTable& wt,
                         const TrigCoeffTable& trig) {
  if (m < 1) throw std::invalid_argument("assemble: m must be >= 1");
  if (m >= 2 && aux.max_j < m - 1)
    throw std::invalid_argument("assemble: auxiliary table too shallow for m = " + std::to_string(m));
  if (trig.max_j < m - 1 || wt.m < m)
    throw std::invalid_argument("assemble: weight or trig table too shallow for m = " + std::to_string(m));

  AssembledMatrix a;
  a.m = m;
  const std::size_t cols = a.cols();
  a.blocks.assign(static_cast<std::size_t>(m + 3), std::vector<ModPoly>(cols));
  for (int s = 1; s <= m; ++s) {
    const auto base = static_cast<std::size_t>(4 * (s - 1));
    const BlockR r = block_R(s, trig, wt);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t c = 0; c < 4; ++c) a.blocks[i][base + c] = ModPoly::constant(r.entries[i][c]);
    const auto pattern = p_block_pattern(s);
    for (int j = 1; j <= s - 1; ++j) {
      const Rat w = wt.w(j, s);
      auto& row = a.blocks[static_cast<std::size_t>(3 + j)];
      for (std::size_t c = 0; c < 4; ++c)
        row[base + c] = aux_poly(aux, pattern[c].kind, j) * Rat(w * pattern[c].sign);
    }
  }

  a.scalar_form = RatMatrix(0, cols);
  for (std::size_t i = 0; i < 4; ++i) {
    RatVector row(cols);
    for (std::size_t c = 0; c < cols; ++c) row[c] = a.blocks[i][c].coeff(0);
    a.scalar_form.append_row(row);
    a.scalar_row_labels.push_back("x" + std::to_string(i + 1));
  }
  for (int j = 1; j <= m - 1; ++j) {
    const auto& brow = a.blocks[static_cast<std::size_t>(3 + j)];
    std::size_t width = 0;
    for (const auto& p : brow) width = std::max(width, p.coeffs().size());
    for (std::size_t i = 0; i < width; ++i) {
      RatVector row(cols);
      for (std::size_t c = 0; c < cols; ++c) row[c] = brow[c].coeff(i);
      a.scalar_form.append_row(row);
      a.scalar_row_labels.push_back("(2K/pi)^" + std::to_string(2 * j + 2) + " k^" +
                                    std::to_string(2 * i));
    }
  }
  return a;
}

CoordinateFrame coordinate_frame(int m) {
  if (m < 1) throw std::invalid_argument("coordinate_frame: m must be >= 1");
  CoordinateFrame f;
  f.push_back({1, 0, AuxKind::ThetaMinus, 0, "1"});
  f.push_back({2, 2, AuxKind::ThetaMinus, 0, "(2K/pi)^2"});
  f.push_back({3, 2, AuxKind::ThetaMinus, 0, "(2K/pi)^2 (2k^2 - 1)"});
  f.push_back({4, 2, AuxKind::ThetaMinus, 0, "(2K/pi)^2 (6E/K - 5 + 4k^2)"});
  const std::array<AuxKind, 4> even{AuxKind::ThetaMinus, AuxKind::ThetaPlus, AuxKind::LambdaMinus,
                                    AuxKind::LambdaPlus};
  const std::array<AuxKind, 4> odd{AuxKind::ThetaPlus, AuxKind::ThetaMinus, AuxKind::LambdaPlus,
                                   AuxKind::LambdaMinus};
  for (int j = 2; j <= m; ++j) {
    const auto& kinds = j % 2 == 0 ? even : odd;
    for (int slot = 0; slot < 4; ++slot) {
      const AuxKind kind = kinds[static_cast<std::size_t>(slot)];
      std::string def = "(2K/pi)^" + std::to_string(2 * j) + " " + to_string(kind) + "_" +
                        std::to_string(j - 1);
      f.push_back({4 * j - 3 + slot, 2 * j, kind, j - 1, std::move(def)});
    }
  }
  return f;
}

RatMatrix linear_forms(int m, const WeightTable& wt, const TrigCoeffTable& trig) {
  const auto n = static_cast<std::size_t>(4 * m);
  const CoordinateFrame frame = coordinate_frame(m);
  RatMatrix l(n, n);
  for (int s = 1; s <= m; ++s) {
    const auto base = static_cast<std::size_t>(4 * (s - 1));
    const BlockR r = block_R(s, trig, wt);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t c = 0; c < 4; ++c) l(i, base + c) = r.entries[i][c];
    const auto pattern = p_block_pattern(s);
    for (int j = 1; j <= s - 1; ++j) {
      const auto group = static_cast<std::size_t>(4 * j);  // coordinates of (2K/pi)^{2j+2}
      for (std::size_t c = 0; c < 4; ++c) {
        for (std::size_t slot = 0; slot < 4; ++slot) {
          if (frame[group + slot].kind != pattern[c].kind) continue;
          l(group + slot, base + c) = wt.w(j, s) * pattern[c].sign;
        }
      }
    }
  }
  return l;
}

namespace {

// Rational c with p == c * q, if any. q must be nonzero.
std::optional<Rat> proportionality(const ModPoly& p, const ModPoly& q) {
  if (q.is_zero()) return p.is_zero() ? std::optional<Rat>(Rat(0)) : std::nullopt;
  if (p.degree() != q.degree()) return std::nullopt;
  const std::size_t d = *q.degree();
  Rat c = p.coeff(d) / q.coeff(d);
  if (!(p == q * c)) return std::nullopt;
  return c;
}

}  // namespace

bool quasi_periodicity_check(const AssembledMatrix& a, int nu, int l) {
  const int m = a.m;
  if (m < 3 || nu < 1 || nu > m - 2 || l < 1 || l > m - nu - 1)
    throw std::out_of_range("quasi_periodicity_check: indices out of range");
  const auto& row = a.blocks[static_cast<std::size_t>(3 + nu)];
  const auto base = static_cast<std::size_t>(4 * nu);
  const auto other = static_cast<std::size_t>(4 * (nu + l));
  std::array<std::size_t, 4> perm{0, 1, 2, 3};
  do {
    std::optional<Rat> common;
    bool ok = true;
    for (std::size_t i = 0; i < 4 && ok; ++i) {
      auto c = proportionality(row[other + perm[i]], row[base + i]);
      if (!c || *c == 0) {
        ok = false;
        break;
      }
      const Rat mag = abs(*c);
      if (!common) common = mag;
      ok = *common == mag;
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace rzr

namespace rzr {

SymbolicTables build_tables(int m, int min_depth) {
  if (m < 1) throw std::invalid_argument("build_tables: m must be >= 1");
  SymbolicTables t;
  t.m = m;
  const int depth = std::max({m - 1, min_depth, 1});
  t.laurent = build_laurent_table(depth);
  t.trig = build_trig_table(depth);
  t.aux = build_aux(t.laurent);
  t.wt = weights(m);
  return t;
}

}  // namespace rzr
