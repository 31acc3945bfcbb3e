#include "rzr/kernel_solver.hpp"

#include <stdexcept>

namespace rzr {

std::vector<IntVector> scalar_kernel(const AssembledMatrix& a) { return kernel_basis(a.scalar_form); }

namespace {

// Position of each auxiliary polynomial in the reference pattern of an even
// column group, together with its sign there.
struct RefSlot {
  std::size_t index;
  int sign;
};

RefSlot reference_slot(AuxKind kind) {
  const auto ref = p_block_pattern(2);
  for (std::size_t i = 0; i < 4; ++i)
    if (ref[i].kind == kind) return {i, ref[i].sign};
  throw std::logic_error("reference_slot: unknown kind");
}

// Parameter-space affine maps: each coordinate is a row vector over the
// m + 3 parameters (u_1 entries, then tau_1 .. tau_{m-1}).
using Coords = std::array<RatVector, 4>;

// y with <ref pattern, y> == <pattern(s), u>.
Coords to_reference(const Coords& u, int s) {
  const auto pattern = p_block_pattern(s);
  Coords y;
  for (std::size_t c = 0; c < 4; ++c) {
    const RefSlot r = reference_slot(pattern[c].kind);
    const int sign = pattern[c].sign * r.sign;
    y[r.index] = u[c];
    if (sign < 0)
      for (auto& x : y[r.index]) x = -x;
  }
  return y;
}

Coords from_reference(const Coords& y, int s) {
  const auto pattern = p_block_pattern(s);
  Coords u;
  for (std::size_t c = 0; c < 4; ++c) {
    const RefSlot r = reference_slot(pattern[c].kind);
    const int sign = pattern[c].sign * r.sign;
    u[c] = y[r.index];
    if (sign < 0)
      for (auto& x : u[c]) x = -x;
  }
  return u;
}

void axpy(RatVector& y, const Rat& a, const RatVector& x) {
  for (std::size_t i = 0; i < y.size(); ++i)
    if (x[i] != 0) y[i] += a * x[i];
}

}  // namespace

std::vector<IntVector> structured_kernel(int m, const SymbolicTables& tables) {
  const auto params = static_cast<std::size_t>(m + 3);
  std::vector<Coords> u(static_cast<std::size_t>(m + 1));  // u[s], s = 1..m
  for (auto& g : u)
    for (auto& c : g) c.assign(params, Rat(0));
  for (std::size_t c = 0; c < 4; ++c) u[1][c][c] = 1;

  for (int j = m - 1; j >= 1; --j) {
    // sum_{s > j} w_j^{(s)} T_s(u_s) = tau_j v_j, solved for u_{j+1}.
    Coords target;
    const IntVector v = xi_kernel_closed_form(j);
    const auto tau = static_cast<std::size_t>(3 + j);
    for (std::size_t c = 0; c < 4; ++c) {
      target[c].assign(params, Rat(0));
      target[c][tau] = Rat(v[c]);
    }
    for (int s = j + 2; s <= m; ++s) {
      const Coords y = to_reference(u[static_cast<std::size_t>(s)], s);
      const Rat w = tables.wt.w(j, s);
      for (std::size_t c = 0; c < 4; ++c) axpy(target[c], -w, y[c]);
    }
    const Rat inv = 1 / tables.wt.w(j, j + 1);
    for (auto& row : target)
      for (auto& x : row) x *= inv;
    u[static_cast<std::size_t>(j + 1)] = from_reference(target, j + 1);
  }

  // Four scalar rows on the parameters.
  RatMatrix g(4, params);
  for (int s = 1; s <= m; ++s) {
    const BlockR r = block_R(s, tables.trig, tables.wt);
    const Coords& us = u[static_cast<std::size_t>(s)];
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t c = 0; c < 4; ++c)
        if (r.entries[i][c] != 0)
          for (std::size_t p = 0; p < params; ++p) g(i, p) += r.entries[i][c] * us[c][p];
  }

  RatMatrix t_vectors(0, static_cast<std::size_t>(4 * m));
  for (const auto& pk : kernel_basis(g)) {
    RatVector t;
    t.reserve(static_cast<std::size_t>(4 * m));
    for (int s = 1; s <= m; ++s)
      for (std::size_t c = 0; c < 4; ++c) {
        Rat acc = 0;
        const auto& coeffs = u[static_cast<std::size_t>(s)][c];
        for (std::size_t p = 0; p < params; ++p)
          if (coeffs[p] != 0 && pk[p] != 0) acc += coeffs[p] * Rat(pk[p]);
        t.push_back(acc);
      }
    t_vectors.append_row(t);
  }
  if (t_vectors.rows() == 0) return {};
  return canonical_row_basis(t_vectors);
}

bool zero_pattern_holds(const IntVector& t) {
  for (std::size_t s = 1; 4 * s <= t.size(); ++s) {
    const Int& entry = s % 2 == 0 ? t[4 * s - 1] : t[4 * s - 2];
    if (entry != 0) return false;
  }
  return true;
}

bool zero_pattern_check(const RelationBasis& basis) {
  for (const auto& v : basis.vectors)
    if (!zero_pattern_holds(v.t)) return false;
  return true;
}

RelationBasis relation_space(int m) {
  if (m < 1) throw std::invalid_argument("relation_space: m must be >= 1");
  return relation_space(m, build_tables(m));
}

RelationBasis relation_space(int m, const SymbolicTables& tables) {
  if (m < 1) throw std::invalid_argument("relation_space: m must be >= 1");
  const AssembledMatrix a = assemble(m, tables.aux, tables.wt, tables.trig);
  const auto kernel = scalar_kernel(a);
  if (kernel.size() != static_cast<std::size_t>(m))
    throw std::logic_error("theorem violated: dim V_" + std::to_string(m) + " = " +
                           std::to_string(kernel.size()));
  RelationBasis basis;
  basis.m = m;
  for (const auto& t : kernel) {
    for (const auto& x : a.scalar_form.apply(to_rat_vector(t)))
      if (x != 0) throw std::logic_error("theorem violated: kernel vector fails A t = 0");
    basis.vectors.push_back({m, t});
  }
  if (!zero_pattern_check(basis))
    throw std::logic_error("theorem violated: zero pattern fails for m = " + std::to_string(m));
  if (m <= 6 && structured_kernel(m, tables) != kernel)
    throw std::logic_error("theorem violated: structured elimination disagrees for m = " +
                           std::to_string(m));
  return basis;
}

bool membership_check(const RelationBasis& basis, const RatVector& v) {
  if (v.size() != static_cast<std::size_t>(4 * basis.m))
    throw std::invalid_argument("membership_check: expected length " + std::to_string(4 * basis.m) +
                                ", got " + std::to_string(v.size()));
  std::vector<IntVector> rows;
  for (const auto& r : basis.vectors) rows.push_back(r.t);
  return in_span(rows, v);
}

bool membership_check(const RatVector& v, int m) {
  if (m < 1 || v.size() != static_cast<std::size_t>(4 * m))
    throw std::invalid_argument("membership_check: length must be 4m");
  return membership_check(relation_space(m), v);
}

IntVector styled_coefficients(const RelationVector& v, RelationStyle style) {
  if (style == RelationStyle::PhiPsi) return v.t;
  RatVector scaled;
  scaled.reserve(v.t.size());
  Int five_pow = 1;
  for (std::size_t i = 0; i < v.t.size(); ++i) {
    if (i % 4 == 0) five_pow *= 5;
    if (i % 4 < 2)
      scaled.push_back(Rat(v.t[i]) / Rat(five_pow));
    else
      scaled.emplace_back(v.t[i]);
  }
  return primitive_integer_vector(scaled);
}

namespace {

constexpr const char* kMinus = "−";

std::string subscript(long n) {
  static const char* digits[] = {"₀", "₁", "₂", "₃", "₄",
                                 "₅", "₆", "₇", "₈", "₉"};
  std::string s;
  for (char ch : std::to_string(n)) s += digits[ch - '0'];
  return s;
}

std::string symbol_text(std::size_t index, RelationStyle style) {
  const long two_s = 2 * static_cast<long>(index / 4 + 1);
  const std::size_t slot = index % 4;
  if (style == RelationStyle::PhiPsi) {
    const char* base = slot < 2 ? "Φ" : "Ψ";
    return std::string(base) + subscript(two_s) + (slot % 2 == 1 ? "*" : "");
  }
  const char* base = slot < 2 ? "ζ_F" : "ζ_L";
  return std::string(base) + (slot % 2 == 1 ? "*" : "") + "(" + std::to_string(two_s) + ")";
}

std::string symbol_latex(std::size_t index, RelationStyle style) {
  const std::string two_s = std::to_string(2 * (index / 4 + 1));
  const std::size_t slot = index % 4;
  const std::string star = slot % 2 == 1 ? "^{*}" : "";
  if (style == RelationStyle::PhiPsi)
    return std::string(slot < 2 ? "\\Phi" : "\\Psi") + "_{" + two_s + "}" + star;
  return std::string(slot < 2 ? "\\zeta_F" : "\\zeta_L") + star + "(" + two_s + ")";
}

template <typename Symbol>
std::string render(const IntVector& coeffs, Symbol symbol, const std::string& minus) {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const Int& c = coeffs[i];
    if (c == 0) continue;
    const Int mag = abs(c);
    if (out.empty())
      out += c < 0 ? minus : "";
    else
      out += c < 0 ? " " + minus + " " : " + ";
    if (mag != 1) out += mag.get_str();
    out += symbol(i);
  }
  if (out.empty()) out = "0";
  return out + " = 0";
}

}  // namespace

std::string format_relation(const RelationVector& v, RelationStyle style) {
  return render(styled_coefficients(v, style), [&](std::size_t i) { return symbol_text(i, style); },
                kMinus);
}

std::string format_relation_latex(const RelationVector& v, RelationStyle style) {
  return render(styled_coefficients(v, style), [&](std::size_t i) { return symbol_latex(i, style); },
                "-");
}

}  // namespace rzr
