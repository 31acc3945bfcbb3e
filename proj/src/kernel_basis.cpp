#include "rzr/kernel_basis.hpp"

#include <stdexcept>

namespace rzr {

RatVector RatMatrix::row(std::size_t r) const {
  return RatVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void RatMatrix::append_row(const RatVector& row) {
  if (rows_ == 0 && cols_ == 0) cols_ = row.size();
  if (row.size() != cols_) throw std::invalid_argument("RatMatrix: row length mismatch");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

RatVector RatMatrix::apply(const RatVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("RatMatrix::apply: length mismatch");
  RatVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rat acc = 0;
    for (std::size_t c = 0; c < cols_; ++c)
      if (data_[r * cols_ + c] != 0 && v[c] != 0) acc += data_[r * cols_ + c] * v[c];
    out[r] = acc;
  }
  return out;
}

namespace {

void make_primitive(IntVector& row) {
  Int g = 0;
  for (const auto& x : row) {
    if (x == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& x : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

struct Echelon {
  std::vector<IntVector> rows;       // nonzero rows, reduced, primitive
  std::vector<std::size_t> pivots;   // pivot column of each row, ascending
};

// Gauss-Jordan on primitive integer rows. The result has zeros above and
// below every pivot; rows are sorted by pivot column.
Echelon reduce(std::vector<IntVector> rows, std::size_t cols) {
  for (auto& r : rows) make_primitive(r);
  Echelon out;
  std::size_t next = 0;
  Int a, b;
  for (std::size_t c = 0; c < cols && next < rows.size(); ++c) {
    // Smallest nonzero entry as pivot keeps growth down.
    std::size_t best = rows.size();
    for (std::size_t r = next; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      if (best == rows.size() ||
          mpz_cmpabs(rows[r][c].get_mpz_t(), rows[best][c].get_mpz_t()) < 0)
        best = r;
    }
    if (best == rows.size()) continue;
    std::swap(rows[next], rows[best]);
    const IntVector& piv = rows[next];
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == next || rows[r][c] == 0) continue;
      Int g = gcd(piv[c], rows[r][c]);
      a = piv[c] / g;
      b = rows[r][c] / g;
      IntVector& row = rows[r];
      for (std::size_t k = 0; k < cols; ++k) {
        row[k] *= a;
        if (piv[k] != 0) mpz_submul(row[k].get_mpz_t(), b.get_mpz_t(), piv[k].get_mpz_t());
      }
      make_primitive(row);
    }
    out.pivots.push_back(c);
    ++next;
  }
  rows.resize(next);
  out.rows = std::move(rows);
  return out;
}

std::vector<IntVector> to_int_rows(const RatMatrix& m) {
  std::vector<IntVector> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    IntVector row = primitive_integer_vector(m.row(r));
    bool nonzero = false;
    for (const auto& x : row) nonzero = nonzero || x != 0;
    if (nonzero) rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::vector<IntVector> canonical_row_basis(const RatMatrix& m) {
  Echelon e = reduce(to_int_rows(m), m.cols());
  for (auto& r : e.rows) normalize_sign_first_negative(r);
  return e.rows;
}

std::size_t rank(const RatMatrix& m) { return reduce(to_int_rows(m), m.cols()).rows.size(); }

std::vector<IntVector> kernel_basis(const RatMatrix& m) {
  const std::size_t n = m.cols();
  Echelon e = reduce(to_int_rows(m), n);
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;

  // Free-variable basis, then canonicalized through the row space routine.
  RatMatrix basis(0, n);
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RatVector x(n);
    x[f] = 1;
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
      const auto p = e.pivots[i];
      if (e.rows[i][f] != 0) x[p] = -Rat(e.rows[i][f]) / Rat(e.rows[i][p]);
    }
    basis.append_row(x);
  }
  if (basis.rows() == 0) return {};
  return canonical_row_basis(basis);
}

RatMatrix matrix_from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  RatMatrix m(0, cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw std::invalid_argument("matrix_from_rows: length mismatch");
    m.append_row(to_rat_vector(r));
  }
  return m;
}

bool in_span(const std::vector<IntVector>& basis, const RatVector& v) {
  RatMatrix m = matrix_from_rows(basis, v.size());
  const std::size_t before = rank(m);
  m.append_row(v);
  return rank(m) == before;
}

}  // namespace rzr
