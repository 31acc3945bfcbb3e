#pragma once

// Exact rational linear algebra: dense matrices, rank, canonical nullspace
// bases. Elimination runs on primitive integer rows (each row divided by the
// gcd of its entries after every update), so no rational canonicalization
// happens in the inner loop.

#include <cstddef>
#include <vector>

#include "rzr/rational.hpp"

namespace rzr {

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RatVector row(std::size_t r) const;
  void append_row(const RatVector& row);

  /// M * v.
  RatVector apply(const RatVector& v) const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

/// Canonical basis of the row space: reduced row-echelon rows with ascending
/// pivots, each scaled to primitive integers with its first nonzero entry
/// negative. Depends only on the row space.
std::vector<IntVector> canonical_row_basis(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

/// Canonical basis of {x : M x = 0} (see canonical_row_basis).
std::vector<IntVector> kernel_basis(const RatMatrix& m);

/// True iff v lies in the Q-span of the given vectors (all of length v.size()).
bool in_span(const std::vector<IntVector>& basis, const RatVector& v);

RatMatrix matrix_from_rows(const std::vector<IntVector>& rows, std::size_t cols);

}  // namespace rzr
