#pragma once

// Exact integer linear algebra for small dense matrices: determinants,
// rational solves, and the Hermite normal form used to enumerate Z^g / A Z^g.

#include <cstdint>
#include <vector>

#include "bbs/rational.hpp"

namespace bbs {

using IntVector = std::vector<std::int64_t>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector operator*(const IntVector& v) const;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

// Fraction-free (Bareiss) determinant.
std::int64_t determinant(const IntMatrix& a);

// Leading principal minors, all exact.
std::vector<std::int64_t> leading_minors(const IntMatrix& a);

// Solves a x = b exactly; a must be nonsingular.
std::vector<Rational> solve(const IntMatrix& a, const std::vector<Rational>& b);
std::vector<Rational> solve(const IntMatrix& a, const IntVector& b);

// Lower-triangular H with positive diagonal and H Z^g = A Z^g. Entries below
// the diagonal are reduced into [0, H_ii).
IntMatrix hermite_lower(const IntMatrix& a);

// The unique w = v mod H Z^g with 0 <= w_i < H_ii.
IntVector reduce_mod_lattice(const IntMatrix& hermite, IntVector v);

// All w with 0 <= w_i < H_ii, in lexicographic order; there are det H of them.
std::vector<IntVector> coset_representatives(const IntMatrix& hermite);

}  // namespace bbs
