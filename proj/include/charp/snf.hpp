#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "charp/multipoly.hpp"
#include "charp/unipoly.hpp"

namespace charp {

// Dense rows x cols matrix over F_p[t].
class PolyMatrix {
 public:
  PolyMatrix(PrimeField field, std::size_t rows, std::size_t cols);

  static PolyMatrix identity(PrimeField field, std::size_t n);
  static PolyMatrix diagonal(PrimeField field, const std::vector<UniPoly>& entries);

  const PrimeField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  UniPoly& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const UniPoly& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  PolyMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<UniPoly> entries_;
};

// Invariant factors of a matrix M : A^cols -> A^rows. coker(M) is
// A^free_rank plus the sum of A/(d_i).
struct ElementaryDivisors {
  // Monic, nonzero, d_1 | d_2 | ... ; units included.
  std::vector<UniPoly> divisors;
  std::size_t free_rank = 0;

  std::size_t rank() const { return divisors.size(); }
  // d_r, or the constant 1 when the matrix is zero.
  UniPoly largest(const PrimeField& field) const;
  std::vector<UniPoly> non_units() const;
};

struct SmithDecomposition {
  ElementaryDivisors divisors;
  PolyMatrix left;    // U, invertible over A
  PolyMatrix normal;  // U * M * V, diagonal
  PolyMatrix right;   // V, invertible over A
};

// Matrix of "multiply by F, reduce mod (x^q, y^q)" on the A-basis
// x^i y^j (0 <= i, j < q), basis index i*q + j. F must only involve t, x, y.
PolyMatrix mult_matrix(const MultiPoly& f, std::uint64_t q);

// Elementary divisors. The matrix is split into connected blocks first
// (rows and columns linked through nonzero entries) and the blocks'
// divisors are merged into one divisibility chain.
ElementaryDivisors smith_normal_form(const PolyMatrix& m);

// Full elimination recording the row and column transforms.
SmithDecomposition smith_with_transforms(const PolyMatrix& m);

}  // namespace charp
