#ifndef CURVETORSION_LINALG_HPP
#define CURVETORSION_LINALG_HPP

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace curvetorsion::linalg {

// Dense integer matrix, row-major. Entries are arbitrary precision so that
// fraction-free elimination never overflows.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpz_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix transpose() const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

// Rank over Q, by Bareiss fraction-free elimination. Every intermediate
// value is a minor of the input, and each division is exact.
std::size_t rank(IntMatrix m);

// Determinant of a square matrix, Bareiss with row pivoting.
mpz_class determinant(IntMatrix m);

// Rank of the row set `rows` (each of length `cols`).
std::size_t rank_of_rows(const std::vector<const std::vector<long>*>& rows, std::size_t cols);

}  // namespace curvetorsion::linalg

#endif
