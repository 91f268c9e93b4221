#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "nsphere/rational.hpp"

namespace nsphere {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::initializer_list<std::initializer_list<BigRational>> rows);

  static RationalMatrix identity(std::size_t size);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  BigRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigRational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<BigRational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const BigRational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  RationalMatrix transpose() const;
  /// Leading principal (or any top-left) submatrix.
  RationalMatrix top_left(std::size_t rows, std::size_t cols) const;
  bool symmetric() const;
  bool is_identity() const;

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigRational> data_;
};

/// Exact inverse by fraction-free (Bareiss) elimination on the integer
/// matrix obtained after clearing denominators. Throws SingularMatrix.
RationalMatrix invert(const RationalMatrix& m);

BigRational determinant(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// Exact Moore-Penrose inverse via a full-rank factorization M = B C.
RationalMatrix pseudo_inverse(const RationalMatrix& m);

/// Reduced row echelon form together with its pivot columns.
struct RowEchelon {
  RationalMatrix reduced;
  std::vector<std::size_t> pivots;
};

RowEchelon row_echelon(const RationalMatrix& m);

}  // namespace nsphere
