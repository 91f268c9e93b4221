#include "nsphere/matrix.hpp"

#include <algorithm>
#include <utility>

#include "nsphere/errors.hpp"

namespace nsphere {

namespace {

using IntGrid = std::vector<std::vector<BigInteger>>;

// Scales each row by the lcm of its denominators. Returns the integer grid
// and the per-row multipliers.
std::pair<IntGrid, std::vector<BigInteger>> clear_denominators(const RationalMatrix& m) {
  IntGrid grid(m.rows(), std::vector<BigInteger>(m.cols()));
  std::vector<BigInteger> scale(m.rows(), 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    BigInteger l = 1;
    for (const auto& v : m.row(r)) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    }
    scale[r] = l;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const BigRational& v = m(r, c);
      grid[r][c] = v.get_num() * (l / v.get_den());
    }
  }
  return {std::move(grid), std::move(scale)};
}

// One fraction-free step: a[i][j] = (pivot * a[i][j] - a[i][col] * a[row][j]) / prev.
void bareiss_update(std::vector<BigInteger>& target, const std::vector<BigInteger>& pivot_row,
                    std::size_t col, const BigInteger& pivot, const BigInteger& prev,
                    std::size_t from) {
  const BigInteger factor = target[col];
  BigInteger tmp;
  for (std::size_t j = from; j < target.size(); ++j) {
    tmp = pivot * target[j] - factor * pivot_row[j];
    mpz_divexact(target[j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
  }
}

}  // namespace

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<BigRational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InvalidInput("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t size) {
  RationalMatrix out(size, size);
  for (std::size_t i = 0; i < size; ++i) out(i, i) = 1;
  return out;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

RationalMatrix RationalMatrix::top_left(std::size_t rows, std::size_t cols) const {
  if (rows > rows_ || cols > cols_) throw InvalidInput("submatrix larger than matrix");
  RationalMatrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = (*this)(r, c);
  return out;
}

bool RationalMatrix::symmetric() const {
  if (!square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

bool RationalMatrix::is_identity() const {
  if (!square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidInput("matrix product: dimension mismatch");
  RationalMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const BigRational& x = a(r, k);
      if (x == 0) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += x * b(k, c);
    }
  }
  return out;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw InvalidInput("matrix difference: dimension mismatch");
  RationalMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] - b.data_[i];
  return out;
}

BigRational determinant(const RationalMatrix& m) {
  if (!m.square()) throw InvalidInput("determinant of a non-square matrix");
  const std::size_t size = m.rows();
  if (size == 0) return 1;
  auto [a, scale] = clear_denominators(m);
  int sign = 1;
  BigInteger prev = 1;
  for (std::size_t k = 0; k < size; ++k) {
    std::size_t p = k;
    while (p < size && a[p][k] == 0) ++p;
    if (p == size) return 0;
    if (p != k) {
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < size; ++i) bareiss_update(a[i], a[k], k, a[k][k], prev, k + 1);
    prev = a[k][k];
  }
  BigInteger denom = 1;
  for (const auto& s : scale) denom *= s;
  BigRational out(sign * prev, denom);
  out.canonicalize();
  return out;
}

RationalMatrix invert(const RationalMatrix& m) {
  if (!m.square()) throw InvalidInput("inverse of a non-square matrix");
  const std::size_t size = m.rows();
  auto [lhs, scale] = clear_denominators(m);
  // Fraction-free Gauss-Jordan on [A | I]; on exit the left block is
  // det * I and the right block is the adjugate (up to the row scaling).
  IntGrid a(size, std::vector<BigInteger>(2 * size));
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t c = 0; c < size; ++c) a[r][c] = lhs[r][c];
    a[r][size + r] = 1;
  }
  BigInteger prev = 1;
  for (std::size_t k = 0; k < size; ++k) {
    std::size_t p = k;
    while (p < size && a[p][k] == 0) ++p;
    if (p == size) throw SingularMatrix("matrix is singular");
    if (p != k) std::swap(a[p], a[k]);
    for (std::size_t i = 0; i < size; ++i) {
      if (i == k) continue;
      bareiss_update(a[i], a[k], k, a[k][k], prev, 0);
    }
    prev = a[k][k];
  }
  // (D A)^{-1} = A^{-1} D^{-1}  =>  A^{-1} = (D A)^{-1} D.
  RationalMatrix out(size, size);
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t c = 0; c < size; ++c) {
      BigRational v(a[r][size + c] * scale[c], a[r][r]);
      v.canonicalize();
      out(r, c) = std::move(v);
    }
  }
  return out;
}

std::size_t rank(const RationalMatrix& m) {
  if (m.empty()) return 0;
  auto [a, scale] = clear_denominators(m);
  (void)scale;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  BigInteger prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) bareiss_update(a[i], a[r], c, a[r][c], prev, c);
    prev = a[r][c];
    ++r;
  }
  return r;
}

RowEchelon row_echelon(const RationalMatrix& m) {
  RationalMatrix a = m;
  std::vector<std::size_t> pivots;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
    const BigRational inv = 1 / a(r, c);
    for (std::size_t j = c; j < cols; ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      const BigRational f = a(i, c);
      for (std::size_t j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

RationalMatrix pseudo_inverse(const RationalMatrix& m) {
  const auto [reduced, pivots] = row_echelon(m);
  const std::size_t r = pivots.size();
  if (r == 0) return RationalMatrix(m.cols(), m.rows());
  // M = B C with B = pivot columns of M, C = nonzero rows of rref(M).
  RationalMatrix b(m.rows(), r);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < r; ++j) b(i, j) = m(i, pivots[j]);
  const RationalMatrix c = reduced.top_left(r, m.cols());
  const RationalMatrix ct = c.transpose();
  const RationalMatrix bt = b.transpose();
  return ct * invert(c * ct) * invert(bt * b) * bt;
}

}  // namespace nsphere
