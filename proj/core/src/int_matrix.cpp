#include "hfp/int_matrix.hpp"

#include <ostream>
#include <utility>

#include "hfp/checked.hpp"
#include "hfp/error.hpp"

namespace hfp {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols,
                     std::vector<Int> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols)
    throw Error(ErrorCode::DimensionMismatch, "entry count does not match shape");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_)
      throw Error(ErrorCode::DimensionMismatch, "ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows,
                               std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw Error(ErrorCode::DimensionMismatch, "ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::vector<IntMatrix::Int> IntMatrix::column(std::size_t c) const {
  std::vector<Int> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

std::vector<std::vector<IntMatrix::Int>> IntMatrix::to_rows() const {
  std::vector<std::vector<Int>> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    auto s = row(r);
    out[r].assign(s.begin(), s.end());
  }
  return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, Int factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c)
    (*this)(dst, c) =
        checked::add((*this)(dst, c), checked::mul(factor, (*this)(src, c)));
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, Int factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r)
    (*this)(r, dst) =
        checked::add((*this)(r, dst), checked::mul(factor, (*this)(r, src)));
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = checked::neg((*this)(r, c));
}

IntMatrix::Int IntMatrix::determinant() const {
  if (!is_square()) throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  std::vector<checked::Wide> a(data_.begin(), data_.end());
  auto at = [&](std::size_t r, std::size_t c) -> checked::Wide& { return a[r * n + c]; };
  checked::Wide prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(at(k, c), at(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        checked::Wide v = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        // Bareiss guarantees exact division; guard the 128-bit range.
        at(i, j) = v / prev;
        checked::narrow(at(i, j));
      }
    }
    prev = at(k, k);
  }
  return checked::narrow(sign * at(n - 1, n - 1));
}

bool IntMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows())
    throw Error(ErrorCode::DimensionMismatch, "matrix product shape");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out(i, j) = checked::add(out(i, j), checked::mul(aik, b(k, j)));
    }
  return out;
}

std::vector<IntMatrix::Int> operator*(const IntMatrix& a,
                                      std::span<const IntMatrix::Int> x) {
  if (a.cols() != x.size())
    throw Error(ErrorCode::DimensionMismatch, "matrix-vector product shape");
  std::vector<IntMatrix::Int> out(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      out[i] = checked::add(out[i], checked::mul(a(i, k), x[k]));
  return out;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) os << ',';
    os << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ',';
      os << m(r, c);
    }
    os << ']';
  }
  return os << ']';
}

}  // namespace hfp
