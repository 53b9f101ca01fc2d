#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

namespace hfp {

/// Dense integer matrix, row-major. All arithmetic is overflow-checked.
class IntMatrix {
 public:
  using Int = std::int64_t;

  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows,
                             std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Int operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<Int> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Int> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::vector<Int> column(std::size_t c) const;
  const std::vector<Int>& entries() const noexcept { return data_; }

  IntMatrix transpose() const;
  std::vector<std::vector<Int>> to_rows() const;

  // Elementary operations, used by the normal-form routines.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void add_row_multiple(std::size_t dst, std::size_t src, Int factor);
  void add_col_multiple(std::size_t dst, std::size_t src, Int factor);
  void negate_row(std::size_t r);

  /// Exact determinant (fraction-free Bareiss elimination).
  Int determinant() const;
  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_symmetric() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
std::vector<IntMatrix::Int> operator*(const IntMatrix& a,
                                      std::span<const IntMatrix::Int> x);

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace hfp
