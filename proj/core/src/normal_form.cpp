#include "hfp/normal_form.hpp"

#include <optional>
#include <utility>

#include "hfp/checked.hpp"
#include "hfp/error.hpp"

namespace hfp {
namespace {

using Int = std::int64_t;

struct Position {
  std::size_t row;
  std::size_t col;
};

// Smallest nonzero |entry| in the block [t.., t..], lowest (row, col) on ties.
std::optional<Position> find_pivot(const IntMatrix& d, std::size_t t) {
  std::optional<Position> best;
  Int best_abs = 0;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      Int v = d(i, j);
      if (v == 0) continue;
      Int a = checked::abs(v);
      if (!best || a < best_abs) {
        best = Position{i, j};
        best_abs = a;
      }
    }
  return best;
}

}  // namespace

std::vector<std::int64_t> SmithDecomposition::diagonal() const {
  std::vector<std::int64_t> out;
  const std::size_t n = std::min(D.rows(), D.cols());
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.push_back(D(k, k));
  return out;
}

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  if (a.empty())
    throw Error(ErrorCode::DimensionMismatch, "Smith normal form of an empty matrix");
  SmithDecomposition s{IntMatrix::identity(a.rows()),
                       IntMatrix::identity(a.cols()), a};
  IntMatrix& d = s.D;
  const std::size_t n = std::min(d.rows(), d.cols());

  for (std::size_t t = 0; t < n; ++t) {
    bool finished = false;
    while (!finished) {
      auto pivot = find_pivot(d, t);
      if (!pivot) return s;  // remaining block is zero
      d.swap_rows(t, pivot->row);
      s.U.swap_rows(t, pivot->row);
      d.swap_cols(t, pivot->col);
      s.V.swap_cols(t, pivot->col);

      bool clean = true;
      const Int p = d(t, t);
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (d(i, t) == 0) continue;
        Int q = d(i, t) / p;
        d.add_row_multiple(i, t, checked::neg(q));
        s.U.add_row_multiple(i, t, checked::neg(q));
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (d(t, j) == 0) continue;
        Int q = d(t, j) / p;
        d.add_col_multiple(j, t, checked::neg(q));
        s.V.add_col_multiple(j, t, checked::neg(q));
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce the divisibility chain: fold an offending row into row t.
      std::optional<std::size_t> offender;
      for (std::size_t i = t + 1; i < d.rows() && !offender; ++i)
        for (std::size_t j = t + 1; j < d.cols(); ++j)
          if (d(i, j) % p != 0) {
            offender = i;
            break;
          }
      if (offender) {
        d.add_row_multiple(t, *offender, 1);
        s.U.add_row_multiple(t, *offender, 1);
        continue;
      }
      finished = true;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      s.U.negate_row(t);
    }
  }
  return s;
}

HermiteDecomposition row_hermite_form(const IntMatrix& a) {
  HermiteDecomposition h{IntMatrix::identity(a.rows()), a, 0};
  IntMatrix& m = h.H;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    while (true) {
      std::optional<std::size_t> best;
      Int best_abs = 0;
      for (std::size_t i = row; i < m.rows(); ++i) {
        if (m(i, col) == 0) continue;
        Int v = checked::abs(m(i, col));
        if (!best || v < best_abs) {
          best = i;
          best_abs = v;
        }
      }
      if (!best) break;
      m.swap_rows(row, *best);
      h.U.swap_rows(row, *best);
      bool clean = true;
      for (std::size_t i = row + 1; i < m.rows(); ++i) {
        if (m(i, col) == 0) continue;
        Int q = m(i, col) / m(row, col);
        m.add_row_multiple(i, row, checked::neg(q));
        h.U.add_row_multiple(i, row, checked::neg(q));
        if (m(i, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (m(row, col) == 0) continue;  // no pivot in this column
    if (m(row, col) < 0) {
      m.negate_row(row);
      h.U.negate_row(row);
    }
    const Int p = m(row, col);
    for (std::size_t i = 0; i < row; ++i) {
      Int q = checked::floor_div(m(i, col), p);
      m.add_row_multiple(i, row, checked::neg(q));
      h.U.add_row_multiple(i, row, checked::neg(q));
    }
    ++row;
  }
  h.rank = row;
  return h;
}

ColumnHermiteDecomposition column_hermite_form(const IntMatrix& a) {
  auto r = row_hermite_form(a.transpose());
  return {r.U.transpose(), r.H.transpose(), r.rank};
}

IntMatrix integer_kernel(const IntMatrix& a) {
  const std::size_t n = a.cols();
  if (n == 0) return IntMatrix(0, 0);
  // U * A^T = H; the rows of U past the rank annihilate A^T.
  auto h = row_hermite_form(a.transpose());
  const std::size_t k = n - h.rank;
  if (k == 0) return IntMatrix(n, 0);
  IntMatrix basis(k, n);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < n; ++c) basis(r, c) = h.U(h.rank + r, c);
  auto canonical = row_hermite_form(basis);
  return canonical.H.transpose();
}

std::size_t integer_rank(const IntMatrix& a) {
  if (a.empty()) return 0;
  return row_hermite_form(a).rank;
}

}  // namespace hfp
