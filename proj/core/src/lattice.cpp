#include "hfp/lattice.hpp"

#include <algorithm>
#include <utility>

#include "hfp/checked.hpp"
#include "hfp/error.hpp"
#include "hfp/normal_form.hpp"

namespace hfp {

std::string to_string(Definiteness d) {
  switch (d) {
    case Definiteness::PositiveDefinite: return "positive definite";
    case Definiteness::NegativeDefinite: return "negative definite";
    case Definiteness::PositiveSemidefinite: return "positive semidefinite";
    case Definiteness::NegativeSemidefinite: return "negative semidefinite";
    case Definiteness::Indefinite: return "indefinite";
    case Definiteness::Zero: return "zero";
  }
  return "?";
}

GramMatrix::GramMatrix(IntMatrix entries) : m_(std::move(entries)) {
  if (!m_.is_symmetric())
    throw Error(ErrorCode::InvalidParameters, "Gram matrix must be square and symmetric");
}

GramMatrix GramMatrix::identity(std::size_t rank) {
  return GramMatrix(IntMatrix::identity(rank));
}

GramMatrix GramMatrix::hyperbolic(std::size_t planes) {
  IntMatrix m(2 * planes, 2 * planes);
  for (std::size_t k = 0; k < planes; ++k) {
    m(2 * k, 2 * k + 1) = 1;
    m(2 * k + 1, 2 * k) = 1;
  }
  return GramMatrix(std::move(m));
}

GramMatrix GramMatrix::parse_shorthand(const std::string& name) {
  auto open = name.find('(');
  auto close = name.rfind(')');
  if (open == std::string::npos || close != name.size() - 1 || close <= open + 1)
    throw Error(ErrorCode::ParseError, "form shorthand '" + name + "'");
  const std::string head = name.substr(0, open);
  std::size_t k = 0;
  try {
    std::size_t used = 0;
    const auto arg = name.substr(open + 1, close - open - 1);
    k = std::stoul(arg, &used);
    if (used != arg.size()) throw std::invalid_argument(arg);
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "form shorthand '" + name + "'");
  }
  if (k == 0 || k > 64) throw Error(ErrorCode::ParseError, "form rank out of range in '" + name + "'");
  if (head == "identity") return identity(k);
  if (head == "hyperbolic") return hyperbolic(k);
  throw Error(ErrorCode::ParseError, "unknown form '" + head + "'");
}

bool GramMatrix::is_unimodular() const {
  const auto d = determinant();
  return d == 1 || d == -1;
}

bool GramMatrix::is_even() const {
  for (std::size_t k = 0; k < rank(); ++k)
    if (m_(k, k) % 2 != 0) return false;
  return true;
}

Inertia GramMatrix::inertia() const {
  // Symmetric Gaussian elimination over Q: congruence-diagonalize, then count
  // signs (Sylvester's law of inertia).
  const std::size_t n = rank();
  std::vector<Rational> a(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a[r * n + c] = Rational(m_(r, c));
  auto at = [&](std::size_t r, std::size_t c) -> Rational& { return a[r * n + c]; };

  Inertia out;
  std::size_t k = 0;
  std::size_t active = n;
  while (k < active) {
    std::size_t piv = n;
    for (std::size_t i = k; i < active; ++i)
      if (at(i, i) != Rational(0)) {
        piv = i;
        break;
      }
    if (piv == n) {
      // Zero diagonal: find an off-diagonal entry and add row/col j to k.
      std::size_t jj = n;
      for (std::size_t i = k; i < active && jj == n; ++i)
        for (std::size_t j = i + 1; j < active; ++j)
          if (at(i, j) != Rational(0)) {
            // x_i <- x_i + x_j makes the (i,i) entry 2 a_ij.
            for (std::size_t c = 0; c < n; ++c) at(i, c) += at(j, c);
            for (std::size_t r = 0; r < n; ++r) at(r, i) += at(r, j);
            jj = j;
            piv = i;
            break;
          }
      if (piv == n) {
        // Remaining block is identically zero.
        out.zero += active - k;
        break;
      }
    }
    // Move pivot to position k.
    if (piv != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(at(piv, c), at(k, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(at(r, piv), at(r, k));
    }
    const Rational p = at(k, k);
    for (std::size_t i = k + 1; i < active; ++i) {
      if (at(i, k) == Rational(0)) continue;
      const Rational f = at(i, k) / p;
      for (std::size_t c = 0; c < n; ++c) at(i, c) -= f * at(k, c);
      for (std::size_t r = 0; r < n; ++r) at(r, i) -= f * at(r, k);
    }
    if (p.sign() > 0)
      ++out.positive;
    else
      ++out.negative;
    ++k;
  }
  return out;
}

Definiteness GramMatrix::definiteness() const {
  const auto in = inertia();
  if (in.positive == 0 && in.negative == 0) return Definiteness::Zero;
  if (in.positive > 0 && in.negative > 0) return Definiteness::Indefinite;
  if (in.positive > 0)
    return in.zero == 0 ? Definiteness::PositiveDefinite : Definiteness::PositiveSemidefinite;
  return in.zero == 0 ? Definiteness::NegativeDefinite : Definiteness::NegativeSemidefinite;
}

std::int64_t pairing(const GramMatrix& q, std::span<const std::int64_t> x,
                     std::span<const std::int64_t> y) {
  if (x.size() != q.rank() || y.size() != q.rank())
    throw Error(ErrorCode::DimensionMismatch, "class length differs from form rank");
  std::int64_t acc = 0;
  for (std::size_t r = 0; r < q.rank(); ++r) {
    if (x[r] == 0) continue;
    std::int64_t row = 0;
    for (std::size_t c = 0; c < q.rank(); ++c)
      row = checked::add(row, checked::mul(q(r, c), y[c]));
    acc = checked::add(acc, checked::mul(x[r], row));
  }
  return acc;
}

GramMatrix gram_of(const GramMatrix& q, const std::vector<HomClass>& classes) {
  IntMatrix g(classes.size(), classes.size());
  for (std::size_t a = 0; a < classes.size(); ++a)
    for (std::size_t b = 0; b < classes.size(); ++b)
      g(a, b) = pairing(q, classes[a], classes[b]);
  return GramMatrix(std::move(g));
}

bool is_primitive_span(const std::vector<HomClass>& classes) {
  if (classes.empty()) return true;
  const std::size_t n = classes.front().size();
  IntMatrix m = IntMatrix::from_rows(classes, n);
  auto snf = smith_normal_form(m);
  const auto diag = snf.diagonal();
  for (std::size_t k = 0; k < classes.size() && k < diag.size(); ++k)
    if (diag[k] != 1) return false;
  return classes.size() <= n;
}

OrthogonalComplement orthogonal_complement(const GramMatrix& q,
                                           const std::vector<HomClass>& span) {
  const std::size_t n = q.rank();
  for (const auto& s : span)
    if (s.size() != n)
      throw Error(ErrorCode::DimensionMismatch, "span class length differs from form rank");
  if (!q.is_unimodular())
    throw Error(ErrorCode::InvalidParameters, "ambient form must be unimodular");
  IntMatrix s = IntMatrix::from_rows(span, n);
  if (!span.empty() && integer_rank(s) != span.size())
    throw Error(ErrorCode::DependentSpan, "span classes are linearly dependent");
  if (!is_primitive_span(span))
    throw Error(ErrorCode::NonPrimitiveSpan, "span is not a saturated sublattice");

  IntMatrix constraints = span.empty() ? IntMatrix(0, n) : s * q.entries();
  IntMatrix kernel = integer_kernel(constraints);  // n x k, columns
  OrthogonalComplement out{{}, GramMatrix(IntMatrix(0, 0))};
  for (std::size_t c = 0; c < kernel.cols(); ++c) out.basis.push_back(kernel.column(c));
  out.gram = gram_of(q, out.basis);
  return out;
}

Rational c1_squared(const GramMatrix& q, std::span<const std::int64_t> v) {
  const std::size_t n = q.rank();
  if (v.size() != n)
    throw Error(ErrorCode::DimensionMismatch, "evaluation length differs from form rank");
  if (q.determinant() == 0)
    throw Error(ErrorCode::DegenerateForm, "c1^2 needs a nondegenerate form");
  // Solve Q x = v exactly (Gauss-Jordan over Q), then c^2 = v . x.
  std::vector<Rational> a(n * (n + 1));
  auto at = [&](std::size_t r, std::size_t c) -> Rational& { return a[r * (n + 1) + c]; };
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) at(r, c) = Rational(q(r, c));
    at(r, n) = Rational(v[r]);
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (at(piv, k) == Rational(0)) ++piv;
    if (piv != k)
      for (std::size_t c = 0; c <= n; ++c) std::swap(at(piv, c), at(k, c));
    const Rational p = at(k, k);
    for (std::size_t c = k; c <= n; ++c) at(k, c) /= p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == k || at(r, k) == Rational(0)) continue;
      const Rational f = at(r, k);
      for (std::size_t c = k; c <= n; ++c) at(r, c) -= f * at(k, c);
    }
  }
  Rational sq(0);
  for (std::size_t r = 0; r < n; ++r) sq += Rational(v[r]) * at(r, n);
  return sq;
}

bool is_characteristic(const GramMatrix& q, std::span<const std::int64_t> v) {
  if (v.size() != q.rank())
    throw Error(ErrorCode::DimensionMismatch, "evaluation length differs from form rank");
  for (std::size_t k = 0; k < v.size(); ++k)
    if (checked::mod(checked::sub(v[k], q(k, k)), 2) != 0) return false;
  return true;
}

CharEvaluation evaluate_on(std::span<const std::int64_t> c_on_basis,
                           const std::vector<HomClass>& classes) {
  CharEvaluation out;
  out.reserve(classes.size());
  for (const auto& x : classes) {
    if (x.size() != c_on_basis.size())
      throw Error(ErrorCode::DimensionMismatch, "class length differs from evaluation length");
    std::int64_t acc = 0;
    for (std::size_t k = 0; k < x.size(); ++k)
      acc = checked::add(acc, checked::mul(x[k], c_on_basis[k]));
    out.push_back(acc);
  }
  return out;
}

}  // namespace hfp
