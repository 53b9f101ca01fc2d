#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hfp/int_matrix.hpp"
#include "hfp/rational.hpp"

namespace hfp {

/// Coordinates of a class in a fixed basis of H_2.
using HomClass = std::vector<std::int64_t>;
/// Pairings <c, b_k> of a cohomology class with the basis b_k.
using CharEvaluation = std::vector<std::int64_t>;

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  friend bool operator==(const Inertia&, const Inertia&) = default;
};

enum class Definiteness {
  PositiveDefinite,
  NegativeDefinite,
  PositiveSemidefinite,
  NegativeSemidefinite,
  Indefinite,
  Zero,
};

std::string to_string(Definiteness d);

/// Symmetric integer bilinear form.
class GramMatrix {
 public:
  /// Throws InvalidParameters if the matrix is not square and symmetric.
  explicit GramMatrix(IntMatrix entries);

  static GramMatrix identity(std::size_t rank);
  /// Orthogonal sum of k hyperbolic planes [[0,1],[1,0]] (rank 2k).
  static GramMatrix hyperbolic(std::size_t planes);
  /// "identity(r)" or "hyperbolic(k)".
  static GramMatrix parse_shorthand(const std::string& name);

  const IntMatrix& entries() const noexcept { return m_; }
  std::size_t rank() const noexcept { return m_.rows(); }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

  std::int64_t determinant() const { return m_.determinant(); }
  bool is_unimodular() const;
  bool is_even() const;
  /// Exact signature via congruence diagonalization over Q.
  Inertia inertia() const;
  Definiteness definiteness() const;

  friend bool operator==(const GramMatrix&, const GramMatrix&) = default;

 private:
  IntMatrix m_;
};

/// x^T Q y.
std::int64_t pairing(const GramMatrix& q, std::span<const std::int64_t> x,
                     std::span<const std::int64_t> y);

/// Gram matrix of the given classes.
GramMatrix gram_of(const GramMatrix& q, const std::vector<HomClass>& classes);

/// Sublattice generated by the classes is saturated in Z^rank.
bool is_primitive_span(const std::vector<HomClass>& classes);

struct OrthogonalComplement {
  std::vector<HomClass> basis;
  GramMatrix gram;
};

/// {x : x.s = 0 for all s in span} with a Hermite-reduced basis (first
/// nonzero coordinate positive). Q must be unimodular and the span
/// linearly independent (DependentSpan) and primitive (NonPrimitiveSpan).
OrthogonalComplement orthogonal_complement(const GramMatrix& q,
                                           const std::vector<HomClass>& span);

/// v^T Q^{-1} v for the evaluation vector v of a class c; this is c^2.
/// Throws DegenerateForm if det Q == 0.
Rational c1_squared(const GramMatrix& q, std::span<const std::int64_t> v);

/// v_k == Q_kk (mod 2) for every basis vector.
bool is_characteristic(const GramMatrix& q, std::span<const std::int64_t> v);

/// Pairings of c with each class, given the pairings of c with the standard
/// basis: <c, x> = sum_k x_k <c, e_k>.
CharEvaluation evaluate_on(std::span<const std::int64_t> c_on_basis,
                           const std::vector<HomClass>& classes);

}  // namespace hfp
