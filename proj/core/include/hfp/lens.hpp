#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "hfp/rational.hpp"

namespace hfp {

/// Lens space L(p, q), p/q surgery on the unknot. q is stored reduced modulo
/// p; L(1, q) is the 3-sphere.
class LensSpace {
 public:
  /// Throws InvalidLensParameters unless p >= 1, q >= 0 and gcd(p, q) = 1.
  LensSpace(std::int64_t p, std::int64_t q);

  std::int64_t p() const noexcept { return p_; }
  std::int64_t q() const noexcept { return q_; }

  friend bool operator==(const LensSpace&, const LensSpace&) = default;

 private:
  std::int64_t p_;
  std::int64_t q_;
};

/// Spin^c label on L(p,q), a residue in [0, p).
struct LensSpinC {
  std::int64_t i;

  friend auto operator<=>(const LensSpinC&, const LensSpinC&) = default;
};

enum class Orientation { Positive, Negative };

/// d(-L(p,q), i), by the recursion
///   d(-L(p,q), i) = (pq - (2i+1-p-q)^2) / 4pq - d(-L(q,r), j)
/// with r = p mod q, j = i mod q, ending at d(-L(1,0), 0) = 0.
Rational d_neg_lens(const LensSpace& lens, std::int64_t i);

/// d(L(p,q), i) = -d(-L(p,q), i).
Rational d_lens(const LensSpace& lens, std::int64_t i);

Rational d_lens_oriented(const LensSpace& lens, std::int64_t i, Orientation o);

/// All p values, indexed by Spin^c label i.
std::vector<Rational> d_lens_table(const LensSpace& lens, Orientation o);

// Closed forms for d(-L(p,q), i) on the boundaries of single plumbings.

/// d(-L(m-1, 1), i) for m >= 2, 0 <= i < m-1.
Rational d_lens_closed_n1(std::int64_t m, std::int64_t i);
/// d(-L(2m-1, 2), i) for m >= 1, 0 <= i < 2m-1.
Rational d_lens_closed_n2(std::int64_t m, std::int64_t i);
/// d(-L(mn-1, n), i) for m >= 1, n > 2, 0 <= i < n-1.
Rational d_lens_closed_general(std::int64_t m, std::int64_t n, std::int64_t i);

}  // namespace hfp
