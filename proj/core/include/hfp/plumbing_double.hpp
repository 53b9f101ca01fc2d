#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hfp/abelian.hpp"
#include "hfp/rational.hpp"

namespace hfp {

/// Double plumbing N_{m,n} of two disk bundles over spheres with Euler
/// numbers m and n, plumbed twice with the same sign. Y_{m,n} is its
/// boundary; Tors H_1(Y_{m,n}) has order mn - 4.
class DoublePlumbing {
 public:
  /// Throws InvalidParameters unless m, n >= 4.
  DoublePlumbing(std::int64_t m, std::int64_t n);

  std::int64_t m() const noexcept { return m_; }
  std::int64_t n() const noexcept { return n_; }
  std::int64_t torsion_order() const noexcept { return m_ * n_ - 4; }

  /// Presentation [[m,2],[2,n]] of the torsion of H_1 on mu_1, mu_2.
  IntMatrix relation_matrix() const;
  FinAbelianGroup torsion_group() const;

  friend bool operator==(const DoublePlumbing&, const DoublePlumbing&) = default;

 private:
  std::int64_t m_;
  std::int64_t n_;
};

enum class SpinCKind { Interior, IAxis, JAxis };

std::string_view to_string(SpinCKind kind);
SpinCKind parse_spinc_kind(std::string_view text);

/// Label s_{i,j} of a torsion Spin^c structure on Y_{m,n}.
///
/// Canonical representatives: s_{1,n-1} stands for {s_{1,n-1}, s_{m-1,1}},
/// s_{m-2,0} for {s_{m-2,0}, s_{0,n-2}}, and s_{0,0} is an IAxis label.
/// The kind is ordered Interior < IAxis < JAxis.
struct SpinCIndex {
  SpinCKind kind;
  std::int64_t i;
  std::int64_t j;

  friend auto operator<=>(const SpinCIndex&, const SpinCIndex&) = default;

  std::string str() const;  // "s_{i,j}"
};

/// Map any label from the full index ranges (1..m-1 x 1..n-1, s_{0,j} for
/// 0..n-2, s_{i,0} for 0..m-2) to its canonical representative.
/// Throws IndexOutOfRange for labels outside those ranges.
SpinCIndex canonical_spinc(const DoublePlumbing& p, std::int64_t i, std::int64_t j);

bool is_canonical(const DoublePlumbing& p, const SpinCIndex& s);

/// All mn - 4 canonical labels, ordered by (kind, i, j).
std::vector<SpinCIndex> spinc_enumerate(const DoublePlumbing& p);

// Grading formulas for the tower bottoms.
Rational d_interior(const DoublePlumbing& p, std::int64_t i, std::int64_t j);
Rational d_one(const DoublePlumbing& p, std::int64_t t, std::int64_t i);

/// Bottom-most correction term: the tower generator in the kernel of the
/// H_1 action sits one grading below the upper tower.
Rational d_bottom(const DoublePlumbing& p, const SpinCIndex& s);
Rational d_top(const DoublePlumbing& p, const SpinCIndex& s);

/// Class of s - s_{0,0} in T, i.e. -(i mu_1 + j mu_2).
GroupElement spinc_to_group_element(const DoublePlumbing& p, const SpinCIndex& s,
                                    const FinAbelianGroup& torsion);

/// HF^+ in a torsion Spin^c structure: two towers whose bottoms differ by
/// one, plus an extra F summand at the lower bottom for the single class
/// s_{1,n-1} = s_{m-1,1}.
struct HFPlusShape {
  Rational upper_tower_bottom;
  Rational lower_tower_bottom;
  std::optional<Rational> extra_summand_grading;
};

HFPlusShape hf_shape(const DoublePlumbing& p, const SpinCIndex& s);

/// One row of the correction-term table.
struct DoubleTableRow {
  SpinCIndex spinc;
  Rational d_b;
  Rational d_t;
  bool extra_summand;

  friend bool operator==(const DoubleTableRow&, const DoubleTableRow&) = default;
};

std::vector<DoubleTableRow> correction_table(const DoublePlumbing& p);

}  // namespace hfp
