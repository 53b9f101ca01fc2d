#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "hfp/int_matrix.hpp"

namespace hfp {

namespace detail {
struct SubgroupBuilder;
}

inline constexpr std::int64_t kDefaultGroupLimit = 10000;

/// Element of a finite abelian group, one residue per invariant factor.
/// Ordering is lexicographic on the coordinates.
struct GroupElement {
  std::vector<std::int64_t> coords;

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// Finite abelian group Z/d_1 + ... + Z/d_r with d_1 | ... | d_r, d_k > 1,
/// together with the images of the presentation generators.
class FinAbelianGroup {
 public:
  /// Cokernel of the relation matrix: rows are relations, columns are
  /// presentation generators. Throws InfiniteGroup if the cokernel is not
  /// finite.
  static FinAbelianGroup from_relations(const IntMatrix& relations);
  static FinAbelianGroup from_invariant_factors(std::vector<std::int64_t> factors);

  const std::vector<std::int64_t>& invariant_factors() const noexcept {
    return factors_;
  }
  /// rank() x presentation_generators(); column k is the image of generator k.
  const IntMatrix& generator_images() const noexcept { return images_; }

  std::size_t rank() const noexcept { return factors_.size(); }
  std::size_t presentation_generators() const noexcept { return images_.cols(); }
  std::int64_t order() const noexcept { return order_; }

  GroupElement identity() const;
  GroupElement element_of(std::span<const std::int64_t> coeffs) const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement negate(const GroupElement& a) const;
  GroupElement scale(const GroupElement& a, std::int64_t k) const;
  std::int64_t order_of(const GroupElement& a) const;

  /// True when the coordinate count and ranges fit this group.
  bool contains(const GroupElement& a) const;

  // Mixed-radix indexing, first coordinate most significant, so index order
  // agrees with lexicographic element order.
  std::int64_t index_of(const GroupElement& a) const;
  GroupElement element_at(std::int64_t index) const;
  std::vector<GroupElement> elements() const;

  friend bool operator==(const FinAbelianGroup&, const FinAbelianGroup&) = default;

 private:
  std::vector<std::int64_t> factors_;
  IntMatrix images_;
  std::int64_t order_ = 1;
};

/// Subgroup of a finite abelian group, stored with its full sorted element
/// list. The parent is shared so the subgroup stays valid on its own.
class Subgroup {
 public:
  Subgroup(std::shared_ptr<const FinAbelianGroup> parent,
           std::vector<GroupElement> generators);

  const FinAbelianGroup& parent() const noexcept { return *parent_; }
  const std::shared_ptr<const FinAbelianGroup>& parent_ptr() const noexcept {
    return parent_;
  }
  const std::vector<GroupElement>& generators() const noexcept { return generators_; }
  const std::vector<GroupElement>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool contains(const GroupElement& a) const;

  /// Isomorphism type of the subgroup itself.
  std::vector<std::int64_t> invariant_factors() const;
  /// Isomorphism type of parent / this.
  std::vector<std::int64_t> quotient_invariant_factors() const;

 private:
  friend struct detail::SubgroupBuilder;
  Subgroup() = default;

  std::shared_ptr<const FinAbelianGroup> parent_;
  std::vector<GroupElement> generators_;
  std::vector<GroupElement> elements_;
};

/// Every subgroup exactly once, ordered by size and then by element list.
/// Throws GroupTooLarge when |G| exceeds the limit.
std::vector<Subgroup> subgroups(const FinAbelianGroup& group,
                                std::int64_t limit = kDefaultGroupLimit);

/// Subgroups t with |t|^2 = |G| and G/t isomorphic to t.
std::vector<Subgroup> metabolizers(const FinAbelianGroup& group,
                                   std::int64_t limit = kDefaultGroupLimit);

/// True iff the set S equals x + t for some x in S. Throws MixedParents if
/// an element of S does not belong to t's parent group.
bool is_coset(std::span<const GroupElement> set, const Subgroup& t);

}  // namespace hfp
