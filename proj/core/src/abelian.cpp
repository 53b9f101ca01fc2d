#include "hfp/abelian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <utility>

#include "hfp/checked.hpp"
#include "hfp/error.hpp"
#include "hfp/normal_form.hpp"

namespace hfp {

namespace detail {

struct SubgroupBuilder {
  static Subgroup make(std::shared_ptr<const FinAbelianGroup> parent,
                       std::vector<GroupElement> generators,
                       std::vector<GroupElement> sorted_elements) {
    Subgroup s;
    s.parent_ = std::move(parent);
    s.generators_ = std::move(generators);
    s.elements_ = std::move(sorted_elements);
    return s;
  }
};

}  // namespace detail

// ---------------------------------------------------------------------------
// FinAbelianGroup

FinAbelianGroup FinAbelianGroup::from_relations(const IntMatrix& relations) {
  if (relations.cols() == 0) return from_invariant_factors({});
  if (relations.rows() < relations.cols())
    throw Error(ErrorCode::InfiniteGroup,
                "fewer relations than generators leaves a free summand");
  auto snf = smith_normal_form(relations);
  auto diag = snf.diagonal();

  FinAbelianGroup g;
  std::vector<std::size_t> kept;
  for (std::size_t k = 0; k < diag.size(); ++k) {
    if (diag[k] == 0)
      throw Error(ErrorCode::InfiniteGroup, "Smith invariant factor 0");
    if (diag[k] > 1) {
      kept.push_back(k);
      g.factors_.push_back(diag[k]);
    }
  }
  // Row space of R maps onto the row space of D under x -> x V, so
  // generator e_k lands on row k of V reduced modulo the factors.
  const std::size_t gens = relations.cols();
  g.images_ = IntMatrix(kept.size(), gens);
  for (std::size_t r = 0; r < kept.size(); ++r)
    for (std::size_t k = 0; k < gens; ++k)
      g.images_(r, k) = checked::mod(snf.V(k, kept[r]), g.factors_[r]);
  g.order_ = 1;
  for (auto f : g.factors_) g.order_ = checked::mul(g.order_, f);
  return g;
}

FinAbelianGroup FinAbelianGroup::from_invariant_factors(
    std::vector<std::int64_t> factors) {
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (factors[k] <= 1)
      throw Error(ErrorCode::InvalidParameters, "invariant factors must exceed 1");
    if (k > 0 && factors[k] % factors[k - 1] != 0)
      throw Error(ErrorCode::InvalidParameters, "invariant factors must form a divisibility chain");
  }
  FinAbelianGroup g;
  g.factors_ = std::move(factors);
  g.images_ = IntMatrix::identity(g.factors_.size());
  g.order_ = 1;
  for (auto f : g.factors_) g.order_ = checked::mul(g.order_, f);
  return g;
}

GroupElement FinAbelianGroup::identity() const {
  return GroupElement{std::vector<std::int64_t>(rank(), 0)};
}

GroupElement FinAbelianGroup::element_of(
    std::span<const std::int64_t> coeffs) const {
  if (coeffs.size() != presentation_generators())
    throw Error(ErrorCode::DimensionMismatch,
                "coefficient count differs from presentation generators");
  GroupElement e = identity();
  for (std::size_t r = 0; r < rank(); ++r) {
    const std::int64_t f = factors_[r];
    std::int64_t acc = 0;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
      acc = checked::mod(
          checked::add(acc, checked::mul(checked::mod(coeffs[k], f), images_(r, k))), f);
    e.coords[r] = acc;
  }
  return e;
}

GroupElement FinAbelianGroup::add(const GroupElement& a,
                                  const GroupElement& b) const {
  GroupElement e = identity();
  for (std::size_t r = 0; r < rank(); ++r)
    e.coords[r] = (a.coords[r] + b.coords[r]) % factors_[r];
  return e;
}

GroupElement FinAbelianGroup::negate(const GroupElement& a) const {
  GroupElement e = identity();
  for (std::size_t r = 0; r < rank(); ++r)
    e.coords[r] = a.coords[r] == 0 ? 0 : factors_[r] - a.coords[r];
  return e;
}

GroupElement FinAbelianGroup::scale(const GroupElement& a, std::int64_t k) const {
  GroupElement e = identity();
  for (std::size_t r = 0; r < rank(); ++r) {
    const std::int64_t f = factors_[r];
    e.coords[r] = checked::mod(checked::mul(checked::mod(k, f), a.coords[r]), f);
  }
  return e;
}

std::int64_t FinAbelianGroup::order_of(const GroupElement& a) const {
  std::int64_t ord = 1;
  for (std::size_t r = 0; r < rank(); ++r) {
    const std::int64_t f = factors_[r];
    const std::int64_t o = f / std::gcd(f, a.coords[r]);
    ord = std::lcm(ord, o);
  }
  return ord;
}

bool FinAbelianGroup::contains(const GroupElement& a) const {
  if (a.coords.size() != rank()) return false;
  for (std::size_t r = 0; r < rank(); ++r)
    if (a.coords[r] < 0 || a.coords[r] >= factors_[r]) return false;
  return true;
}

std::int64_t FinAbelianGroup::index_of(const GroupElement& a) const {
  std::int64_t idx = 0;
  for (std::size_t r = 0; r < rank(); ++r) idx = idx * factors_[r] + a.coords[r];
  return idx;
}

GroupElement FinAbelianGroup::element_at(std::int64_t index) const {
  GroupElement e = identity();
  for (std::size_t r = rank(); r-- > 0;) {
    e.coords[r] = index % factors_[r];
    index /= factors_[r];
  }
  return e;
}

std::vector<GroupElement> FinAbelianGroup::elements() const {
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(order_));
  for (std::int64_t i = 0; i < order_; ++i) out.push_back(element_at(i));
  return out;
}

// ---------------------------------------------------------------------------
// Subgroup

namespace {

std::vector<GroupElement> span_of(const FinAbelianGroup& g,
                                  const std::vector<GroupElement>& gens) {
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<std::int64_t> frontier{0};
  seen[0] = 1;
  std::vector<std::int64_t> all{0};
  while (!frontier.empty()) {
    std::vector<std::int64_t> next;
    for (auto idx : frontier) {
      const GroupElement e = g.element_at(idx);
      for (const auto& gen : gens) {
        const auto s = g.index_of(g.add(e, gen));
        if (!seen[s]) {
          seen[s] = 1;
          next.push_back(s);
          all.push_back(s);
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end());
  std::vector<GroupElement> out;
  out.reserve(all.size());
  for (auto idx : all) out.push_back(g.element_at(idx));
  return out;
}

}  // namespace

Subgroup::Subgroup(std::shared_ptr<const FinAbelianGroup> parent,
                   std::vector<GroupElement> generators)
    : parent_(std::move(parent)), generators_(std::move(generators)) {
  for (const auto& g : generators_)
    if (!parent_->contains(g))
      throw Error(ErrorCode::MixedParents, "generator outside parent group");
  elements_ = span_of(*parent_, generators_);
}

bool Subgroup::contains(const GroupElement& a) const {
  return std::binary_search(elements_.begin(), elements_.end(), a);
}

std::vector<std::int64_t> Subgroup::invariant_factors() const {
  const auto& g = *parent_;
  const std::size_t s = generators_.size();
  const std::size_t r = g.rank();
  if (s == 0 || r == 0 || size() == 1) return {};
  // Relations among the generators: c in Z^s with sum c_i g_i == 0 in G,
  // i.e. the first s coordinates of the left kernel of [gens; diag(d)].
  IntMatrix stacked(s + r, r);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t k = 0; k < r; ++k) stacked(i, k) = generators_[i].coords[k];
  for (std::size_t k = 0; k < r; ++k)
    stacked(s + k, k) = g.invariant_factors()[k];
  IntMatrix kernel = integer_kernel(stacked.transpose());  // (s+r) x kdim
  IntMatrix rel(kernel.cols(), s);
  for (std::size_t c = 0; c < kernel.cols(); ++c)
    for (std::size_t i = 0; i < s; ++i) rel(c, i) = kernel(i, c);
  return FinAbelianGroup::from_relations(rel).invariant_factors();
}

std::vector<std::int64_t> Subgroup::quotient_invariant_factors() const {
  const auto& g = *parent_;
  const std::size_t r = g.rank();
  if (r == 0) return {};
  IntMatrix rel(r + generators_.size(), r);
  for (std::size_t k = 0; k < r; ++k) rel(k, k) = g.invariant_factors()[k];
  for (std::size_t i = 0; i < generators_.size(); ++i)
    for (std::size_t k = 0; k < r; ++k) rel(r + i, k) = generators_[i].coords[k];
  return FinAbelianGroup::from_relations(rel).invariant_factors();
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

struct IndexedGroup {
  const FinAbelianGroup& g;
  std::vector<GroupElement> elems;

  explicit IndexedGroup(const FinAbelianGroup& group)
      : g(group), elems(group.elements()) {}

  std::int64_t add(std::int64_t a, std::int64_t b) const {
    return g.index_of(g.add(elems[a], elems[b]));
  }
};

struct Candidate {
  std::vector<std::int64_t> gens;
  std::vector<std::int64_t> members;  // sorted
};

}  // namespace

std::vector<Subgroup> subgroups(const FinAbelianGroup& group, std::int64_t limit) {
  if (group.order() > limit)
    throw Error(ErrorCode::GroupTooLarge,
                "group order " + std::to_string(group.order()) +
                    " exceeds limit " + std::to_string(limit));
  const IndexedGroup ig(group);
  const std::int64_t n = group.order();

  // Cyclic subgroups: each is discovered once, from its first generator in
  // index order; all of its generators are then marked.
  std::vector<Candidate> cyclic;
  std::vector<char> generator_seen(n, 0);
  for (std::int64_t x = 0; x < n; ++x) {
    if (generator_seen[x]) continue;
    std::vector<std::int64_t> multiples{0};
    for (std::int64_t cur = x; cur != 0; cur = ig.add(cur, x)) multiples.push_back(cur);
    const auto ord = static_cast<std::int64_t>(multiples.size());
    for (std::int64_t c = 1; c <= ord; ++c)
      if (std::gcd(c, ord) == 1) generator_seen[multiples[c % ord]] = 1;
    std::sort(multiples.begin(), multiples.end());
    cyclic.push_back({x == 0 ? std::vector<std::int64_t>{} : std::vector<std::int64_t>{x},
                      std::move(multiples)});
  }

  // Close under joins with cyclic subgroups.
  std::set<std::vector<std::int64_t>> known;
  std::vector<Candidate> all;
  for (const auto& c : cyclic)
    if (known.insert(c.members).second) all.push_back(c);

  std::vector<char> in_h(n, 0);
  for (std::size_t w = 0; w < all.size(); ++w) {
    const Candidate h = all[w];
    for (auto m : h.members) in_h[m] = 1;
    for (const auto& c : cyclic) {
      if (c.gens.empty() || in_h[c.gens.front()]) continue;
      // H + <x> as a union of cosets H + kx.
      const std::int64_t x = c.gens.front();
      std::vector<std::int64_t> joined = h.members;
      for (std::int64_t shift = x; !in_h[shift]; shift = ig.add(shift, x))
        for (auto m : h.members) joined.push_back(ig.add(m, shift));
      std::sort(joined.begin(), joined.end());
      if (known.insert(joined).second) {
        auto gens = h.gens;
        gens.push_back(x);
        all.push_back({std::move(gens), std::move(joined)});
      }
    }
    for (auto m : h.members) in_h[m] = 0;
  }

  std::sort(all.begin(), all.end(), [](const Candidate& a, const Candidate& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  });

  auto parent = std::make_shared<const FinAbelianGroup>(group);
  std::vector<Subgroup> out;
  out.reserve(all.size());
  for (const auto& c : all) {
    std::vector<GroupElement> gens, elems;
    for (auto i : c.gens) gens.push_back(ig.elems[i]);
    for (auto i : c.members) elems.push_back(ig.elems[i]);
    out.push_back(detail::SubgroupBuilder::make(parent, std::move(gens), std::move(elems)));
  }
  return out;
}

std::vector<Subgroup> metabolizers(const FinAbelianGroup& group, std::int64_t limit) {
  if (group.order() > limit)
    throw Error(ErrorCode::GroupTooLarge,
                "group order " + std::to_string(group.order()) +
                    " exceeds limit " + std::to_string(limit));
  const std::int64_t n = group.order();
  auto root = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(n))));
  while (root * root > n) --root;
  while ((root + 1) * (root + 1) <= n) ++root;
  if (root * root != n) return {};

  std::vector<Subgroup> out;
  for (auto& s : subgroups(group, limit)) {
    if (static_cast<std::int64_t>(s.size()) != root) continue;
    if (s.quotient_invariant_factors() == s.invariant_factors()) out.push_back(std::move(s));
  }
  return out;
}

bool is_coset(std::span<const GroupElement> set, const Subgroup& t) {
  if (set.empty()) throw Error(ErrorCode::InvalidParameters, "empty set");
  const auto& g = t.parent();
  for (const auto& e : set)
    if (!g.contains(e))
      throw Error(ErrorCode::MixedParents, "element outside the subgroup's parent");
  std::vector<GroupElement> s(set.begin(), set.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (s.size() != t.size()) return false;
  std::vector<GroupElement> coset;
  coset.reserve(t.size());
  for (const auto& h : t.elements()) coset.push_back(g.add(s.front(), h));
  std::sort(coset.begin(), coset.end());
  return coset == s;
}

}  // namespace hfp
