#include "hfp/plumbing_double.hpp"

#include <array>

#include "hfp/checked.hpp"
#include "hfp/error.hpp"

namespace hfp {

using checked::add;
using checked::mul;
using checked::sub;

DoublePlumbing::DoublePlumbing(std::int64_t m, std::int64_t n) : m_(m), n_(n) {
  if (m < 4 || n < 4)
    throw Error(ErrorCode::InvalidParameters,
                "double plumbing requires m, n >= 4 (got m=" + std::to_string(m) +
                    ", n=" + std::to_string(n) + ")");
  (void)mul(m, n);  // overflow guard for mn - 4
}

IntMatrix DoublePlumbing::relation_matrix() const { return IntMatrix{{m_, 2}, {2, n_}}; }

FinAbelianGroup DoublePlumbing::torsion_group() const {
  return FinAbelianGroup::from_relations(relation_matrix());
}

std::string_view to_string(SpinCKind kind) {
  switch (kind) {
    case SpinCKind::Interior: return "interior";
    case SpinCKind::IAxis: return "i_axis";
    case SpinCKind::JAxis: return "j_axis";
  }
  return "?";
}

SpinCKind parse_spinc_kind(std::string_view text) {
  if (text == "interior") return SpinCKind::Interior;
  if (text == "i_axis") return SpinCKind::IAxis;
  if (text == "j_axis") return SpinCKind::JAxis;
  throw Error(ErrorCode::ParseError, "unknown Spin^c kind '" + std::string(text) + "'");
}

std::string SpinCIndex::str() const {
  return "s_{" + std::to_string(i) + "," + std::to_string(j) + "}";
}

SpinCIndex canonical_spinc(const DoublePlumbing& p, std::int64_t i, std::int64_t j) {
  const auto m = p.m(), n = p.n();
  if (i >= 1 && i <= m - 1 && j >= 1 && j <= n - 1) {
    if (i == m - 1 && j == 1) return {SpinCKind::Interior, 1, n - 1};
    return {SpinCKind::Interior, i, j};
  }
  if (j == 0 && i >= 0 && i <= m - 2) return {SpinCKind::IAxis, i, 0};
  if (i == 0 && j >= 0 && j <= n - 2) {
    if (j == 0) return {SpinCKind::IAxis, 0, 0};
    if (j == n - 2) return {SpinCKind::IAxis, m - 2, 0};
    return {SpinCKind::JAxis, 0, j};
  }
  throw Error(ErrorCode::IndexOutOfRange, "no Spin^c label s_{" + std::to_string(i) + "," +
                                              std::to_string(j) + "} for Y_{" +
                                              std::to_string(m) + "," + std::to_string(n) + "}");
}

bool is_canonical(const DoublePlumbing& p, const SpinCIndex& s) {
  try {
    return canonical_spinc(p, s.i, s.j) == s;
  } catch (const Error&) {
    return false;
  }
}

namespace {

void require_canonical(const DoublePlumbing& p, const SpinCIndex& s) {
  if (!is_canonical(p, s))
    throw Error(ErrorCode::NonCanonicalIndex,
                s.str() + " (" + std::string(to_string(s.kind)) +
                    ") is not a canonical label for Y_{" + std::to_string(p.m()) + "," +
                    std::to_string(p.n()) + "}");
}

}  // namespace

std::vector<SpinCIndex> spinc_enumerate(const DoublePlumbing& p) {
  const auto m = p.m(), n = p.n();
  std::vector<SpinCIndex> out;
  out.reserve(static_cast<std::size_t>(p.torsion_order()));
  for (std::int64_t i = 1; i <= m - 1; ++i)
    for (std::int64_t j = 1; j <= n - 1; ++j)
      if (!(i == m - 1 && j == 1)) out.push_back({SpinCKind::Interior, i, j});
  for (std::int64_t i = 0; i <= m - 2; ++i) out.push_back({SpinCKind::IAxis, i, 0});
  for (std::int64_t j = 1; j <= n - 3; ++j) out.push_back({SpinCKind::JAxis, 0, j});
  return out;
}

Rational d_interior(const DoublePlumbing& p, std::int64_t i, std::int64_t j) {
  const auto m = p.m(), n = p.n();
  if (i < 1 || i > m - 1 || j < 1 || j > n - 1)
    throw Error(ErrorCode::IndexOutOfRange, "d(i,j) needs 1 <= i <= m-1, 1 <= j <= n-1");
  // m^2 n + m n^2 - 4mn(i+j+1) + 4n(i^2+2i) + 4m(j^2+2j) - 16ij
  std::int64_t num = add(mul(mul(m, m), n), mul(m, mul(n, n)));
  num = sub(num, mul(mul(4, mul(m, n)), add(add(i, j), 1)));
  num = add(num, mul(mul(4, n), add(mul(i, i), mul(2, i))));
  num = add(num, mul(mul(4, m), add(mul(j, j), mul(2, j))));
  num = sub(num, mul(16, mul(i, j)));
  return Rational(num, mul(4, p.torsion_order()));
}

Rational d_one(const DoublePlumbing& p, std::int64_t t, std::int64_t i) {
  const auto m = p.m(), n = p.n();
  if (t != m && t != n)
    throw Error(ErrorCode::IndexOutOfRange, "d_1(t,i) needs t in {m, n}");
  if (i < 1) throw Error(ErrorCode::IndexOutOfRange, "d_1(t,i) needs i >= 1");
  // m^2 n + m n^2 - 4mn i + 4t i^2 - 4t
  std::int64_t num = add(mul(mul(m, m), n), mul(m, mul(n, n)));
  num = sub(num, mul(mul(4, mul(m, n)), i));
  num = add(num, mul(mul(4, t), mul(i, i)));
  num = sub(num, mul(4, t));
  return Rational(num, mul(4, p.torsion_order()));
}

Rational d_top(const DoublePlumbing& p, const SpinCIndex& s) {
  require_canonical(p, s);
  switch (s.kind) {
    case SpinCKind::Interior: return d_interior(p, s.i, s.j);
    case SpinCKind::JAxis: return d_one(p, p.m(), s.j + 1);
    case SpinCKind::IAxis: return d_one(p, p.n(), s.i + 1);
  }
  return {};
}

Rational d_bottom(const DoublePlumbing& p, const SpinCIndex& s) {
  return d_top(p, s) - Rational(1);
}

GroupElement spinc_to_group_element(const DoublePlumbing& p, const SpinCIndex& s,
                                    const FinAbelianGroup& torsion) {
  require_canonical(p, s);
  if (torsion.presentation_generators() != 2 || torsion.order() != p.torsion_order())
    throw Error(ErrorCode::InvalidParameters,
                "torsion group was not built from [[m,2],[2,n]]");
  const std::array<std::int64_t, 2> coeffs{checked::neg(s.i), checked::neg(s.j)};
  return torsion.element_of(coeffs);
}

HFPlusShape hf_shape(const DoublePlumbing& p, const SpinCIndex& s) {
  HFPlusShape shape{d_top(p, s), d_bottom(p, s), std::nullopt};
  if (s.kind == SpinCKind::Interior && s.i == 1 && s.j == p.n() - 1)
    shape.extra_summand_grading = shape.lower_tower_bottom;
  return shape;
}

std::vector<DoubleTableRow> correction_table(const DoublePlumbing& p) {
  std::vector<DoubleTableRow> rows;
  for (const auto& s : spinc_enumerate(p)) {
    auto shape = hf_shape(p, s);
    rows.push_back({s, shape.lower_tower_bottom, shape.upper_tower_bottom,
                    shape.extra_summand_grading.has_value()});
  }
  return rows;
}

}  // namespace hfp
