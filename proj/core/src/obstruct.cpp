#include "hfp/obstruct.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "hfp/checked.hpp"
#include "hfp/error.hpp"

namespace hfp {

std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Obstructed: return "obstructed";
    case VerdictStatus::Unobstructed: return "unobstructed";
    case VerdictStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

VerdictStatus parse_verdict_status(const std::string& s) {
  if (s == "obstructed") return VerdictStatus::Obstructed;
  if (s == "unobstructed") return VerdictStatus::Unobstructed;
  if (s == "inconclusive") return VerdictStatus::Inconclusive;
  throw Error(ErrorCode::ParseError, "unknown verdict status '" + s + "'");
}

std::string label_string(const SpinCLabel& label) {
  if (const auto* s = std::get_if<SpinCIndex>(&label)) return s->str();
  return "s_" + std::to_string(std::get<LensSpinC>(label).i);
}

bool os_inequality(const Rational& c1sq, std::int64_t b2minus_w, const Rational& d_b,
                   std::int64_t b1_y) {
  return c1sq + Rational(b2minus_w) <= Rational(4) * d_b + Rational(2 * b1_y);
}

Rational d_bottom_reversed(const DoublePlumbing& p, const SpinCIndex& s) {
  const Rational top = d_top(p, s);
  const Rational bottom = d_bottom(p, s);
  if (top - bottom != Rational(1))
    throw std::logic_error("tower bottoms must differ by one");
  return -top;
}

namespace {

// Generic coset search: `value_ok[idx]` marks group elements whose Spin^c
// structure carries the forced correction term.
template <typename ViolationFor>
ObstructionVerdict coset_verdict(const FinAbelianGroup& group,
                                 const std::vector<SpinCLabel>& label_of,
                                 const std::vector<char>& value_ok, std::int64_t limit,
                                 ViolationFor violation_for) {
  ObstructionVerdict v;
  v.reason = "coset_test";
  const auto mets = metabolizers(group, limit);
  if (mets.empty()) {
    v.status = VerdictStatus::Obstructed;
    v.reason = "no_metabolizer";
    return v;
  }
  std::vector<std::int64_t> seen_violation;
  for (const auto& tau : mets) {
    std::vector<char> covered(static_cast<std::size_t>(group.order()), 0);
    for (std::int64_t rep = 0; rep < group.order(); ++rep) {
      if (covered[rep]) continue;
      const GroupElement x = group.element_at(rep);
      std::vector<std::int64_t> members;
      for (const auto& h : tau.elements()) members.push_back(group.index_of(group.add(x, h)));
      std::sort(members.begin(), members.end());
      for (auto idx : members) covered[idx] = 1;
      auto bad = std::find_if(members.begin(), members.end(),
                              [&](std::int64_t idx) { return !value_ok[idx]; });
      if (bad == members.end()) {
        CosetWitness w{tau.elements(), x, {}};
        for (auto idx : members) w.coset.push_back(label_of[idx]);
        v.status = VerdictStatus::Unobstructed;
        v.witness = std::move(w);
        v.violations.clear();
        return v;
      }
      if (std::find(seen_violation.begin(), seen_violation.end(), *bad) == seen_violation.end()) {
        seen_violation.push_back(*bad);
        v.violations.push_back(violation_for(*bad));
      }
    }
  }
  v.status = VerdictStatus::Obstructed;
  return v;
}

// The equality forced by a trivial complement form is two inequalities with
// c1^2 = 0; report whichever orientation fails.
Violation equality_violation(SpinCLabel label, const Rational& bound_plus,
                             const Rational& bound_minus) {
  Violation viol{std::move(label), Rational(0), bound_plus, "+"};
  if (bound_minus < bound_plus) {
    viol.bound = bound_minus;
    viol.orientation = "-";
  }
  return viol;
}

}  // namespace

ObstructionVerdict obstruct_double_b2minus0(std::int64_t m, std::int64_t n,
                                            std::int64_t limit) {
  const DoublePlumbing p(m, n);
  const FinAbelianGroup torsion = p.torsion_group();
  const std::size_t order = static_cast<std::size_t>(torsion.order());
  if (torsion.order() > limit)
    throw Error(ErrorCode::GroupTooLarge, "torsion order " + std::to_string(torsion.order()) +
                                              " exceeds limit " + std::to_string(limit));

  std::vector<SpinCLabel> label_of(order, SpinCIndex{SpinCKind::Interior, 0, 0});
  std::vector<char> assigned(order, 0);
  std::vector<char> value_ok(order, 0);
  std::vector<Rational> d_plus(order), d_minus(order);
  const Rational forced(-1, 2);
  for (const auto& s : spinc_enumerate(p)) {
    const auto idx = torsion.index_of(spinc_to_group_element(p, s, torsion));
    if (assigned[idx]) throw std::logic_error("Spin^c labelling is not injective");
    assigned[idx] = 1;
    label_of[idx] = s;
    d_plus[idx] = d_bottom(p, s);
    d_minus[idx] = d_bottom_reversed(p, s);
    value_ok[idx] = d_plus[idx] == forced;
  }
  // b1(Y) = 1, b2^-(W) = 0, c1^2 = 0 on both orientations.
  return coset_verdict(torsion, label_of, value_ok, limit, [&](std::int64_t idx) {
    return equality_violation(label_of[idx], Rational(4) * d_plus[idx] + Rational(2),
                              Rational(4) * d_minus[idx] + Rational(2));
  });
}

ObstructionVerdict obstruct_single_lens(std::int64_t m, std::int64_t n, std::int64_t limit) {
  if (m < 1 || n < 1)
    throw Error(ErrorCode::InvalidParameters, "single plumbing needs m, n >= 1");
  const std::int64_t p = checked::sub(checked::mul(m, n), 1);
  if (p < 1) throw Error(ErrorCode::InvalidParameters, "single plumbing needs mn - 1 >= 1");
  const LensSpace lens(p, n);
  const FinAbelianGroup group =
      p == 1 ? FinAbelianGroup::from_invariant_factors({})
             : FinAbelianGroup::from_invariant_factors({p});
  if (group.order() > limit)
    throw Error(ErrorCode::GroupTooLarge, "group order " + std::to_string(group.order()) +
                                              " exceeds limit " + std::to_string(limit));
  std::vector<SpinCLabel> label_of;
  std::vector<char> value_ok;
  std::vector<Rational> d;
  for (std::int64_t i = 0; i < p; ++i) {
    label_of.push_back(LensSpinC{i});
    d.push_back(d_lens(lens, i));
    value_ok.push_back(d.back() == Rational(0));
  }
  // b1 = 0, b2^-(V) = 0: c1^2 = 0 <= 4 d on both orientations.
  return coset_verdict(group, label_of, value_ok, limit, [&](std::int64_t idx) {
    return equality_violation(label_of[idx], Rational(4) * d[idx], Rational(-4) * d[idx]);
  });
}

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw std::logic_error(what);
}

FamilyReport finish_family(FamilyReport r) {
  r.verdict.reason = "inequality";
  r.verdict.status = VerdictStatus::Unobstructed;
  for (const auto& pt : r.points) {
    if (!pt.pipeline_holds) {
      r.verdict.status = VerdictStatus::Obstructed;
      r.verdict.violations.push_back({pt.spinc, pt.c1sq, pt.bound, "-"});
    }
    if (!pt.reduced_holds) r.reduced_violations.push_back(pt.spinc);
    if (pt.pipeline_holds != pt.reduced_holds) r.route_mismatches.push_back(pt.spinc);
  }
  r.min_geometric_intersections =
      r.algebraic_intersection + (r.verdict.status == VerdictStatus::Obstructed ? 2 : 0);
  return r;
}

FamilyReport family_setup(const GramMatrix& x, HomClass alpha, HomClass beta) {
  FamilyReport r;
  r.classes = {std::move(alpha), std::move(beta)};
  r.m = pairing(x, r.classes[0], r.classes[0]);
  r.n = pairing(x, r.classes[1], r.classes[1]);
  r.algebraic_intersection = pairing(x, r.classes[0], r.classes[1]);
  auto comp = orthogonal_complement(x, r.classes);
  r.complement_basis = comp.basis;
  r.complement_gram = comp.gram.entries();
  const auto in = comp.gram.inertia();
  r.b2minus = static_cast<std::int64_t>(in.negative);
  require(in.positive == 0, "complement form must be negative semidefinite");
  return r;
}

}  // namespace

FamilyReport family_s2s2_double(std::int64_t a, std::int64_t t) {
  if (a < 1 || a % 2 == 0)
    throw Error(ErrorCode::InvalidParameters, "a must be an odd integer >= 1");
  if (t < 2) throw Error(ErrorCode::InvalidParameters, "t must be >= 2");
  const GramMatrix x = GramMatrix::hyperbolic(2);
  FamilyReport r = family_setup(x, {a, 2, 0, 0}, {1, 0, t, 1});
  r.b1 = 1;
  const DoublePlumbing p(r.m, r.n);
  require(r.m == 4 * a && r.n == 2 * t && r.algebraic_intersection == 2,
          "unexpected squares for the double family");
  const GramMatrix qw(r.complement_gram);

  for (std::int64_t i = 1; i <= r.m - 1; i += 2) {
    for (std::int64_t j = 1; j <= r.n - 1; ++j) {
      // c1(u_{i,j}) on e_1..e_4.
      const HomClass c{-2, checked::sub(i, a), -2, checked::add(checked::mul(2, j), 2)};
      require(is_characteristic(x, c), "u_{i,j} must be characteristic");
      const auto on_n = evaluate_on(c, r.classes);
      require(on_n[0] == 2 * i - r.m && on_n[1] == 2 * j - r.n,
              "u_{i,j} must restrict to t_{i,j}");
      FamilyPoint pt{SpinCIndex{SpinCKind::Interior, i, j}, evaluate_on(c, r.complement_basis),
                     Rational(0), Rational(0), Rational(0), false, false};
      pt.c1sq = c1_squared(qw, pt.c1_on_complement);
      pt.d_b = d_bottom_reversed(p, canonical_spinc(p, i, j));
      pt.bound = Rational(4) * pt.d_b + Rational(2 * r.b1 - r.b2minus);
      pt.pipeline_holds = os_inequality(pt.c1sq, r.b2minus, pt.d_b, r.b1);
      pt.reduced_holds = i + 2 * j + 1 >= a;
      r.points.push_back(std::move(pt));
    }
  }
  return finish_family(std::move(r));
}

FamilyReport family_s2s2_single(std::int64_t k) {
  if (k < 1) throw Error(ErrorCode::InvalidParameters, "k must be >= 1");
  const GramMatrix x = GramMatrix::hyperbolic(2);
  const std::int64_t two_k = checked::mul(2, k);
  FamilyReport r = family_setup(x, {checked::add(two_k, 1), 2, 0, 0},
                                {checked::neg(k), 1, two_k, 1});
  r.b1 = 0;
  require(r.m == 4 * (2 * k + 1) && r.n == 2 * k && r.algebraic_intersection == 1,
          "unexpected squares for the single family");
  const GramMatrix qv(r.complement_gram);
  const std::int64_t p = checked::sub(checked::mul(r.m, r.n), 1);
  const LensSpace lens(p, r.n);

  for (std::int64_t i = 0; i < r.n - 1; ++i) {
    // c1(t_i) on e_1..e_4.
    const HomClass c{0, checked::mul(2, checked::add(two_k, 1)), -2,
                     checked::mul(2, k - i - 1)};
    require(is_characteristic(x, c), "t_i must be characteristic");
    const auto on_m = evaluate_on(c, r.classes);
    require(on_m[0] == r.m && on_m[1] == r.n - 2 * i, "t_i must restrict to s_i");
    FamilyPoint pt{LensSpinC{i}, evaluate_on(c, r.complement_basis), Rational(0), Rational(0),
                   Rational(0), false, false};
    pt.c1sq = c1_squared(qv, pt.c1_on_complement);
    // The complement's boundary is -L(mn-1, n).
    pt.d_b = d_neg_lens(lens, i);
    const Rational closed = r.n > 2 ? d_lens_closed_general(r.m, r.n, i)
                                    : d_lens_closed_n2(r.m, i);
    require(closed == pt.d_b, "closed form disagrees with the recursion");
    pt.bound = Rational(4) * pt.d_b + Rational(2 * r.b1 - r.b2minus);
    pt.pipeline_holds = os_inequality(pt.c1sq, r.b2minus, pt.d_b, r.b1);
    pt.reduced_holds = checked::mul(p, k - i - 1) >= 0;
    r.points.push_back(std::move(pt));
  }
  return finish_family(std::move(r));
}

Cp2Report cp2_case_report(std::int64_t limit) {
  const GramMatrix x = GramMatrix::identity(2);
  Cp2Report report;

  auto add_double = [&](std::string name, HomClass alpha, HomClass beta) {
    Cp2Case c;
    c.name = std::move(name);
    c.alpha = std::move(alpha);
    c.beta = std::move(beta);
    c.m = pairing(x, c.alpha, c.alpha);
    c.n = pairing(x, c.beta, c.beta);
    c.algebraic_intersection = pairing(x, c.alpha, c.beta);
    c.double_table = correction_table(DoublePlumbing(c.m, c.n));
    c.verdict = obstruct_double_b2minus0(c.m, c.n, limit);
    c.min_geometric_intersections =
        c.algebraic_intersection + (c.verdict.status == VerdictStatus::Obstructed ? 2 : 0);
    report.cases.push_back(std::move(c));
  };
  add_double("double (2,2),(2,-1)", {2, 2}, {2, -1});
  add_double("double (2,0),(1,2)", {2, 0}, {1, 2});

  Cp2Case single;
  single.name = "single (2,1),(1,-1)";
  single.alpha = {2, 1};
  single.beta = {1, -1};
  single.m = pairing(x, single.alpha, single.alpha);
  single.n = pairing(x, single.beta, single.beta);
  single.algebraic_intersection = pairing(x, single.alpha, single.beta);
  const LensSpace lens(single.m * single.n - 1, single.n);
  single.lens_p = lens.p();
  single.lens_q = lens.q();
  single.lens_table = d_lens_table(lens, Orientation::Positive);
  single.verdict = obstruct_single_lens(single.m, single.n, limit);
  single.min_geometric_intersections =
      single.algebraic_intersection +
      (single.verdict.status == VerdictStatus::Obstructed ? 2 : 0);
  report.cases.push_back(std::move(single));
  return report;
}

}  // namespace hfp
