#include <gtest/gtest.h>

#include <set>

#include "hfp/error.hpp"
#include "hfp/obstruct.hpp"

using hfp::LensSpinC;
using hfp::Rational;
using hfp::SpinCIndex;
using hfp::SpinCKind;
using hfp::SpinCLabel;
using hfp::VerdictStatus;

namespace {

SpinCLabel interior(std::int64_t i, std::int64_t j) {
  return SpinCIndex{SpinCKind::Interior, i, j};
}

std::set<SpinCLabel> as_set(const std::vector<SpinCLabel>& v) { return {v.begin(), v.end()}; }

std::set<SpinCLabel> violation_labels(const hfp::ObstructionVerdict& v) {
  std::set<SpinCLabel> out;
  for (const auto& x : v.violations) out.insert(x.spinc);
  return out;
}

std::set<SpinCLabel> labels_with_db(std::int64_t m, std::int64_t n, const Rational& value) {
  const hfp::DoublePlumbing p(m, n);
  std::set<SpinCLabel> out;
  for (const auto& row : hfp::correction_table(p))
    if (row.d_b == value) out.insert(row.spinc);
  return out;
}

}  // namespace

TEST(Inequality, Basics) {
  EXPECT_TRUE(hfp::os_inequality(Rational(-2), 2, Rational(-1, 2), 1));
  EXPECT_FALSE(hfp::os_inequality(Rational(1), 2, Rational(-1, 2), 1));
  const hfp::DoublePlumbing p(8, 5);
  for (const auto& s : hfp::spinc_enumerate(p))
    EXPECT_EQ(hfp::d_bottom_reversed(p, s), -hfp::d_top(p, s));
}

TEST(ObstructDouble, Y85IsObstructed) {
  const auto v = hfp::obstruct_double_b2minus0(8, 5);
  EXPECT_EQ(v.status, VerdictStatus::Obstructed);
  EXPECT_FALSE(v.witness.has_value());
  // Only four structures carry d_b = -1/2, one short of any metabolizer.
  EXPECT_EQ(labels_with_db(8, 5, Rational(-1, 2)).size(), 4u);
  const auto mets = hfp::metabolizers(hfp::DoublePlumbing(8, 5).torsion_group());
  ASSERT_EQ(mets.size(), 1u);
  EXPECT_EQ(mets[0].size(), 6u);
  // One violation per coset, each a genuine failure of the inequality.
  EXPECT_EQ(v.violations.size(), 6u);
  for (const auto& x : v.violations) EXPECT_GT(x.c1sq, x.bound);
}

TEST(ObstructDouble, Y45HasWitness) {
  const auto v = hfp::obstruct_double_b2minus0(4, 5);
  EXPECT_EQ(v.status, VerdictStatus::Unobstructed);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_TRUE(v.violations.empty());
  EXPECT_EQ(as_set(v.witness->coset), labels_with_db(4, 5, Rational(-1, 2)));
  EXPECT_EQ(as_set(v.witness->coset),
            (std::set<SpinCLabel>{interior(1, 1), interior(1, 3), interior(3, 2), interior(3, 4)}));
  EXPECT_EQ(v.witness->metabolizer.size(), 4u);
}

TEST(ObstructDouble, WitnessIsACoset) {
  for (std::int64_t m = 4; m <= 12; ++m)
    for (std::int64_t n = 4; n <= 12; ++n) {
      const auto v = hfp::obstruct_double_b2minus0(m, n);
      if (!v.witness) continue;
      const hfp::DoublePlumbing p(m, n);
      const auto g = std::make_shared<const hfp::FinAbelianGroup>(p.torsion_group());
      const hfp::Subgroup t(g, v.witness->metabolizer);
      std::vector<hfp::GroupElement> elems;
      for (const auto& s : v.witness->coset) {
        const auto& idx = std::get<SpinCIndex>(s);
        EXPECT_EQ(hfp::d_bottom(p, idx), Rational(-1, 2));
        elems.push_back(hfp::spinc_to_group_element(p, idx, *g));
      }
      EXPECT_TRUE(hfp::is_coset(elems, t));
    }
}

TEST(ObstructDouble, NoMetabolizerWhenOrderNotSquare) {
  // |T| = 4*6 - 4 = 20 is not a square.
  const auto v = hfp::obstruct_double_b2minus0(4, 6);
  EXPECT_EQ(v.status, VerdictStatus::Obstructed);
  EXPECT_EQ(v.reason, "no_metabolizer");
  EXPECT_TRUE(v.violations.empty());
}

TEST(ObstructDouble, SwapSymmetry) {
  for (std::int64_t m = 4; m <= 14; ++m)
    for (std::int64_t n = m; n <= 14; ++n)
      EXPECT_EQ(hfp::obstruct_double_b2minus0(m, n).status,
                hfp::obstruct_double_b2minus0(n, m).status)
          << m << ',' << n;
}

TEST(ObstructDouble, LimitAndValidation) {
  try {
    hfp::obstruct_double_b2minus0(8, 5, 10);
    FAIL();
  } catch (const hfp::Error& e) {
    EXPECT_EQ(e.code(), hfp::ErrorCode::GroupTooLarge);
  }
  try {
    hfp::obstruct_double_b2minus0(3, 5);
    FAIL();
  } catch (const hfp::Error& e) {
    EXPECT_EQ(e.code(), hfp::ErrorCode::InvalidParameters);
  }
}

TEST(ObstructSingle, L92) {
  const auto v = hfp::obstruct_single_lens(2, 5);
  EXPECT_EQ(v.status, VerdictStatus::Unobstructed);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(as_set(v.witness->coset),
            (std::set<SpinCLabel>{LensSpinC{2}, LensSpinC{5}, LensSpinC{8}}));
  EXPECT_EQ(v.witness->metabolizer,
            (std::vector<hfp::GroupElement>{{{0}}, {{3}}, {{6}}}));
}

TEST(ObstructSingle, SmallCases) {
  // L(1,1) is the sphere: trivially unobstructed.
  EXPECT_EQ(hfp::obstruct_single_lens(2, 1).status, VerdictStatus::Unobstructed);
  // |H_1| = 5 is not a square.
  EXPECT_EQ(hfp::obstruct_single_lens(2, 3).status, VerdictStatus::Obstructed);
  try {
    hfp::obstruct_single_lens(0, 3);
    FAIL();
  } catch (const hfp::Error& e) {
    EXPECT_EQ(e.code(), hfp::ErrorCode::InvalidParameters);
  }
}

TEST(FamilyDouble, SmallAHasNoViolation) {
  for (std::int64_t a : {1, 3})
    for (std::int64_t t = 2; t <= 6; ++t) {
      const auto r = hfp::family_s2s2_double(a, t);
      EXPECT_EQ(r.verdict.status, VerdictStatus::Unobstructed) << a << ',' << t;
      EXPECT_TRUE(r.reduced_violations.empty());
      EXPECT_TRUE(r.routes_agree());
      EXPECT_EQ(r.min_geometric_intersections, 2);
    }
}

TEST(FamilyDouble, PipelineMatchesDisplayedC1Squared) {
  for (std::int64_t a : {1, 3, 5, 7})
    for (std::int64_t t : {2, 3}) {
      const auto r = hfp::family_s2s2_double(a, t);
      const std::int64_t m = r.m, n = r.n;
      EXPECT_EQ(m, 4 * a);
      EXPECT_EQ(n, 2 * t);
      EXPECT_EQ(r.b2minus, 2);
      EXPECT_EQ(r.b1, 1);
      EXPECT_EQ(r.complement_gram.determinant(), m * n - 4);
      for (const auto& pt : r.points) {
        const auto& s = std::get<SpinCIndex>(pt.spinc);
        const std::int64_t x = 2 * s.i + 4, y = n + 2 * s.j + 2;
        EXPECT_EQ(pt.c1sq, Rational(-(n * x * x + m * y * y - 4 * x * y), m * n - 4));
        const hfp::DoublePlumbing p(m, n);
        EXPECT_EQ(pt.d_b, -hfp::d_top(p, hfp::canonical_spinc(p, s.i, s.j)));
      }
    }
}

TEST(FamilyDouble, ExactSlack) {
  // c1^2 + 2 <= 4 d_b(-Y) + 2 has slack 4(i + 2j + 2 - a) in every case.
  for (std::int64_t a = 1; a <= 11; a += 2)
    for (std::int64_t t = 2; t <= 5; ++t)
      for (const auto& pt : hfp::family_s2s2_double(a, t).points) {
        const auto& s = std::get<SpinCIndex>(pt.spinc);
        EXPECT_EQ(pt.bound - pt.c1sq, Rational(4 * (s.i + 2 * s.j + 2 - a)));
        EXPECT_EQ(pt.pipeline_holds, s.i + 2 * s.j + 2 >= a);
        EXPECT_EQ(pt.reduced_holds, s.i + 2 * s.j + 1 >= a);
      }
}

TEST(FamilyDouble, SevenThree) {
  const auto r = hfp::family_s2s2_double(7, 3);
  EXPECT_EQ(r.verdict.status, VerdictStatus::Obstructed);
  EXPECT_EQ(violation_labels(r.verdict), (std::set<SpinCLabel>{interior(1, 1)}));
  EXPECT_EQ(as_set(r.reduced_violations),
            (std::set<SpinCLabel>{interior(1, 1), interior(3, 1), interior(1, 2)}));
  EXPECT_EQ(r.min_geometric_intersections, 4);
}

TEST(FamilyDouble, Validation) {
  for (auto [a, t] : {std::pair{2, 2}, std::pair{-1, 2}, std::pair{3, 1}}) {
    try {
      hfp::family_s2s2_double(a, t);
      FAIL();
    } catch (const hfp::Error& e) {
      EXPECT_EQ(e.code(), hfp::ErrorCode::InvalidParameters);
    }
  }
}

TEST(FamilySingle, Verdicts) {
  const auto k1 = hfp::family_s2s2_single(1);
  EXPECT_EQ(k1.verdict.status, VerdictStatus::Unobstructed);
  const auto k2 = hfp::family_s2s2_single(2);
  EXPECT_EQ(k2.verdict.status, VerdictStatus::Obstructed);
  EXPECT_EQ(violation_labels(k2.verdict), (std::set<SpinCLabel>{LensSpinC{2}}));
  EXPECT_EQ(k2.min_geometric_intersections, 3);
  const auto k4 = hfp::family_s2s2_single(4);
  EXPECT_EQ(violation_labels(k4.verdict),
            (std::set<SpinCLabel>{LensSpinC{4}, LensSpinC{5}, LensSpinC{6}}));
}

TEST(FamilySingle, PipelineMatchesDisplayedForms) {
  for (std::int64_t k = 1; k <= 8; ++k) {
    const auto r = hfp::family_s2s2_single(k);
    const std::int64_t m = r.m, n = r.n;
    EXPECT_EQ(m, 4 * (2 * k + 1));
    EXPECT_EQ(n, 2 * k);
    EXPECT_EQ(r.b1, 0);
    EXPECT_EQ(r.complement_gram.determinant(), m * n - 1);
    EXPECT_TRUE(r.routes_agree());
    for (const auto& pt : r.points) {
      const std::int64_t i = std::get<LensSpinC>(pt.spinc).i;
      const std::int64_t w = 3 * n - 2 * i - 2;
      EXPECT_EQ(pt.c1sq, Rational(-(8 * n + m * w * w + 2 * (m - 2) * w), m * n - 1));
      EXPECT_EQ(pt.bound - pt.c1sq, Rational(-8 * (i - k + 1)));
      EXPECT_EQ(pt.reduced_holds, k - i - 1 >= 0);
    }
  }
}

TEST(Cp2Report, ThreeCases) {
  const auto report = hfp::cp2_case_report();
  ASSERT_EQ(report.cases.size(), 3u);
  const auto& c1 = report.cases[0];
  EXPECT_EQ(c1.m, 8);
  EXPECT_EQ(c1.n, 5);
  EXPECT_EQ(c1.verdict.status, VerdictStatus::Obstructed);
  EXPECT_EQ(c1.min_geometric_intersections, 4);
  EXPECT_EQ(c1.double_table.size(), 36u);
  const auto& c2 = report.cases[1];
  EXPECT_EQ(c2.m, 4);
  EXPECT_EQ(c2.n, 5);
  EXPECT_EQ(c2.verdict.status, VerdictStatus::Unobstructed);
  EXPECT_EQ(c2.min_geometric_intersections, 2);
  const auto& c3 = report.cases[2];
  EXPECT_EQ(c3.lens_p, 9);
  EXPECT_EQ(c3.lens_q, 2);
  EXPECT_EQ(c3.lens_table.size(), 9u);
  EXPECT_EQ(c3.verdict.status, VerdictStatus::Unobstructed);
  EXPECT_EQ(c3.min_geometric_intersections, 1);
}
