// Acceptance suite: one PASS/FAIL line per criterion.
//
// Usage: acceptance [--expect-fail N]...
// Exit status is 0 when exactly the criteria named by --expect-fail fail,
// so a documented deviation neither hides a new regression nor survives
// being fixed unnoticed.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "golden_tables.hpp"
#include "hfp/abelian.hpp"
#include "hfp/lens.hpp"
#include "hfp/normal_form.hpp"
#include "hfp/obstruct.hpp"
#include "hfp/plumbing_double.hpp"
#include "oracles.hpp"

using namespace hfp;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

struct Criterion {
  int id;
  const char* name;
  double time_limit_s;  // 0: untimed
  std::function<Outcome()> body;
};

std::string label(const SpinCLabel& s) { return label_string(s); }

Outcome golden_table(std::int64_t m, std::int64_t n, const std::vector<golden::Entry>& table) {
  Outcome o;
  const DoublePlumbing p(m, n);
  o.require(static_cast<std::int64_t>(table.size()) == m * n - 4, "table size");
  const auto rows = correction_table(p);
  o.require(rows.size() == table.size(), "computed table size");
  std::set<SpinCIndex> seen;
  for (const auto& [ij, value] : table) {
    const SpinCIndex s = canonical_spinc(p, ij.first, ij.second);
    seen.insert(s);
    const Rational got = d_bottom(p, s);
    o.require(got == Rational::parse(value), s.str() + " = " + got.str() + ", expected " + value);
  }
  o.require(seen.size() == table.size(), "table labels not distinct");
  return o;
}

Outcome criterion_lens() {
  Outcome o;
  const std::vector<std::string> expected{"8/9", "8/9", "0", "2/9", "-4/9", "0", "-4/9", "2/9", "0"};
  const auto got = d_lens_table(LensSpace(9, 2), Orientation::Positive);
  o.require(got.size() == 9, "nine values");
  for (std::size_t i = 0; i < got.size() && i < expected.size(); ++i)
    o.require(got[i] == Rational::parse(expected[i]),
              "i=" + std::to_string(i) + ": " + got[i].str() + " vs " + expected[i]);
  return o;
}

Outcome criterion_closed_forms() {
  Outcome o;
  std::size_t checked = 0;
  for (std::int64_t m = 2; m <= 20; ++m)
    for (std::int64_t i = 0; i < m - 1; ++i, ++checked)
      o.require(d_lens_closed_n1(m, i) == d_neg_lens(LensSpace(m - 1, 1), i),
                "n=1 form at m=" + std::to_string(m) + ", i=" + std::to_string(i));
  for (std::int64_t m = 1; m <= 15; ++m)
    for (std::int64_t i = 0; i < 2 * m - 1; ++i, ++checked)
      o.require(d_lens_closed_n2(m, i) == d_neg_lens(LensSpace(2 * m - 1, 2), i),
                "n=2 form at m=" + std::to_string(m) + ", i=" + std::to_string(i));
  for (std::int64_t m = 4; m <= 10; ++m)
    for (std::int64_t n = 3; n <= 8; ++n)
      for (std::int64_t i = 0; i < n - 1; ++i, ++checked)
        o.require(d_lens_closed_general(m, n, i) == d_neg_lens(LensSpace(m * n - 1, n), i),
                  "general form at (" + std::to_string(m) + "," + std::to_string(n) + "," +
                      std::to_string(i) + ")");
  if (o.pass) o.detail = std::to_string(checked) + " indices";
  return o;
}

std::set<SpinCLabel> labels_of(const ObstructionVerdict& v) {
  std::set<SpinCLabel> out;
  for (const auto& x : v.violations) out.insert(x.spinc);
  return out;
}

std::string list(const std::set<SpinCLabel>& s) {
  std::string out = "{";
  for (const auto& x : s) out += (out.size() > 1 ? ", " : "") + label(x);
  return out + "}";
}

Outcome criterion_verdicts() {
  Outcome o;
  {
    const auto v = obstruct_double_b2minus0(8, 5);
    std::size_t forced = 0;
    for (const auto& row : correction_table(DoublePlumbing(8, 5)))
      if (row.d_b == Rational(-1, 2)) ++forced;
    const auto mets = metabolizers(DoublePlumbing(8, 5).torsion_group());
    o.require(v.status == VerdictStatus::Obstructed, "(8,5) not obstructed");
    o.require(forced == 4, "(8,5): |S| = " + std::to_string(forced) + ", expected 4");
    o.require(mets.size() == 1 && mets[0].size() == 6, "(8,5): metabolizer order is not 6");
  }
  {
    const auto v = obstruct_double_b2minus0(4, 5);
    o.require(v.status == VerdictStatus::Unobstructed && v.witness.has_value(),
              "(4,5) not unobstructed with witness");
  }
  {
    const auto v = obstruct_single_lens(2, 5);
    const std::set<SpinCLabel> want{LensSpinC{2}, LensSpinC{5}, LensSpinC{8}};
    o.require(v.status == VerdictStatus::Unobstructed && v.witness &&
                  std::set<SpinCLabel>(v.witness->coset.begin(), v.witness->coset.end()) == want,
              "L(9,2) witness is not {2,5,8}");
  }
  {
    const auto r = family_s2s2_double(5, 2);
    const auto got = labels_of(r.verdict);
    o.require(r.verdict.status == VerdictStatus::Obstructed &&
                  got.count(SpinCIndex{SpinCKind::Interior, 1, 1}),
              "a=5,t=2: status " + to_string(r.verdict.status) + ", violations " + list(got) +
                  " (c1^2 pipeline: (1,1) holds with equality, slack 4(i+2j+2-a) = 0)");
  }
  {
    const auto r = family_s2s2_single(2);
    o.require(r.verdict.status == VerdictStatus::Obstructed &&
                  labels_of(r.verdict) == std::set<SpinCLabel>{LensSpinC{2}},
              "k=2: violations " + list(labels_of(r.verdict)));
  }
  return o;
}

Outcome criterion_properties() {
  Outcome o;
  for (std::int64_t m = 4; m <= 20; ++m)
    for (std::int64_t n = 4; n <= 20; ++n) {
      const DoublePlumbing p(m, n);
      const std::string at = "(" + std::to_string(m) + "," + std::to_string(n) + ")";
      o.require(static_cast<std::int64_t>(spinc_enumerate(p).size()) == m * n - 4,
                "Spin^c count at " + at);
      o.require(p.torsion_group().order() == m * n - 4, "group order at " + at);
      for (std::int64_t i = 1; i < m; ++i)
        for (std::int64_t j = 1; j < n; ++j)
          if (d_interior(p, i, j) != d_interior(p, m - i, n - j))
            o.require(false, "symmetry at " + at);
      for (const auto& row : correction_table(p))
        if (row.d_t - row.d_b != Rational(1)) o.require(false, "d_t - d_b at " + at);
      const Rational shared(m * n * (m + n - 4), 4 * (m * n - 4));
      o.require(d_interior(p, m - 1, 1) == d_interior(p, 1, n - 1), "d(m-1,1) at " + at);
      o.require(d_one(p, m, n - 1) == shared && d_one(p, n, m - 1) == shared,
                "d_1 identity at " + at);
      if (m > 12 || n > 12) continue;
      const std::int64_t den = 4 * (m * n - 4);
      o.require(d_top(p, canonical_spinc(p, m - 2, 0)) == shared, "s_{m-2,0} grading at " + at);
      o.require(d_top(p, canonical_spinc(p, 0, 0)) == shared, "s_{0,0} grading at " + at);
      o.require(d_top(p, canonical_spinc(p, 1, n - 1)) ==
                    Rational(m * n * (m + n - 4) - 4 * (m + n) + 16, den),
                "s_{1,n-1} grading at " + at);
      for (std::int64_t i = 1; i <= m - 1; ++i)
        o.require(d_top(p, canonical_spinc(p, i - 1, 0)) ==
                      Rational(n * (m * m + m * n - 4 * m * i + 4 * i * i - 4), den),
                  "s_{i-1,0} grading at " + at);
    }
  return o;
}

Outcome criterion_routes() {
  Outcome o;
  std::vector<std::string> bad;
  for (std::int64_t a = 1; a <= 15; a += 2)
    for (std::int64_t t = 2; t <= 6; ++t) {
      const auto r = family_s2s2_double(a, t);
      if (!r.routes_agree())
        bad.push_back("a=" + std::to_string(a) + ",t=" + std::to_string(t) + " (" +
                      std::to_string(r.route_mismatches.size()) + " points)");
    }
  for (std::int64_t k = 1; k <= 8; ++k)
    if (!family_s2s2_single(k).routes_agree()) bad.push_back("k=" + std::to_string(k));
  if (!bad.empty()) {
    o.pass = false;
    o.detail = std::to_string(bad.size()) + " of 48 families disagree, first " + bad.front() +
               "; last " + bad.back() +
               " (pipeline reduces to i+2j+2 >= a, reduced route is i+2j+1 >= a)";
  }
  return o;
}

Outcome criterion_oracles() {
  Outcome o;
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> entry(-15, 15);
  int groups = 0;
  while (groups < 150) {
    const std::int64_t a11 = entry(rng), a12 = entry(rng), a21 = entry(rng), a22 = entry(rng);
    const std::int64_t det = std::abs(a11 * a22 - a12 * a21);
    if (det == 0 || det > 200) continue;
    ++groups;
    const oracle::Quotient2 q(a11, a12, a21, a22);
    const auto g = FinAbelianGroup::from_relations(IntMatrix{{a11, a12}, {a21, a22}});
    const auto e1 = g.element_of(std::vector<std::int64_t>{1, 0});
    const auto e2 = g.element_of(std::vector<std::int64_t>{0, 1});
    auto translate = [&](const oracle::IndexSet& s) {
      std::vector<GroupElement> v;
      for (auto idx : s) {
        auto [x, y] = q.at(idx);
        v.push_back(g.add(g.scale(e1, x), g.scale(e2, y)));
      }
      std::sort(v.begin(), v.end());
      return v;
    };
    std::set<std::vector<GroupElement>> want_s, want_m, got_s, got_m;
    for (const auto& s : oracle::all_subgroups(q)) want_s.insert(translate(s));
    for (const auto& s : oracle::all_metabolizers(q)) want_m.insert(translate(s));
    for (const auto& s : subgroups(g)) got_s.insert(s.elements());
    for (const auto& s : metabolizers(g)) got_m.insert(s.elements());
    std::ostringstream at;
    at << "[[" << a11 << ',' << a12 << "],[" << a21 << ',' << a22 << "]]";
    o.require(g.order() == det, "order of " + at.str());
    o.require(got_s == want_s, "subgroups of " + at.str());
    o.require(got_m == want_m, "metabolizers of " + at.str());
  }
  std::uniform_int_distribution<int> small(-12, 12);
  for (int k = 0; k < 1000; ++k) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    IntMatrix a(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) a(i, j) = small(rng);
    const auto s = smith_normal_form(a);
    const auto du = s.U.determinant(), dv = s.V.determinant();
    bool ok = s.U * a * s.V == s.D && (du == 1 || du == -1) && (dv == 1 || dv == -1);
    const auto d = s.diagonal();
    for (std::size_t i = 0; i + 1 < d.size(); ++i)
      ok = ok && d[i] >= 0 && (d[i] == 0 ? d[i + 1] == 0 : d[i + 1] % d[i] == 0);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) ok = ok && (i == j || s.D(i, j) == 0);
    if (!ok) {
      o.require(false, "SNF sample " + std::to_string(k));
      break;
    }
  }
  if (o.pass) o.detail = "150 groups, 1000 SNF samples";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expect_fail;
  for (int k = 1; k < argc; ++k) {
    const std::string arg = argv[k];
    if (arg == "--expect-fail" && k + 1 < argc) {
      expect_fail.insert(std::atoi(argv[++k]));
    } else {
      std::fprintf(stderr, "usage: %s [--expect-fail N]...\n", argv[0]);
      return 2;
    }
  }

  const std::vector<Criterion> criteria{
      {1, "golden table Y_{8,5}", 1.0, [] { return golden_table(8, 5, golden::table_8_5()); }},
      {2, "golden table Y_{4,5}", 0, [] { return golden_table(4, 5, golden::table_4_5()); }},
      {3, "lens L(9,2) values", 0, criterion_lens},
      {4, "closed forms agree with recursion", 5.0, criterion_closed_forms},
      {5, "obstruction verdicts", 0, criterion_verdicts},
      {6, "property suites", 0, criterion_properties},
      {7, "route equivalence", 10.0, criterion_routes},
      {8, "oracle equivalence", 0, criterion_oracles},
  };

  int unexpected = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0 && secs >= c.time_limit_s) {
      o.pass = false;
      o.detail += (o.detail.empty() ? "" : "; ") + std::string("too slow");
    }
    std::printf("%s [%d] %s (%.3f s)%s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs,
                o.detail.empty() ? "" : ": ", o.detail.c_str());
    if (o.pass == static_cast<bool>(expect_fail.count(c.id))) ++unexpected;
  }
  if (!expect_fail.empty()) {
    std::printf("expected failures:");
    for (int id : expect_fail) std::printf(" [%d]", id);
    std::printf("\n");
  }
  return unexpected == 0 ? 0 : 1;
}
