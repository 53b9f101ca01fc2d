#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hfp/abelian.hpp"
#include "hfp/lattice.hpp"
#include "hfp/lens.hpp"
#include "hfp/plumbing_double.hpp"
#include "hfp/rational.hpp"

namespace hfp {

enum class VerdictStatus { Obstructed, Unobstructed, Inconclusive };

std::string to_string(VerdictStatus s);
VerdictStatus parse_verdict_status(const std::string& s);

/// Spin^c label on either boundary family.
using SpinCLabel = std::variant<SpinCIndex, LensSpinC>;

std::string label_string(const SpinCLabel& label);

/// A failed instance of c1^2 + b2^-(W) <= 4 d_b + 2 b1(Y), recorded as
/// c1sq > bound with bound = 4 d_b + 2 b1 - b2^-.
struct Violation {
  SpinCLabel spinc;
  Rational c1sq;
  Rational bound;
  /// Which boundary orientation produced the failing inequality ("+" for
  /// the plumbing boundary, "-" for its reverse).
  std::string orientation = "-";

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Metabolizer t and a coset x + t on which the correction terms take the
/// value an embedding forces.
struct CosetWitness {
  std::vector<GroupElement> metabolizer;
  GroupElement representative;
  std::vector<SpinCLabel> coset;

  friend bool operator==(const CosetWitness&, const CosetWitness&) = default;
};

struct ObstructionVerdict {
  VerdictStatus status = VerdictStatus::Inconclusive;
  std::optional<CosetWitness> witness;
  std::vector<Violation> violations;
  /// Short machine-readable reason, e.g. "no_metabolizer", "coset_test",
  /// "inequality".
  std::string reason;

  friend bool operator==(const ObstructionVerdict&, const ObstructionVerdict&) = default;
};

/// c1^2 + b2^-(W) <= 4 d_b(Y, t) + 2 b1(Y), exactly.
bool os_inequality(const Rational& c1sq, std::int64_t b2minus_w, const Rational& d_b,
                   std::int64_t b1_y);

/// d_b(-Y, s) = -d_t(Y, s), with d_t = d_b + 1 asserted on the way.
Rational d_bottom_reversed(const DoublePlumbing& p, const SpinCIndex& s);

/// Two spheres of squares m, n meeting twice (same sign) in a closed X with
/// b2^+ = 2, b2^- = 0: some metabolizer coset must carry d_b = -1/2.
ObstructionVerdict obstruct_double_b2minus0(std::int64_t m, std::int64_t n,
                                            std::int64_t limit = kDefaultGroupLimit);

/// Two spheres of squares m, n meeting once: some metabolizer coset of
/// H_1(L(mn-1, n)) must carry d = 0.
ObstructionVerdict obstruct_single_lens(std::int64_t m, std::int64_t n,
                                        std::int64_t limit = kDefaultGroupLimit);

/// One evaluated Spin^c structure of a parametric family.
struct FamilyPoint {
  SpinCLabel spinc;
  CharEvaluation c1_on_complement;
  Rational c1sq;
  Rational d_b;    // bottom correction term of the complement's boundary
  Rational bound;  // 4 d_b + 2 b1 - b2^-
  bool pipeline_holds;
  bool reduced_holds;
};

struct FamilyReport {
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::vector<HomClass> classes;  // alpha, beta
  std::vector<HomClass> complement_basis;
  IntMatrix complement_gram;
  std::int64_t b2minus = 0;
  std::int64_t b1 = 0;
  std::vector<FamilyPoint> points;
  /// Verdict of the c1^2 pipeline.
  ObstructionVerdict verdict;
  /// Labels failing the closed-form reduced inequality.
  std::vector<SpinCLabel> reduced_violations;
  /// Points where the two routes disagree.
  std::vector<SpinCLabel> route_mismatches;
  std::int64_t algebraic_intersection = 0;
  /// Lower bound on geometric intersections: excess points cancel in pairs.
  std::int64_t min_geometric_intersections = 0;

  bool routes_agree() const { return route_mismatches.empty(); }
};

/// Classes (a,2,0,0), (1,0,t,1) in S2xS2 # S2xS2 with a odd, t >= 2; the
/// Spin^c family u_{i,j} with i odd. The reduced route is i + 2j + 1 >= a.
FamilyReport family_s2s2_double(std::int64_t a, std::int64_t t);

/// Classes (2k+1,2,0,0), (-k,1,2k,1) with k >= 1; the Spin^c family t_i for
/// 0 <= i < n-1. The reduced route is (mn-1)(k-i-1) >= 0.
FamilyReport family_s2s2_single(std::int64_t k);

/// One worked configuration in CP2 # CP2.
struct Cp2Case {
  std::string name;
  HomClass alpha;
  HomClass beta;
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::int64_t algebraic_intersection = 0;
  std::vector<DoubleTableRow> double_table;  // double plumbings
  std::vector<Rational> lens_table;          // single plumbings, d(L(p,q), i)
  std::int64_t lens_p = 0;
  std::int64_t lens_q = 0;
  ObstructionVerdict verdict;
  std::int64_t min_geometric_intersections = 0;
};

struct Cp2Report {
  std::vector<Cp2Case> cases;
};

/// The three CP2 # CP2 configurations: (2,2),(2,-1) double; (2,0),(1,2)
/// double; (2,1),(1,-1) single.
Cp2Report cp2_case_report(std::int64_t limit = kDefaultGroupLimit);

}  // namespace hfp
