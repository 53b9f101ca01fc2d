#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <ostream>

#include "CLI11.hpp"
#include "hfp/error.hpp"
#include "hfp/io.hpp"
#include "hfp/lens.hpp"
#include "hfp/obstruct.hpp"
#include "hfp/plumbing_double.hpp"

namespace hfp::cli {
namespace {

constexpr const char* kLimitEnv = "HFPLUMB_GROUP_LIMIT";

enum class Format { Table, Json, Csv };

// Plain fixed-width table for terminals.
class TextTable {
 public:
  explicit TextTable(std::vector<std::string> header) : rows_{std::move(header)} {}
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& os) const {
    std::vector<std::size_t> width(rows_.front().size(), 0);
    for (const auto& r : rows_)
      for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      std::string line;
      for (std::size_t c = 0; c < rows_[k].size(); ++c) {
        if (c) line += "  ";
        line += rows_[k][c];
        if (c + 1 < rows_[k].size()) line.append(width[c] - rows_[k][c].size(), ' ');
      }
      os << line << '\n';
      if (k == 0) {
        std::size_t total = 0;
        for (auto w : width) total += w;
        os << std::string(total + 2 * (width.size() - 1), '-') << '\n';
      }
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

int verdict_exit(const ObstructionVerdict& v) {
  switch (v.status) {
    case VerdictStatus::Obstructed: return kObstructed;
    case VerdictStatus::Unobstructed: return kOk;
    case VerdictStatus::Inconclusive: return kInconclusive;
  }
  return kInconclusive;
}

std::string coset_string(const CosetWitness& w) {
  std::string s = "{";
  for (std::size_t k = 0; k < w.coset.size(); ++k) {
    if (k) s += ", ";
    s += label_string(w.coset[k]);
  }
  return s + "}";
}

void print_verdict_text(std::ostream& os, const ObstructionVerdict& v) {
  os << "status: " << to_string(v.status) << '\n';
  if (!v.reason.empty()) os << "reason: " << v.reason << '\n';
  if (v.witness) {
    os << "metabolizer order: " << v.witness->metabolizer.size() << '\n';
    os << "witness coset: " << coset_string(*v.witness) << '\n';
  }
  if (!v.violations.empty()) {
    TextTable t({"spinc", "c1sq", "bound", "orientation"});
    for (const auto& x : v.violations)
      t.add({label_string(x.spinc), x.c1sq.str(), x.bound.str(), x.orientation});
    t.print(os);
  }
}

int emit_verdict(std::ostream& out, Format f, const ObstructionVerdict& v) {
  switch (f) {
    case Format::Json: out << io::verdict_json(v); break;
    case Format::Csv: out << io::verdict_csv(v); break;
    case Format::Table: print_verdict_text(out, v); break;
  }
  return verdict_exit(v);
}

void print_family_text(std::ostream& os, const FamilyReport& r) {
  os << "m = " << r.m << ", n = " << r.n << ", algebraic intersection "
     << r.algebraic_intersection << ", b2- = " << r.b2minus << ", b1 = " << r.b1 << '\n';
  TextTable t({"spinc", "c1sq", "d_b", "bound", "pipeline", "reduced"});
  for (const auto& p : r.points)
    t.add({label_string(p.spinc), p.c1sq.str(), p.d_b.str(), p.bound.str(),
           p.pipeline_holds ? "holds" : "fails", p.reduced_holds ? "holds" : "fails"});
  t.print(os);
  os << "status: " << to_string(r.verdict.status) << '\n';
  os << "minimum geometric intersections: " << r.min_geometric_intersections << '\n';
  if (!r.routes_agree()) {
    os << "routes disagree at:";
    for (const auto& s : r.route_mismatches) os << ' ' << label_string(s);
    os << '\n';
  }
}

int emit_family(std::ostream& out, Format f, const FamilyReport& r) {
  switch (f) {
    case Format::Json: out << io::family_json(r); break;
    case Format::Csv: out << io::family_csv(r); break;
    case Format::Table: print_family_text(out, r); break;
  }
  return verdict_exit(r.verdict);
}

void print_double_table(std::ostream& os, const std::vector<DoubleTableRow>& rows) {
  TextTable t({"spinc", "d_b", "d_t", "extra"});
  for (const auto& r : rows)
    t.add({r.spinc.str(), r.d_b.str(), r.d_t.str(), r.extra_summand ? "F" : ""});
  t.print(os);
}

std::int64_t default_limit() {
  const char* env = std::getenv(kLimitEnv);
  if (!env || !*env) return kDefaultGroupLimit;
  std::int64_t v = 0;
  const char* end = env + std::char_traits<char>::length(env);
  auto [ptr, ec] = std::from_chars(env, end, v);
  if (ec != std::errc{} || ptr != end || v < 1)
    throw Error(ErrorCode::InvalidParameters,
                std::string(kLimitEnv) + " must be a positive integer, got '" + env + "'");
  return v;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Correction terms and embedding obstructions for plumbed 4-manifolds", "hfplumb"};
  app.require_subcommand(1);

  Format format = Format::Table;
  const std::map<std::string, Format> formats{
      {"table", Format::Table}, {"json", Format::Json}, {"csv", Format::Csv}};
  std::int64_t limit = 0;
  std::int64_t m = 0, n = 0, p = 0, q = 0, a = 0, t = 0, k = 0;
  std::string orientation = "+";

  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--output,-o", format, "table, json or csv")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };
  auto add_limit = [&](CLI::App* sub) {
    sub->add_option("--limit", limit,
                    "largest group order to enumerate (default 10000, or $HFPLUMB_GROUP_LIMIT)")
        ->check(CLI::PositiveNumber);
  };

  auto* dd = app.add_subcommand("dinv-double", "correction terms of the double plumbing boundary");
  dd->add_option("m", m, "first Euler number (>= 4)")->required();
  dd->add_option("n", n, "second Euler number (>= 4)")->required();
  add_output(dd);

  auto* dl = app.add_subcommand("dinv-lens", "correction terms of the lens space L(p,q)");
  dl->add_option("p", p, "order of H_1 (>= 1)")->required();
  dl->add_option("q", q, "coprime to p")->required();
  dl->add_option("--orientation", orientation, "+ for d(L(p,q)), - for d(-L(p,q))")
      ->check(CLI::IsMember({"+", "-"}));
  add_output(dl);

  auto* od = app.add_subcommand("obstruct-double",
                                "coset test for a double plumbing in a b2+ = 2, b2- = 0 manifold");
  od->add_option("m", m)->required();
  od->add_option("n", n)->required();
  add_output(od);
  add_limit(od);

  auto* os = app.add_subcommand("obstruct-single", "coset test for a single plumbing");
  os->add_option("m", m)->required();
  os->add_option("n", n)->required();
  add_output(os);
  add_limit(os);

  auto* fd = app.add_subcommand("family-double",
                                "classes (a,2,0,0), (1,0,t,1) in S2xS2 # S2xS2");
  fd->add_option("--a", a, "odd, >= 1")->required();
  fd->add_option("--t", t, ">= 2")->required();
  add_output(fd);

  auto* fs = app.add_subcommand("family-single",
                                "classes (2k+1,2,0,0), (-k,1,2k,1) in S2xS2 # S2xS2");
  fs->add_option("--k", k, ">= 1")->required();
  add_output(fs);

  auto* rc = app.add_subcommand("report-cp2", "the three CP2 # CP2 configurations");
  add_limit(rc);
  rc->add_option("--output,-o", format, "table or json")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    err << "run with --help for usage\n";
    return kUsage;
  }

  try {
    if (limit == 0) limit = default_limit();

    if (dd->parsed()) {
      const DoublePlumbing plumbing(m, n);
      const auto rows = correction_table(plumbing);
      switch (format) {
        case Format::Json: out << io::table_json(rows); break;
        case Format::Csv: out << io::table_csv(rows); break;
        case Format::Table: print_double_table(out, rows); break;
      }
      return kOk;
    }
    if (dl->parsed()) {
      const LensSpace lens(p, q);
      const Orientation o = orientation == "+" ? Orientation::Positive : Orientation::Negative;
      const auto values = d_lens_table(lens, o);
      switch (format) {
        case Format::Json: out << io::lens_json(lens, o, values); break;
        case Format::Csv: out << io::lens_csv(lens, o, values); break;
        case Format::Table: {
          out << (o == Orientation::Positive ? "d(L(" : "d(-L(") << lens.p() << ',' << lens.q()
              << "), i)\n";
          TextTable tt({"i", "d"});
          for (std::size_t i = 0; i < values.size(); ++i)
            tt.add({std::to_string(i), values[i].str()});
          tt.print(out);
          break;
        }
      }
      return kOk;
    }
    if (od->parsed()) return emit_verdict(out, format, obstruct_double_b2minus0(m, n, limit));
    if (os->parsed()) return emit_verdict(out, format, obstruct_single_lens(m, n, limit));
    if (fd->parsed()) return emit_family(out, format, family_s2s2_double(a, t));
    if (fs->parsed()) return emit_family(out, format, family_s2s2_single(k));
    if (rc->parsed()) {
      const auto report = cp2_case_report(limit);
      if (format == Format::Csv) {
        err << "error: report-cp2 supports --output table or json\n";
        return kUsage;
      }
      if (format == Format::Json) {
        out << io::cp2_report_json(report);
      } else {
        for (const auto& c : report.cases) {
          out << "== " << c.name << " (m = " << c.m << ", n = " << c.n << ")\n";
          if (!c.double_table.empty()) print_double_table(out, c.double_table);
          if (!c.lens_table.empty()) {
            TextTable tt({"i", "d(L)"});
            for (std::size_t i = 0; i < c.lens_table.size(); ++i)
              tt.add({std::to_string(i), c.lens_table[i].str()});
            tt.print(out);
          }
          print_verdict_text(out, c.verdict);
          out << "minimum geometric intersections: " << c.min_geometric_intersections << "\n\n";
        }
      }
      return kOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    if (e.code() == ErrorCode::GroupTooLarge)
      err << "raise --limit or " << kLimitEnv << " to enumerate larger groups\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  err << "error: no command given\n";
  return kUsage;
}

}  // namespace hfp::cli
