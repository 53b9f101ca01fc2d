#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "hfp/io.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = hfp::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(HFPLUMB_GOLDEN_DIR) + "/" + name, std::ios::binary);
  EXPECT_TRUE(in.good()) << name;
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::size_t count_lines(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

}  // namespace

TEST(Cli, DinvDoubleCsv) {
  const auto r = run({"dinv-double", "8", "5", "--output", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(count_lines(r.out), 37u);
  EXPECT_EQ(r.out, golden("dinv_double_8_5.csv"));
  EXPECT_TRUE(r.err.empty());
}

TEST(Cli, DinvDoubleJsonRoundTrips) {
  const auto r = run({"dinv-double", "4", "5", "-o", "json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(hfp::io::parse_table_json(r.out),
            hfp::correction_table(hfp::DoublePlumbing(4, 5)));
}

TEST(Cli, DinvLens) {
  const auto r = run({"dinv-lens", "9", "2", "--output", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, golden("dinv_lens_9_2.csv"));
  std::size_t twice = 0;
  for (std::size_t pos = r.out.find(",8/9,"); pos != std::string::npos;
       pos = r.out.find(",8/9,", pos + 1))
    ++twice;
  EXPECT_EQ(twice, 2u);
  const auto table = run({"dinv-lens", "9", "2"});
  EXPECT_EQ(table.code, 0);
  EXPECT_NE(table.out.find("d(L(9,2), i)"), std::string::npos);
  const auto neg = run({"dinv-lens", "9", "2", "--orientation", "-", "-o", "csv"});
  EXPECT_NE(neg.out.find("\n0,-8/9,-\n"), std::string::npos);
}

TEST(Cli, VerdictExitCodes) {
  EXPECT_EQ(run({"obstruct-double", "8", "5"}).code, 1);
  EXPECT_EQ(run({"obstruct-double", "4", "5"}).code, 0);
  EXPECT_EQ(run({"obstruct-single", "2", "5"}).code, 0);
  EXPECT_EQ(run({"family-single", "--k", "2"}).code, 1);
  EXPECT_EQ(run({"family-single", "--k", "1"}).code, 0);
  EXPECT_EQ(run({"family-double", "--a", "3", "--t", "2"}).code, 0);
  EXPECT_EQ(run({"family-double", "--a", "7", "--t", "3"}).code, 1);
}

TEST(Cli, VerdictDocumentsRoundTrip) {
  const auto json = run({"obstruct-double", "4", "5", "--output", "json"});
  EXPECT_EQ(hfp::io::parse_verdict_json(json.out), hfp::obstruct_double_b2minus0(4, 5));
  EXPECT_EQ(json.out, golden("obstruct_double_4_5.json"));
  const auto csv = run({"obstruct-double", "8", "5", "--output", "csv"});
  EXPECT_EQ(hfp::io::parse_verdict_csv(csv.out).violations,
            hfp::obstruct_double_b2minus0(8, 5).violations);
  const auto single = run({"obstruct-single", "2", "5", "-o", "json"});
  EXPECT_EQ(single.out, golden("obstruct_single_2_5.json"));
}

TEST(Cli, FamilyJson) {
  const auto r = run({"family-double", "--a", "7", "--t", "3", "--output", "json"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("\"status\": \"obstructed\""), std::string::npos);
  EXPECT_EQ(r.out, golden("family_double_7_3.json"));
}

TEST(Cli, ReportCp2) {
  const auto r = run({"report-cp2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("minimum geometric intersections: 4"), std::string::npos);
  const auto j = run({"report-cp2", "-o", "json"});
  EXPECT_EQ(j.code, 0);
  EXPECT_EQ(j.out, golden("report_cp2.json"));
  EXPECT_EQ(run({"report-cp2", "-o", "csv"}).code, 2);
}

TEST(Cli, UsageErrors) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{}, {"frobnicate"}, {"dinv-double", "8"},
        {"dinv-double", "8", "x"}, {"dinv-double", "3", "5"}, {"dinv-lens", "6", "4"},
        {"dinv-double", "8", "5", "--output", "xml"}, {"family-double", "--a", "4", "--t", "2"},
        {"family-single", "--k", "0"}, {"obstruct-double", "8", "5", "--limit", "10"},
        {"obstruct-double", "8", "5", "--limit", "-3"}}) {
    const auto r = run(args);
    EXPECT_EQ(r.code, 2) << (args.empty() ? "" : args[0]);
    EXPECT_FALSE(r.err.empty());
    EXPECT_TRUE(r.out.empty());
  }
}

TEST(Cli, Help) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("dinv-double"), std::string::npos);
}

TEST(Cli, LimitFromEnvironment) {
  ::setenv("HFPLUMB_GROUP_LIMIT", "10", 1);
  EXPECT_EQ(run({"obstruct-double", "8", "5"}).code, 2);
  EXPECT_EQ(run({"obstruct-double", "8", "5", "--limit", "100"}).code, 1);
  ::setenv("HFPLUMB_GROUP_LIMIT", "lots", 1);
  const auto bad = run({"obstruct-double", "8", "5"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("HFPLUMB_GROUP_LIMIT"), std::string::npos);
  ::unsetenv("HFPLUMB_GROUP_LIMIT");
  EXPECT_EQ(run({"obstruct-double", "8", "5"}).code, 1);
}
