#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cli/app.hpp"
#include "cli/output.hpp"
#include "cli/ranges.hpp"

namespace cli = cylbif::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "cylbif");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST(Ranges, IntegerLists) {
  EXPECT_EQ(cli::parse_int_list("0..3,7"), (std::vector<int>{0, 1, 2, 3, 7}));
  EXPECT_EQ(cli::parse_int_list("2000"), (std::vector<int>{2000}));
  EXPECT_THROW(cli::parse_int_list("3..1"), cli::UsageError);
  EXPECT_THROW(cli::parse_int_list("a"), cli::UsageError);
  EXPECT_THROW(cli::parse_int_list("1,"), cli::UsageError);
  EXPECT_THROW(cli::parse_int_list(""), cli::UsageError);
}

TEST(Ranges, RealRanges) {
  const auto r = cli::parse_real_range("0.5:6");
  EXPECT_DOUBLE_EQ(r.start, 0.5);
  EXPECT_DOUBLE_EQ(r.end, 6.0);
  const auto pts = cli::sample_range(r, 12);
  ASSERT_EQ(pts.size(), 12u);
  EXPECT_DOUBLE_EQ(pts.front(), 0.5);
  EXPECT_DOUBLE_EQ(pts.back(), 6.0);
  EXPECT_EQ(cli::sample_range(cli::parse_real_range("2.6127"), 5).size(), 1u);
  EXPECT_THROW(cli::parse_real_range("2:1"), cli::UsageError);
  EXPECT_THROW(cli::parse_real_range("x:1"), cli::UsageError);
  EXPECT_THROW(cli::sample_range(r, 0), cli::UsageError);
}

TEST(Output, RealFormatting) {
  EXPECT_EQ(cli::format_real(3.0636225550123), "3.063622555");
  EXPECT_EQ(cli::format_real(-0.0), "0");
  EXPECT_EQ(cli::format_real(1e-20), "1e-20");
}

TEST(Output, HeaderWithoutRecords) {
  std::ostringstream os;
  cli::write_records(os, cli::Format::Csv, {"a", "b"}, {});
  EXPECT_EQ(os.str(), "a,b\n");
}

TEST(Output, MismatchedRecordRejected) {
  cli::OutputRecord r{cli::Schema::TableRow, {}};
  r.add("b", 1.0);
  std::ostringstream os;
  EXPECT_THROW(cli::write_records(os, cli::Format::Csv, {"a"}, {r}), std::logic_error);
}

TEST(Cli, TableFirstBlock) {
  const auto r = run({"table", "--two-nu", "0..7"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 9u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"two_nu", "n", "j_nu", "rho_nu", "T_nu", "T_lower", "T_upper"}));
  EXPECT_EQ(rows[1][0], "0");
  EXPECT_NEAR(std::stod(rows[1][4]), 3.06362, 5e-5);
  EXPECT_EQ(rows[1][5], "");
}

TEST(Cli, TableLargeOrder) {
  const auto r = run({"table", "--two-nu", "2000"});
  ASSERT_EQ(r.code, 0);
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_NEAR(std::stod(rows[1][4]), 0.13888, 5e-5);
  EXPECT_FALSE(rows[1][5].empty());
}

TEST(Cli, JsonMatchesCsv) {
  const auto csv = csv_rows(run({"table", "--two-nu", "0,20"}).out);
  const auto json = nlohmann::ordered_json::parse(run({"table", "--two-nu", "0,20", "--format", "json"}).out);
  ASSERT_EQ(json.size(), 2u);
  for (std::size_t i = 0; i < json.size(); ++i) {
    std::size_t c = 0;
    for (const auto& [key, value] : json[i].items()) {
      EXPECT_EQ(key, csv[0][c]);
      if (value.is_null())
        EXPECT_EQ(csv[i + 1][c], "");
      else
        EXPECT_EQ(cli::format_real(value.get<double>()), csv[i + 1][c]) << key;
      ++c;
    }
  }
}

TEST(Cli, Deterministic) {
  const auto a = run({"sigma", "--n", "3", "--T", "0.5:5", "--samples", "17"});
  const auto b = run({"sigma", "--n", "3", "--T", "0.5:5", "--samples", "17"});
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, SigmaSignChangeForDimensionOne) {
  const auto rows = csv_rows(run({"sigma", "--n", "1", "--T", "3.5:4.5", "--samples", "11"}).out);
  ASSERT_EQ(rows.size(), 12u);
  EXPECT_GT(std::stod(rows[1][1]), 0.0);
  EXPECT_LT(std::stod(rows[11][1]), 0.0);
  EXPECT_EQ(std::stod(rows[6][1]), 0.0);
}

TEST(Cli, SigmaOracle) {
  const auto r = run({"sigma", "--n", "2", "--T", "0.5:6", "--samples", "50", "--oracle"});
  ASSERT_EQ(r.code, 0);
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 51u);
  EXPECT_EQ(rows[0].back(), "abs_diff");
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_LE(std::stod(rows[i][3]), 1e-6);
}

TEST(Cli, SigmaAtMu) {
  const auto rows = csv_rows(run({"sigma", "--n", "2", "--T", "2.6127"}).out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_GT(std::stod(rows[1][1]), 0.0);
}

TEST(Cli, DelaunayCylinder) {
  const auto rows = csv_rows(run({"delaunay", "--sigma", "1", "--samples", "64"}).out);
  ASSERT_EQ(rows.size(), 65u);
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_EQ(rows[i][1], "1");
}

TEST(Cli, ProfileLabelled) {
  const auto rows = csv_rows(run({"profile", "--n", "2", "--s", "0.1", "--samples", "16"}).out);
  ASSERT_EQ(rows.size(), 18u);
  EXPECT_EQ(rows[1][1], "1.1");
  EXPECT_EQ(rows[1][2], "first-order");
}

TEST(Cli, VerifyPdeReports) {
  const auto r = run({"verify-pde", "--n", "2", "--k", "2", "--eps", "1e-3", "--nr", "48", "--nt", "48"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("closed-form sigma_k"), std::string::npos);
  EXPECT_NE(r.out.find("PDE estimate"), std::string::npos);
  EXPECT_NE(r.out.find("relative error,pass"), std::string::npos);
}

TEST(Cli, CheckSuiteFailureSetsExitCode) {
  const auto r = run({"check", "--suite", "delaunay"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.find(",fail,"), std::string::npos);
  const auto b = run({"check", "--suite", "bifurcation"});
  const bool any_fail = b.out.find(",fail,") != std::string::npos;
  EXPECT_EQ(b.code, any_fail ? 1 : 0);
}

TEST(Cli, WritesToFile) {
  const std::string path = ::testing::TempDir() + "cylbif_table.csv";
  ASSERT_EQ(run({"table", "--two-nu", "4", "--out", path}).code, 0);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), run({"table", "--two-nu", "4"}).out);
  std::remove(path.c_str());
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"nonsense"}).code, 2);
  EXPECT_EQ(run({"table", "--two-nu", "7..3"}).code, 2);
  EXPECT_EQ(run({"table", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"sigma", "--n", "0", "--T", "1"}).code, 2);
  EXPECT_EQ(run({"sigma", "--n", "2"}).code, 2);
  EXPECT_EQ(run({"delaunay", "--sigma", "2"}).code, 2);
  EXPECT_EQ(run({"check", "--suite", "everything"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, NumericalFailure) {
  // The n = 1 tangent branch has a pole; the closed form refuses to evaluate there.
  const auto r = run({"sigma", "--n", "1", "--T", "1e9"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("numerical failure"), std::string::npos);
}
