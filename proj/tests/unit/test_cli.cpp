#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "report.hpp"

using namespace wordmap;
using namespace wordmap::cli;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(WORDMAP_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string output(const ReportRecord& r, const std::string& key) {
  for (const auto& [k, v] : r.outputs)
    if (k == key) return v;
  return "<missing>";
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

// Splits one CSV row, honouring double-quoted cells.
std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cell += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cell += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      cells.push_back(cell);
      cell.clear();
    } else {
      cell += c;
    }
  }
  cells.push_back(cell);
  return cells;
}

}  // namespace

TEST(Decompose, Examples) {
  DecomposeArgs a;
  a.n = 2;
  a.q = 5;
  a.partition = "2";
  a.projective = true;
  a.oracle = true;
  auto r = run_decompose(a);
  ASSERT_EQ(r.records.size(), 1u);
  EXPECT_EQ(output(r.records[0], "decomposition"), "(3)");
  EXPECT_EQ(output(r.records[0], "oracle_decomposition"), "(3)");
  EXPECT_EQ(r.records[0].status, Status::Ok);

  a.partition = "1,1";
  a.projective = false;
  a.oracle = false;
  r = run_decompose(a);
  EXPECT_EQ(output(r.records[0], "decomposition"), "(4)");
  EXPECT_EQ(output(r.records[0], "d_seq"), "(4, 4)");
  EXPECT_EQ(output(r.records[0], "conjugate_count"), "15");

  a.partition = "3";
  EXPECT_THROW(run_decompose(a), UsageError);
}

TEST(Bound, Examples) {
  BoundArgs a;
  a.theorem = "1torus";
  a.n = 2;
  a.q = 5;
  a.M = 2;
  a.exact = true;
  auto r = run_bound(a);
  EXPECT_EQ(output(r.records[0], "bound"), "15");
  EXPECT_EQ(output(r.records[0], "exact"), "46");
  EXPECT_EQ(r.exit_code, kExitOk);

  BoundArgs t;
  t.theorem = "th2";
  t.n = 4;
  t.q = 3;
  EXPECT_EQ(output(run_bound(t).records[0], "bound"), "35/64");

  BoundArgs m;
  m.theorem = "main";
  m.n = 2;
  m.p = 5;
  m.l = 1;
  r = run_bound(m);
  EXPECT_EQ(output(r.records[0], "bound"), "120");
  EXPECT_EQ(r.records[0].status, Status::Vacuous);

  m.p = 13;
  m.exact = true;
  r = run_bound(m);
  EXPECT_EQ(output(r.records[0], "satisfied"), "true");
  EXPECT_EQ(r.records[0].status, Status::Ok);

  BoundArgs bad;
  bad.theorem = "1torus";
  bad.n = 2;
  EXPECT_THROW(run_bound(bad), UsageError);
}

TEST(Bound, BudgetExceededIsDistinct) {
  BoundArgs a;
  a.theorem = "1torus";
  a.n = 3;
  a.q = 3;
  a.M = 2;
  a.exact = true;
  a.budget = EnumerationBudget(100);
  const auto r = run_bound(a);
  EXPECT_EQ(r.records[0].status, Status::BudgetExceeded);
  EXPECT_EQ(r.exit_code, kExitBudget);
  EXPECT_EQ(output(r.records[0], "bound"), "468");
}

TEST(Verify, FastSuitesPass) {
  for (const std::string suite : {"zav", "harmonic", "weyl", "stirling", "tori", "density"}) {
    const auto r = run_verify(suite, EnumerationBudget(1'000'000));
    EXPECT_EQ(r.exit_code, kExitOk) << suite;
    ASSERT_EQ(r.records.size(), 1u) << suite;
    EXPECT_EQ(output(r.records[0], "failures"), "0");
  }
  EXPECT_THROW(run_verify("nope", EnumerationBudget()), UsageError);
}

TEST(Verify, BudgetExceededExitCode) {
  const auto r = run_verify("oracle-tori", EnumerationBudget(100));
  EXPECT_EQ(r.exit_code, kExitBudget);
}

TEST(Scan, Th2DecreasesStrictly) {
  ScanArgs a;
  a.theorem = "th2";
  a.n = {1000, 10, 100, 50, 500};
  a.q = {5};
  const auto r = run_scan(a);
  ASSERT_EQ(r.records.size(), 5u);
  std::vector<Rational> values;
  for (const auto& rec : r.records) values.push_back(parse_rational(output(rec, "estimate")));
  for (std::size_t i = 1; i < values.size(); ++i) EXPECT_LT(values[i], values[i - 1]);
  EXPECT_EQ(r.records.front().inputs[1].second, "10");
}

TEST(Scan, OneTorusGrid) {
  ScanArgs a;
  a.theorem = "1torus";
  a.n = {2};
  a.q = {3, 5, 7, 9};
  a.M = {2, 3, 4};
  a.exact = true;
  const auto r = run_scan(a);
  EXPECT_EQ(r.records.size(), 12u);
  EXPECT_EQ(r.exit_code, kExitOk);
  for (const auto& rec : r.records) EXPECT_NE(output(rec, "exact"), "<missing>");
}

TEST(Scan, ExampleGenerator) {
  ScanArgs a;
  a.theorem = "example";
  a.c = {"1", "1/2"};
  a.n = {2, 3};
  const auto r = run_scan(a);
  ASSERT_EQ(r.records.size(), 4u);
  for (const auto& rec : r.records) EXPECT_EQ(output(rec, "holds"), "true");
  EXPECT_EQ(output(r.records[2], "p"), "19");  // c = 1, n = 2
  EXPECT_EQ(output(r.records[3], "p"), "41");  // c = 1, n = 3
}

TEST(Report, CsvEscapesAndJsonOrder) {
  const Schema s{"x", {"a"}, {"b"}};
  const ReportRecord r{"x", {{"a", "(2, 6)"}}, {{"b", "1/2"}}, Status::Ok, ""};
  EXPECT_EQ(csv_header(s, false), "command,a,b,status");
  EXPECT_EQ(csv_row(s, r, false), "x,\"(2, 6)\",1/2,ok");
  EXPECT_EQ(json_line(r), R"j({"command":"x","inputs":{"a":"(2, 6)"},"outputs":{"b":"1/2"},"status":"ok"})j");
}

TEST(Binary, ExitCodes) {
  EXPECT_EQ(run("--no-timestamp verify --suite zav").code, kExitOk);
  EXPECT_EQ(run("--no-timestamp verify --suite harmonic").code, kExitOk);
  EXPECT_EQ(run("verify --suite bogus").code, kExitUsage);
  EXPECT_EQ(run("decompose --partition 3 --n 2 --q 5").code, kExitUsage);
  EXPECT_EQ(run("decompose --n 2 --q 6 --partition 2").code, kExitUsage);
  EXPECT_EQ(run("").code, kExitUsage);
  EXPECT_EQ(run("--budget 10 bound --theorem main --n 2 --p 5 --exact").code, kExitBudget);
}

TEST(Binary, DecomposeGolden) {
  const auto r = run("--no-timestamp decompose --eps + --n 2 --q 5 --partition 2 --projective --oracle");
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out,
            R"j({"command":"decompose","inputs":{"eps":"+","n":"2","q":"5","partition":"2","projective":"true"},)j"
            R"j("outputs":{"group":"PSL_2(5)","d_seq":"(24)","decomposition":"(3)","order":"3","weyl_order":"2",)j"
            R"j("conjugate_count":"10","conjugate_count_integral":"true","oracle_decomposition":"(3)"},"status":"ok"})j"
            "\n");
}

TEST(Binary, Deterministic) {
  const std::string args = "--no-timestamp scan --theorem 1torus --n 2 --q 3,5 --M 2,3 --exact";
  EXPECT_EQ(run(args).out, run(args).out);
  const auto stamped = run("bound --theorem th2 --n 3 --q 5");
  EXPECT_NE(stamped.out.find("\"timestamp\""), std::string::npos);
}

TEST(Binary, CsvAndJsonCarryTheSameRecords) {
  const std::string grid = "scan --theorem 1torus --n 2 --q 3,5,7,9 --M 2,3,4 --exact";
  const auto json = lines(run("--no-timestamp --format json " + grid).out);
  const auto csv = lines(run("--no-timestamp --format csv " + grid).out);
  ASSERT_EQ(csv.size(), json.size() + 1);
  const auto header = split_csv(csv[0]);
  for (std::size_t i = 0; i < json.size(); ++i) {
    const auto row = split_csv(csv[i + 1]);
    ASSERT_EQ(row.size(), header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
      if (row[c].empty()) continue;
      const std::string needle = "\"" + header[c] + "\":\"" + row[c] + "\"";
      EXPECT_NE(json[i].find(needle), std::string::npos) << needle << " in " << json[i];
    }
  }
}

TEST(Binary, EmptyRangeWritesHeaderOnly) {
  const auto path = std::filesystem::temp_directory_path() / "wordmap_empty_scan.csv";
  const auto r = run("--no-timestamp --format csv --out " + path.string() + " scan --theorem th2");
  EXPECT_EQ(r.code, kExitOk);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), "command,theorem,n,q,word_exponent,estimate,estimate_approx,status\n");
  std::filesystem::remove(path);
}

TEST(Binary, UnwritablePathFails) {
  EXPECT_EQ(run("--out /nonexistent-dir/x.csv scan --theorem th2 --n 3 --q 5").code, kExitUsage);
}
