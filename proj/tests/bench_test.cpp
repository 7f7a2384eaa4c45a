// Copyright 2026 The dagraph Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "dagraph/bench.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "test_graphs.hpp"

namespace dagraph {
namespace {

namespace fs = std::filesystem;

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("dagraph_bench_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
             "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

ResultRow sample_row() {
  ResultRow r;
  r.graph = "rmat-s12-ef16-seed1";
  r.algorithm = "pagerank";
  r.mode = "delayed";
  r.delta = 64;
  r.threads = 8;
  r.read_policy = "local";
  r.trial = 2;
  r.set_timing(17, 0.0123456);
  r.outcome = Outcome::kConverged;
  return r;
}

TEST(ResultsCsv, FormatsSixFractionalDigits) {
  ResultRow r = sample_row();
  EXPECT_EQ(r.avg_round_micros, 726);
  EXPECT_EQ(format_result_row(r),
            "rmat-s12-ef16-seed1,pagerank,delayed,64,8,local,2,17,0.012342,0.000726,true");
  r.mode = "sync";
  r.delta.reset();
  r.set_timing(3, 4.5);
  r.outcome = Outcome::kNotConverged;
  EXPECT_EQ(format_result_row(r),
            "rmat-s12-ef16-seed1,pagerank,sync,,8,local,2,3,4.500000,1.500000,false");
  EXPECT_EQ(format_micros(0), "0.000000");
  EXPECT_EQ(format_micros(12000001), "12.000001");
}

TEST(ResultsCsv, TotalEqualsRoundsTimesAverage) {
  for (double measured : {0.0, 1e-7, 0.0031, 0.999999, 3.14159, 120.5}) {
    for (std::size_t rounds : {1u, 3u, 7u, 1000u}) {
      ResultRow r;
      r.set_timing(rounds, measured);
      const double total = r.total_seconds();
      const double avg = r.avg_round_seconds();
      EXPECT_NEAR(avg * static_cast<double>(rounds), total, 1e-6 * std::max(total, 1e-6));
      // Rounding only moves the total by half a microsecond per round.
      EXPECT_LE(std::abs(total - measured), 0.5e-6 * static_cast<double>(rounds) + 1e-12);
    }
  }
}

TEST(ResultsCsv, ParseReemitIsIdentity) {
  std::vector<ResultRow> rows;
  for (int i = 0; i < 5; ++i) {
    ResultRow r = sample_row();
    r.trial = i;
    r.set_timing(10 + i, 0.01 * (i + 1));
    rows.push_back(r);
  }
  rows[1].mode = "async";
  rows[1].delta.reset();
  rows[3].outcome = Outcome::kError;
  rows[3].set_timing(0, 0);
  const std::string text = format_results_csv(rows);
  EXPECT_EQ(text.substr(0, text.find('\n')), kResultsHeader);
  auto parsed = parse_results_csv(text);
  EXPECT_EQ(parsed, rows);
  EXPECT_EQ(format_results_csv(parsed), text);
}

TEST(ResultsCsv, RejectsMalformedInput) {
  const std::string header(kResultsHeader);
  const std::string good = format_result_row(sample_row());
  EXPECT_NO_THROW(parse_results_csv(header + "\n" + good + "\n"));
  EXPECT_THROW(parse_results_csv(good + "\n"), FormatError);
  EXPECT_THROW(parse_results_csv(""), FormatError);
  EXPECT_THROW(parse_results_csv(header + "\ng,pagerank,sync,,1,global,0,1,0.1,0.1\n"),
               FormatError);
  EXPECT_THROW(parse_results_csv(header + "\ng,pagerank,sync,,1,global,0,2,0.2,0.1,true\n"),
               FormatError);  // five fractional digits
  EXPECT_THROW(parse_results_csv(header + "\ng,pagerank,sync,,1,global,0,2,0.300000,0.100000,true\n"),
               FormatError);  // total disagrees
  EXPECT_THROW(parse_results_csv(header + "\ng,pagerank,sync,16,1,global,0,1,0.100000,0.100000,true\n"),
               FormatError);  // delta on a sync row
  EXPECT_THROW(parse_results_csv(header + "\ng,pagerank,delayed,,1,global,0,1,0.100000,0.100000,true\n"),
               FormatError);
  EXPECT_THROW(parse_results_csv(header + "\ng,pagerank,sync,,1,global,0,1,0.100000,0.100000,yes\n"),
               FormatError);
  ResultRow bad = sample_row();
  bad.graph = "a,b";
  EXPECT_THROW(format_result_row(bad), InvalidArgument);
}

TEST(Parsing, ModesAndPolicies) {
  EXPECT_EQ(parse_mode("sync", std::nullopt).kind(), ModeKind::kSynchronous);
  EXPECT_EQ(parse_mode("async", std::nullopt).kind(), ModeKind::kAsynchronous);
  EXPECT_EQ(parse_mode("delayed", 32).delta(), 32u);
  EXPECT_THROW(parse_mode("delayed", std::nullopt), InvalidArgument);
  EXPECT_THROW(parse_mode("delayed", 24), InvalidArgument);
  EXPECT_THROW(parse_mode("eager", std::nullopt), InvalidArgument);
  EXPECT_EQ(parse_read_policy("local"), ReadPolicy::kLocalPreferred);
  EXPECT_EQ(parse_read_policy("global"), ReadPolicy::kGlobalOnly);
  EXPECT_THROW(parse_read_policy("remote"), InvalidArgument);
  EXPECT_EQ(parse_algorithm("sssp"), Algorithm::kSssp);
  EXPECT_THROW(parse_algorithm("bfs"), InvalidArgument);
}

TEST(Parsing, DefaultDeltasArePowersOfTwo) {
  auto d = default_deltas();
  ASSERT_EQ(d.size(), 12u);
  EXPECT_EQ(d.front(), 16u);
  EXPECT_EQ(d.back(), 32768u);
  for (std::size_t i = 1; i < d.size(); ++i) EXPECT_EQ(d[i], 2 * d[i - 1]);
}

TEST(Parsing, ExpandModes) {
  auto m = expand_modes({"sync", "async", "delayed"}, default_deltas());
  EXPECT_EQ(m.size(), 14u);
  auto one = expand_modes({"delayed:48"}, {});
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].delta(), 48u);
  EXPECT_THROW(expand_modes({"delayed:20"}, {}), InvalidArgument);
  EXPECT_THROW(expand_modes({"delayed:x"}, {}), InvalidArgument);
}

SweepSpec small_sweep() {
  SweepSpec s;
  GenSpec g;
  g.family = Family::kRmat;
  g.scale = 8;
  g.edge_factor = 8;
  g.weights = WeightRange{1, 255};
  s.gen = g;
  s.trials = 3;
  return s;
}

TEST(Sweep, RowCountIsConfigurationProductTimesTrials) {
  SweepSpec s = small_sweep();
  s.modes = expand_modes({"sync", "async", "delayed"}, default_deltas());
  s.threads = {1, 2};
  Graph g = make_graph(*s.gen);
  auto rows = run_sweep(s, g, graph_label(s));
  EXPECT_EQ(rows.size(), (2u + 12u) * 2u * 3u);
  for (const auto& r : rows) {
    EXPECT_EQ(r.outcome, Outcome::kConverged);
    EXPECT_EQ(r.graph, "rmat-s8-ef8-seed1");
  }
  EXPECT_EQ(parse_results_csv(format_results_csv(rows)), rows);
}

TEST(Sweep, SynchronousTrialsAgreeOnRounds) {
  SweepSpec s = small_sweep();
  s.modes = {Mode::synchronous()};
  auto rows = run_sweep(s, make_graph(*s.gen), "g");
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].rounds, rows[1].rounds);
  EXPECT_EQ(rows[0].rounds, rows[2].rounds);
}

TEST(Sweep, FailuresBecomeRows) {
  SweepSpec s = small_sweep();
  s.algorithm = Algorithm::kSssp;
  s.source = 100000;  // out of range
  s.modes = {Mode::synchronous(), Mode::delayed(16)};
  s.trials = 2;
  auto rows = run_sweep(s, make_graph(*s.gen), "g");
  ASSERT_EQ(rows.size(), 4u);
  for (const auto& r : rows) EXPECT_EQ(r.outcome, Outcome::kError);
  auto summary = summarize_sweep(rows);
  ASSERT_EQ(summary.size(), 2u);
  EXPECT_EQ(summary[0].failures, 2u);
  EXPECT_FALSE(summary[0].speedup_vs_sync);
}

TEST(Summary, SpeedupOfBaselineAgainstItselfIsOne) {
  SweepSpec s = small_sweep();
  s.modes = expand_modes({"sync", "async", "delayed:16"}, {});
  s.threads = {1, 2};
  s.read_policies = {ReadPolicy::kGlobalOnly, ReadPolicy::kLocalPreferred};
  auto rows = run_sweep(s, make_graph(*s.gen), "g");
  auto summary = summarize_sweep(rows);
  ASSERT_EQ(summary.size(), 3u * 2u * 2u);
  for (const auto& row : summary) {
    EXPECT_EQ(row.trials, 3u);
    ASSERT_TRUE(row.speedup_vs_sync);
    ASSERT_TRUE(row.speedup_vs_async);
    if (row.mode == "sync") {
      EXPECT_DOUBLE_EQ(*row.speedup_vs_sync, 1.0);
    }
    if (row.mode == "async") {
      EXPECT_DOUBLE_EQ(*row.speedup_vs_async, 1.0);
    }
  }
}

TEST(Summary, MeanAndMinimum) {
  std::vector<ResultRow> rows(3);
  const double totals[] = {0.3, 0.1, 0.2};
  for (int i = 0; i < 3; ++i) {
    rows[i].graph = "g";
    rows[i].algorithm = "pagerank";
    rows[i].mode = "sync";
    rows[i].trial = i;
    rows[i].set_timing(10, totals[i]);
    rows[i].outcome = Outcome::kConverged;
  }
  auto s = summarize_sweep(rows);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_NEAR(s[0].mean_total_seconds, 0.2, 1e-12);
  EXPECT_NEAR(s[0].min_total_seconds, 0.1, 1e-12);
  EXPECT_DOUBLE_EQ(s[0].mean_rounds, 10.0);
  const std::string csv = format_summary_csv(s);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), kSummaryHeader);
  EXPECT_NE(csv.find("g,pagerank,sync,,1,global,3,0,10.000,0.200000,0.100000,0.020000,1.0000,\n"),
            std::string::npos);
}

TEST(Commands, GenIsDeterministic) {
  TempDir dir;
  GenSpec spec;
  spec.family = Family::kGrid;
  spec.rows = 32;
  spec.cols = 32;
  spec.weights = WeightRange{1, 255};
  std::ostringstream log;
  Graph g = cmd_gen({spec, true, dir.file("a.g")}, log);
  cmd_gen({spec, true, dir.file("b.g")}, log);
  EXPECT_EQ(g.num_vertices(), 1024u);
  EXPECT_EQ(detail::read_file(dir.file("a.g")), detail::read_file(dir.file("b.g")));
  EXPECT_NE(log.str().find("n=1024"), std::string::npos);
  EXPECT_EQ(read_binary(dir.file("a.g")), g);
}

TEST(Commands, RunTwoCycle) {
  TempDir dir;
  detail::write_file(dir.file("cycle.el"), "0 1\n1 0\n");
  RunCommand cmd;
  cmd.graph_path = dir.file("cycle.el");
  cmd.values_out = dir.file("values.txt");
  std::ostringstream log;
  RunSummary s = cmd_run(cmd, log);
  EXPECT_TRUE(s.converged);
  EXPECT_NE(log.str().find("converged=true"), std::string::npos);
  EXPECT_EQ(detail::read_file(dir.file("values.txt")), "0 0.5\n1 0.5\n");
}

TEST(Commands, RunDelayedSsspOnPath) {
  TempDir dir;
  detail::write_file(dir.file("path.el"), "0 1 2\n1 2 3\n");
  RunCommand cmd;
  cmd.graph_path = dir.file("path.el");
  cmd.algorithm = Algorithm::kSssp;
  cmd.mode = Mode::delayed(16);
  cmd.threads = 2;
  cmd.values_out = dir.file("d.txt");
  std::ostringstream log;
  cmd_run(cmd, log);
  EXPECT_EQ(detail::read_file(dir.file("d.txt")), "0 0\n1 2\n2 5\n");
}

TEST(Commands, RunSsspNeedsWeights) {
  TempDir dir;
  detail::write_file(dir.file("cycle.el"), "0 1\n1 0\n");
  RunCommand cmd;
  cmd.graph_path = dir.file("cycle.el");
  cmd.algorithm = Algorithm::kSssp;
  std::ostringstream log;
  EXPECT_THROW(cmd_run(cmd, log), InvalidArgument);
}

TEST(Commands, SweepWritesBothFiles) {
  TempDir dir;
  SweepSpec s = small_sweep();
  s.modes = expand_modes({"sync", "delayed:32"}, {});
  s.trials = 2;
  s.out = dir.file("results.csv");
  std::ostringstream log;
  auto rows = cmd_sweep(s, log);
  EXPECT_EQ(rows.size(), 4u);
  EXPECT_EQ(parse_results_csv(detail::read_file(s.out)), rows);
  const std::string summary = detail::read_file(dir.file("results_summary.csv"));
  EXPECT_EQ(std::count(summary.begin(), summary.end(), '\n'), 3);
  s.graph_path = "also.g";
  EXPECT_THROW(cmd_sweep(s, log), InvalidArgument);
}

TEST(Commands, AccessReport) {
  TempDir dir;
  write_binary(testing::two_triangles(), dir.file("tri.g"));
  std::ostringstream log;
  auto r = cmd_access({dir.file("tri.g"), 2, dir.file("m.csv")}, log);
  EXPECT_DOUBLE_EQ(r.diagonal_fraction, 1.0);
  EXPECT_EQ(detail::read_file(dir.file("m.csv")), "worker,0,1\n0,6,0\n1,0,6\n");
  EXPECT_NE(log.str().find("diagonal_fraction=1.000000"), std::string::npos);
  EXPECT_NE(log.str().find("flagged_rows=2/2"), std::string::npos);
  auto one = cmd_access({dir.file("tri.g"), 1, ""}, log);
  EXPECT_DOUBLE_EQ(one.diagonal_fraction, 1.0);
}

TEST(Labels, GraphNames) {
  SweepSpec s;
  s.graph_path = "/data/road-usa.g";
  EXPECT_EQ(graph_label(s), "road-usa");
  GenSpec g;
  g.family = Family::kGrid;
  g.rows = 3;
  g.cols = 4;
  g.seed = 9;
  s.gen = g;
  EXPECT_EQ(graph_label(s), "grid-3x4-seed9");
  EXPECT_EQ(default_summary_path("out/r.csv"), "out/r_summary.csv");
}

}  // namespace
}  // namespace dagraph
