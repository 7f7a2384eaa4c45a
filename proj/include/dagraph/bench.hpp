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

// Benchmark driver commands behind the `dagraph` CLI: gen, run, sweep and
// access. Each command reports through an ostream so it can be tested
// without a process boundary.

#pragma once

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iomanip>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "dagraph/algorithms.hpp"
#include "dagraph/engine.hpp"
#include "dagraph/generators.hpp"
#include "dagraph/graph.hpp"
#include "dagraph/instrumentation.hpp"
#include "dagraph/io.hpp"
#include "dagraph/partition.hpp"
#include "dagraph/results_csv.hpp"

namespace dagraph {

enum class Algorithm { kPageRank, kSssp };

inline std::string to_string(Algorithm a) {
  return a == Algorithm::kPageRank ? "pagerank" : "sssp";
}

inline Algorithm parse_algorithm(const std::string& s) {
  if (s == "pagerank" || s == "pr") return Algorithm::kPageRank;
  if (s == "sssp" || s == "bf") return Algorithm::kSssp;
  throw InvalidArgument("unknown algorithm '" + s + "'");
}

inline ReadPolicy parse_read_policy(const std::string& s) {
  if (s == "global") return ReadPolicy::kGlobalOnly;
  if (s == "local" || s == "local-preferred") return ReadPolicy::kLocalPreferred;
  throw InvalidArgument("unknown read policy '" + s + "'");
}

/// "sync", "async", or "delayed" (needs `delta`).
inline Mode parse_mode(const std::string& s, std::optional<std::size_t> delta) {
  if (s == "sync" || s == "synchronous") return Mode::synchronous();
  if (s == "async" || s == "asynchronous") return Mode::asynchronous();
  if (s == "delayed") {
    if (!delta) throw InvalidArgument("delayed mode requires --delta");
    return Mode::delayed(*delta);
  }
  throw InvalidArgument("unknown mode '" + s + "'");
}

/// Powers of two from 16 to 32768 elements.
inline std::vector<std::size_t> default_deltas() {
  std::vector<std::size_t> d;
  for (std::size_t x = 16; x <= 32768; x *= 2) d.push_back(x);
  return d;
}

/// Expands mode tokens. "delayed" expands over `deltas`; "delayed:N" is a
/// single delta.
inline std::vector<Mode> expand_modes(const std::vector<std::string>& tokens,
                                      const std::vector<std::size_t>& deltas) {
  std::vector<Mode> modes;
  for (const auto& t : tokens) {
    if (t.rfind("delayed:", 0) == 0) {
      const std::string num = t.substr(8);
      std::size_t pos = 0;
      std::size_t d = 0;
      try {
        d = std::stoul(num, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos == 0 || pos != num.size())
        throw InvalidArgument("bad delta in mode '" + t + "'");
      modes.push_back(Mode::delayed(d));
    } else if (t == "delayed") {
      for (auto d : deltas) modes.push_back(Mode::delayed(d));
    } else {
      modes.push_back(parse_mode(t, std::nullopt));
    }
  }
  return modes;
}

/// Outcome of one engine run, independent of the value type.
struct RunSummary {
  std::size_t rounds = 0;
  double total_seconds = 0;
  double avg_round_seconds = 0;
  bool converged = false;
  std::vector<std::uint64_t> flushes;
  std::vector<std::string> values;  // formatted final values
};

inline RunSummary run_algorithm(const Graph& g, Algorithm alg,
                                const RunConfig& cfg, VertexId source,
                                bool keep_values = false) {
  auto summarize = [&](const auto& r) {
    RunSummary s;
    s.rounds = r.rounds;
    s.total_seconds = r.total_seconds();
    s.avg_round_seconds = r.avg_round_seconds();
    s.converged = r.converged;
    s.flushes = r.total_flushes;
    if (keep_values) {
      s.values.reserve(r.final_values.size());
      for (auto v : r.final_values) {
        std::ostringstream os;
        os << std::setprecision(std::numeric_limits<decltype(v)>::max_digits10)
           << v;
        s.values.push_back(os.str());
      }
    }
    return s;
  };
  if (alg == Algorithm::kPageRank)
    return summarize(run(g, PageRankKernel(g), cfg));
  return summarize(run(g, BellmanFordKernel(g, source), cfg));
}

// ---------------------------------------------------------------- gen

struct GenCommand {
  GenSpec spec;
  bool symmetrize = true;
  std::string out;
};

inline Graph cmd_gen(const GenCommand& cmd, std::ostream& log) {
  if (cmd.out.empty()) throw InvalidArgument("gen requires --out");
  Graph g = make_graph(cmd.spec, cmd.symmetrize);
  write_binary(g, cmd.out);
  log << "wrote " << cmd.out << ": n=" << g.num_vertices()
      << " m=" << g.num_edges() << " max_in_degree=" << max_in_degree(g)
      << " max_out_degree=" << max_out_degree(g)
      << " weighted=" << (g.weighted() ? "yes" : "no")
      << " symmetric=" << (g.symmetric() ? "yes" : "no") << "\n";
  return g;
}

// ---------------------------------------------------------------- run

struct RunCommand {
  std::string graph_path;
  Algorithm algorithm = Algorithm::kPageRank;
  Mode mode = Mode::synchronous();
  std::size_t threads = 1;
  ReadPolicy read_policy = ReadPolicy::kGlobalOnly;
  double epsilon = kDefaultEpsilon;
  VertexId source = 0;
  std::size_t max_iterations = 1000;
  std::string values_out;  // empty: no dump
};

inline RunConfig make_config(Algorithm alg, const Mode& mode, std::size_t threads,
                             ReadPolicy policy, double epsilon,
                             std::size_t max_iterations) {
  RunConfig cfg;
  cfg.mode = mode;
  cfg.num_workers = threads;
  cfg.read_policy = policy;
  cfg.stop = alg == Algorithm::kPageRank ? StoppingRule::pagerank_l1(epsilon)
                                         : StoppingRule::no_updates();
  cfg.max_iterations = max_iterations;
  return cfg;
}

inline RunSummary cmd_run(const RunCommand& cmd, std::ostream& log) {
  const RunConfig cfg = make_config(cmd.algorithm, cmd.mode, cmd.threads,
                                    cmd.read_policy, cmd.epsilon,
                                    cmd.max_iterations);
  const Graph g = load_graph(cmd.graph_path);
  RunSummary s = run_algorithm(g, cmd.algorithm, cfg, cmd.source,
                               !cmd.values_out.empty());
  log << "algorithm=" << to_string(cmd.algorithm)
      << " mode=" << to_string(cmd.mode);
  if (cmd.mode.kind() == ModeKind::kDelayed) log << " delta=" << cmd.mode.delta();
  log << " threads=" << cmd.threads
      << " read_policy=" << to_string(cmd.read_policy) << "\n"
      << "rounds=" << s.rounds << " total_seconds=" << std::fixed
      << std::setprecision(6) << s.total_seconds
      << " avg_round_seconds=" << s.avg_round_seconds
      << " converged=" << (s.converged ? "true" : "false") << "\n";
  log.unsetf(std::ios::floatfield);
  if (!cmd.values_out.empty()) {
    std::string text;
    for (std::size_t v = 0; v < s.values.size(); ++v)
      text += std::to_string(v) + " " + s.values[v] + "\n";
    detail::write_file(cmd.values_out, text);
  }
  return s;
}

// ---------------------------------------------------------------- sweep

struct SweepSpec {
  std::string graph_path;        // either a file...
  std::optional<GenSpec> gen;    // ...or a generator spec
  bool symmetrize = true;
  Algorithm algorithm = Algorithm::kPageRank;
  std::vector<std::size_t> threads = {1};
  std::vector<Mode> modes;
  std::vector<ReadPolicy> read_policies = {ReadPolicy::kGlobalOnly};
  std::size_t trials = 3;
  VertexId source = 0;
  double epsilon = kDefaultEpsilon;
  std::size_t max_iterations = 1000;
  std::string out;          // results CSV
  std::string summary_out;  // summary CSV; derived from `out` when empty
};

inline std::string graph_label(const SweepSpec& s) {
  if (s.gen) {
    const GenSpec& g = *s.gen;
    if (g.family == Family::kGrid)
      return "grid-" + std::to_string(g.rows) + "x" + std::to_string(g.cols) +
             "-seed" + std::to_string(g.seed);
    return to_string(g.family) + "-s" + std::to_string(g.scale) + "-ef" +
           std::to_string(g.edge_factor) + "-seed" + std::to_string(g.seed);
  }
  return std::filesystem::path(s.graph_path).stem().string();
}

/// Runs the full cartesian product modes x threads x read policies x trials
/// sequentially. A failing run becomes an "error" row and the sweep moves on.
inline std::vector<ResultRow> run_sweep(const SweepSpec& spec, const Graph& g,
                                        const std::string& label,
                                        std::ostream* log = nullptr) {
  if (spec.trials == 0) throw InvalidArgument("trials must be >= 1");
  if (spec.modes.empty()) throw InvalidArgument("sweep needs at least one mode");
  if (spec.threads.empty()) throw InvalidArgument("sweep needs thread counts");
  std::vector<ResultRow> rows;
  for (const Mode& mode : spec.modes) {
    for (std::size_t t : spec.threads) {
      for (ReadPolicy policy : spec.read_policies) {
        for (std::size_t trial = 0; trial < spec.trials; ++trial) {
          ResultRow row;
          row.graph = label;
          row.algorithm = to_string(spec.algorithm);
          row.mode = to_string(mode);
          if (mode.kind() == ModeKind::kDelayed) row.delta = mode.delta();
          row.threads = t;
          row.read_policy = to_string(policy);
          row.trial = trial;
          try {
            const RunConfig cfg = make_config(spec.algorithm, mode, t, policy,
                                              spec.epsilon, spec.max_iterations);
            const RunSummary s = run_algorithm(g, spec.algorithm, cfg, spec.source);
            row.set_timing(s.rounds, s.total_seconds);
            row.outcome = s.converged ? Outcome::kConverged : Outcome::kNotConverged;
          } catch (const std::exception& e) {
            row.set_timing(0, 0);
            row.outcome = Outcome::kError;
            if (log) *log << "run failed: " << format_result_row(row) << ": "
                          << e.what() << "\n";
          }
          if (log) *log << format_result_row(row) << "\n";
          rows.push_back(std::move(row));
        }
      }
    }
  }
  return rows;
}

/// Per-configuration aggregate over trials. Means and minimum cover
/// non-error trials only. Speedups compare mean total time against the sync
/// and async configurations with the same graph, algorithm, threads and read
/// policy.
struct SummaryRow {
  std::string graph, algorithm, mode;
  std::optional<std::size_t> delta;
  std::size_t threads = 1;
  std::string read_policy;
  std::size_t trials = 0;
  std::size_t failures = 0;
  double mean_rounds = 0;
  double mean_total_seconds = 0;
  double min_total_seconds = 0;
  double mean_avg_round_seconds = 0;
  std::optional<double> speedup_vs_sync;
  std::optional<double> speedup_vs_async;
};

inline constexpr std::string_view kSummaryHeader =
    "graph,algorithm,mode,delta,threads,read_policy,trials,failures,"
    "mean_rounds,mean_total_seconds,min_total_seconds,mean_avg_round_seconds,"
    "speedup_vs_sync,speedup_vs_async";

inline std::vector<SummaryRow> summarize_sweep(const std::vector<ResultRow>& rows) {
  using Key = std::tuple<std::string, std::string, std::string,
                         std::optional<std::size_t>, std::size_t, std::string>;
  std::vector<Key> order;
  std::map<Key, SummaryRow> groups;
  for (const auto& r : rows) {
    Key k{r.graph, r.algorithm, r.mode, r.delta, r.threads, r.read_policy};
    auto [it, inserted] = groups.try_emplace(k);
    SummaryRow& s = it->second;
    if (inserted) {
      order.push_back(k);
      s.graph = r.graph;
      s.algorithm = r.algorithm;
      s.mode = r.mode;
      s.delta = r.delta;
      s.threads = r.threads;
      s.read_policy = r.read_policy;
      s.min_total_seconds = std::numeric_limits<double>::infinity();
    }
    ++s.trials;
    if (r.outcome == Outcome::kError) {
      ++s.failures;
      continue;
    }
    s.mean_rounds += static_cast<double>(r.rounds);
    s.mean_total_seconds += r.total_seconds();
    s.mean_avg_round_seconds += r.avg_round_seconds();
    s.min_total_seconds = std::min(s.min_total_seconds, r.total_seconds());
  }
  for (auto& [k, s] : groups) {
    const std::size_t ok = s.trials - s.failures;
    if (ok == 0) {
      s.min_total_seconds = 0;
      continue;
    }
    s.mean_rounds /= static_cast<double>(ok);
    s.mean_total_seconds /= static_cast<double>(ok);
    s.mean_avg_round_seconds /= static_cast<double>(ok);
  }
  auto baseline = [&](const SummaryRow& s, const std::string& mode)
      -> std::optional<double> {
    auto it = groups.find(Key{s.graph, s.algorithm, mode, std::nullopt,
                              s.threads, s.read_policy});
    if (it == groups.end() || it->second.trials == it->second.failures)
      return std::nullopt;
    if (s.trials == s.failures || s.mean_total_seconds <= 0) return std::nullopt;
    return it->second.mean_total_seconds / s.mean_total_seconds;
  };
  std::vector<SummaryRow> out;
  for (const auto& k : order) {
    SummaryRow s = groups.at(k);
    s.speedup_vs_sync = baseline(s, "sync");
    s.speedup_vs_async = baseline(s, "async");
    out.push_back(std::move(s));
  }
  return out;
}

inline std::string format_summary_csv(const std::vector<SummaryRow>& rows) {
  auto fixed = [](double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, x);
    return std::string(buf);
  };
  std::string out(kSummaryHeader);
  out += '\n';
  for (const auto& s : rows) {
    out += s.graph + "," + s.algorithm + "," + s.mode + ",";
    if (s.delta) out += std::to_string(*s.delta);
    out += "," + std::to_string(s.threads) + "," + s.read_policy + "," +
           std::to_string(s.trials) + "," + std::to_string(s.failures) + "," +
           fixed(s.mean_rounds, 3) + "," + fixed(s.mean_total_seconds, 6) + "," +
           fixed(s.min_total_seconds, 6) + "," +
           fixed(s.mean_avg_round_seconds, 6) + ",";
    if (s.speedup_vs_sync) out += fixed(*s.speedup_vs_sync, 4);
    out += ",";
    if (s.speedup_vs_async) out += fixed(*s.speedup_vs_async, 4);
    out += '\n';
  }
  return out;
}

inline std::string default_summary_path(const std::string& out) {
  std::filesystem::path p(out);
  const std::string stem = p.stem().string();
  return (p.parent_path() / (stem + "_summary.csv")).string();
}

inline std::vector<ResultRow> cmd_sweep(const SweepSpec& spec, std::ostream& log) {
  if (spec.out.empty()) throw InvalidArgument("sweep requires --out");
  if (spec.gen.has_value() == !spec.graph_path.empty())
    throw InvalidArgument("sweep needs exactly one of --graph or --family");
  const Graph g = spec.gen ? make_graph(*spec.gen, spec.symmetrize)
                           : load_graph(spec.graph_path);
  const std::string label = graph_label(spec);
  log << "graph " << label << ": n=" << g.num_vertices()
      << " m=" << g.num_edges() << "\n";
  auto rows = run_sweep(spec, g, label, &log);
  detail::write_file(spec.out, format_results_csv(rows));
  const std::string summary =
      spec.summary_out.empty() ? default_summary_path(spec.out) : spec.summary_out;
  detail::write_file(summary, format_summary_csv(summarize_sweep(rows)));
  log << "wrote " << rows.size() << " rows to " << spec.out << " and summary to "
      << summary << "\n";
  return rows;
}

// ---------------------------------------------------------------- access

struct AccessCommand {
  std::string graph_path;
  std::size_t threads = 1;
  std::string out;  // CSV; empty: print only
};

inline LocalityReport cmd_access(const AccessCommand& cmd, std::ostream& log) {
  const Graph g = load_graph(cmd.graph_path);
  const Partition p = partition_by_indegree(g, cmd.threads);
  const AccessMatrix m = access_matrix(g, p);
  const LocalityReport r = locality_report(m);
  if (!cmd.out.empty()) detail::write_file(cmd.out, access_matrix_csv(m));
  log << "threads=" << cmd.threads << " reads=" << m.total()
      << " diagonal_fraction=" << std::fixed << std::setprecision(6)
      << r.diagonal_fraction << " threshold=" << r.threshold << "\n";
  log.unsetf(std::ios::floatfield);
  std::size_t flagged = 0;
  std::string rows;
  for (std::size_t i = 0; i < r.flagged.size(); ++i) {
    if (!r.flagged[i]) continue;
    ++flagged;
    rows += (rows.empty() ? "" : ",") + std::to_string(i);
  }
  log << "flagged_rows=" << flagged << "/" << r.flagged.size();
  if (!rows.empty()) log << " [" << rows << "]";
  log << "\n";
  return r;
}

}  // namespace dagraph
