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

// dagraph: generate graphs, run kernels, sweep configurations and analyze
// partition locality.
//
// Exit codes: 0 success, 1 usage error, 2 runtime failure.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dagraph/dagraph.hpp"

namespace {

using namespace dagraph;

// "lo:hi"
std::optional<WeightRange> parse_weights(const std::string& s) {
  if (s.empty() || s == "none") return std::nullopt;
  const auto colon = s.find(':');
  if (colon == std::string::npos)
    throw InvalidArgument("--weights expects lo:hi, got '" + s + "'");
  try {
    std::size_t p1 = 0, p2 = 0;
    const auto lo = std::stoull(s.substr(0, colon), &p1);
    const auto hi = std::stoull(s.substr(colon + 1), &p2);
    if (p1 != colon || p2 != s.size() - colon - 1 || lo > UINT32_MAX ||
        hi > UINT32_MAX)
      throw InvalidArgument("");
    if (lo > hi) throw InvalidArgument("--weights lo > hi");
    return WeightRange{static_cast<Weight>(lo), static_cast<Weight>(hi)};
  } catch (const InvalidArgument& e) {
    if (e.what()[0] != '\0') throw;
  } catch (const std::exception&) {
  }
  throw InvalidArgument("--weights expects lo:hi, got '" + s + "'");
}

struct GenFlags {
  std::string family;
  unsigned scale = 14;
  std::size_t rows = 0, cols = 0;
  unsigned edge_factor = 16;
  std::uint64_t seed = 1;
  std::string weights;
  bool directed = false;

  void add_to(CLI::App* app, bool required) {
    auto* f = app->add_option("--family", family, "rmat | uniform | grid");
    if (required) f->required();
    app->add_option("--scale", scale, "log2 vertex count (rmat, uniform)");
    app->add_option("--rows", rows, "grid rows");
    app->add_option("--cols", cols, "grid columns");
    app->add_option("--edge-factor", edge_factor, "edges per vertex");
    app->add_option("--seed", seed, "generator seed");
    app->add_option("--weights", weights, "edge weight range lo:hi");
    app->add_flag("--directed", directed, "do not symmetrize rmat/uniform edges");
  }

  GenSpec spec() const {
    GenSpec s;
    s.family = parse_family(family);
    s.scale = scale;
    s.rows = rows;
    s.cols = cols;
    s.edge_factor = edge_factor;
    s.seed = seed;
    s.weights = parse_weights(weights);
    if (s.family == Family::kGrid && (rows == 0 || cols == 0))
      throw InvalidArgument("grid needs --rows and --cols");
    return s;
  }
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto comma = s.find(',', start);
    const auto end = comma == std::string::npos ? s.size() : comma;
    if (end > start) out.push_back(s.substr(start, end - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Synchronous, asynchronous and delayed-asynchronous graph kernels"};
  app.require_subcommand(1);

  // gen
  GenFlags gen_flags;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "generate a graph in binary format");
  gen_flags.add_to(gen, true);
  gen->add_option("--out", gen_out, "output path")->required();

  // run
  std::string run_graph, run_alg = "pagerank", run_mode = "sync",
                         run_policy = "global", run_values;
  std::optional<std::size_t> run_delta;
  std::size_t run_threads = 1, run_max_iter = 1000;
  double run_eps = kDefaultEpsilon;
  VertexId run_source = 0;
  auto* runc = app.add_subcommand("run", "run one kernel once");
  runc->add_option("--graph", run_graph, "graph file (binary or edge list)")->required();
  runc->add_option("--algorithm", run_alg, "pagerank | sssp");
  runc->add_option("--mode", run_mode, "sync | async | delayed");
  runc->add_option("--delta", run_delta, "delay buffer size in elements");
  runc->add_option("--threads", run_threads, "worker count");
  runc->add_option("--read-policy", run_policy, "global | local");
  runc->add_option("--epsilon", run_eps, "PageRank L1 stopping threshold");
  runc->add_option("--source", run_source, "SSSP source vertex");
  runc->add_option("--max-iterations", run_max_iter, "round limit");
  runc->add_option("--out", run_values, "write final vertex values here");

  // sweep
  GenFlags sweep_gen;
  std::string sweep_graph, sweep_alg = "pagerank", sweep_modes = "sync,async,delayed",
                           sweep_deltas, sweep_threads = "1", sweep_policies = "global",
                           sweep_out, sweep_summary;
  std::size_t sweep_trials = 3, sweep_max_iter = 1000;
  double sweep_eps = kDefaultEpsilon;
  VertexId sweep_source = 0;
  auto* sweep = app.add_subcommand("sweep", "benchmark a mode x delta x thread grid");
  sweep->add_option("--graph", sweep_graph, "graph file");
  sweep_gen.add_to(sweep, false);
  sweep->add_option("--algorithm", sweep_alg, "pagerank | sssp");
  sweep->add_option("--modes", sweep_modes,
                    "comma list of sync, async, delayed, delayed:N");
  sweep->add_option("--deltas", sweep_deltas,
                    "comma list of deltas for 'delayed' (default 16..32768)");
  sweep->add_option("--threads", sweep_threads, "comma list of worker counts");
  sweep->add_option("--read-policies", sweep_policies, "comma list of global, local");
  sweep->add_option("--trials", sweep_trials, "trials per configuration");
  sweep->add_option("--source", sweep_source, "SSSP source vertex");
  sweep->add_option("--epsilon", sweep_eps, "PageRank L1 stopping threshold");
  sweep->add_option("--max-iterations", sweep_max_iter, "round limit");
  sweep->add_option("--out", sweep_out, "results CSV")->required();
  sweep->add_option("--summary", sweep_summary, "summary CSV (default <out>_summary.csv)");

  // access
  std::string access_graph, access_out;
  std::size_t access_threads = 1;
  auto* access = app.add_subcommand("access", "access matrix and locality report");
  access->add_option("--graph", access_graph, "graph file")->required();
  access->add_option("--threads", access_threads, "worker count");
  access->add_option("--out", access_out, "access matrix CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (*gen) {
      GenCommand cmd{gen_flags.spec(), !gen_flags.directed, gen_out};
      cmd_gen(cmd, std::cout);
    } else if (*runc) {
      RunCommand cmd;
      cmd.graph_path = run_graph;
      cmd.algorithm = parse_algorithm(run_alg);
      cmd.mode = parse_mode(run_mode, run_delta);
      cmd.threads = run_threads;
      cmd.read_policy = parse_read_policy(run_policy);
      cmd.epsilon = run_eps;
      cmd.source = run_source;
      cmd.max_iterations = run_max_iter;
      cmd.values_out = run_values;
      make_config(cmd.algorithm, cmd.mode, cmd.threads, cmd.read_policy,
                  cmd.epsilon, cmd.max_iterations);
      if (cmd.threads == 0) throw InvalidArgument("--threads must be >= 1");
      cmd_run(cmd, std::cout);
    } else if (*sweep) {
      SweepSpec spec;
      spec.graph_path = sweep_graph;
      if (!sweep_gen.family.empty()) {
        spec.gen = sweep_gen.spec();
        spec.symmetrize = !sweep_gen.directed;
      }
      spec.algorithm = parse_algorithm(sweep_alg);
      std::vector<std::size_t> deltas;
      for (const auto& d : split_list(sweep_deltas)) deltas.push_back(std::stoul(d));
      if (deltas.empty()) deltas = default_deltas();
      spec.modes = expand_modes(split_list(sweep_modes), deltas);
      spec.threads.clear();
      for (const auto& t : split_list(sweep_threads)) {
        spec.threads.push_back(std::stoul(t));
        if (spec.threads.back() == 0) throw InvalidArgument("thread count 0");
      }
      spec.read_policies.clear();
      for (const auto& p : split_list(sweep_policies))
        spec.read_policies.push_back(parse_read_policy(p));
      spec.trials = sweep_trials;
      spec.source = sweep_source;
      spec.epsilon = sweep_eps;
      spec.max_iterations = sweep_max_iter;
      spec.out = sweep_out;
      spec.summary_out = sweep_summary;
      if (spec.algorithm == Algorithm::kPageRank) StoppingRule::pagerank_l1(spec.epsilon);
      cmd_sweep(spec, std::cout);
    } else if (*access) {
      if (access_threads == 0) throw InvalidArgument("--threads must be >= 1");
      cmd_access({access_graph, access_threads, access_out}, std::cout);
    }
  } catch (const InvalidArgument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {  // std::stoul
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
