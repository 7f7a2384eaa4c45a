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
#include "dagraph/instrumentation.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <atomic>
#include <random>

#include "dagraph/algorithms.hpp"
#include "dagraph/generators.hpp"
#include "test_graphs.hpp"

namespace dagraph {
namespace {

using testing::k22;
using testing::random_graph;
using testing::two_triangles;

AccessMatrix matrix_of(std::vector<std::vector<std::uint64_t>> rows) {
  AccessMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) m.at(i, j) = rows[i][j];
  return m;
}

// Applies new_id = perm[old_id] to every endpoint.
Graph relabel(const Graph& g, const std::vector<VertexId>& perm) {
  EdgeList edges = edges_of(g);
  for (Edge& e : edges) e.src = perm[e.src], e.dst = perm[e.dst];
  return build_graph(edges, g.num_vertices(), false);
}

TEST(AccessMatrix, TwoTrianglesAreBlockLocal) {
  Graph g = two_triangles();
  auto m = access_matrix(g, Partition({0, 3, 6}));
  EXPECT_EQ(m, matrix_of({{6, 0}, {0, 6}}));
  auto r = locality_report(m);
  EXPECT_EQ(r.self_fraction, (std::vector<double>{1.0, 1.0}));
  EXPECT_EQ(r.flagged, (std::vector<bool>{true, true}));
  EXPECT_DOUBLE_EQ(r.diagonal_fraction, 1.0);
}

TEST(AccessMatrix, CompleteBipartiteIsAllCrossTraffic) {
  Graph g = k22();
  auto m = access_matrix(g, Partition({0, 2, 4}));
  EXPECT_EQ(m, matrix_of({{0, 4}, {4, 0}}));
  auto r = locality_report(m);
  EXPECT_EQ(r.self_fraction, (std::vector<double>{0.0, 0.0}));
  EXPECT_EQ(r.flagged, (std::vector<bool>{false, false}));
  EXPECT_DOUBLE_EQ(r.diagonal_fraction, 0.0);
}

TEST(AccessMatrix, SingleWorkerSeesEveryEdge) {
  Graph g = random_graph(50, 300, 4);
  auto m = access_matrix(g, partition_by_indegree(g, 1));
  EXPECT_EQ(m, matrix_of({{g.num_edges()}}));
}

TEST(AccessMatrix, RejectsMismatchedPartition) {
  Graph g = two_triangles();
  EXPECT_THROW(access_matrix(g, Partition({0, 2, 5})), InvalidArgument);
}

TEST(AccessMatrix, RowsAndTotalConserveInEdges) {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    Graph g = random_graph(40 + seed * 13, 300 + seed * 50, seed);
    for (std::size_t t : {1u, 2u, 3u, 8u, 32u}) {
      Partition p = partition_by_indegree(g, t);
      auto m = access_matrix(g, p);
      EXPECT_EQ(m.total(), g.num_edges());
      for (std::size_t i = 0; i < t; ++i) {
        std::uint64_t in = 0;
        const Block b = p.block(i);
        for (VertexId v = b.begin; v < b.end; ++v) in += g.in_degree(v);
        EXPECT_EQ(m.row_sum(i), in);
      }
    }
  }
}

// Counts reads made during one pull round, keyed by (owner of v, owner of u).
struct ReadCounter {
  using value_type = float;
  static constexpr StopKind kStopKind = StopKind::kL1Delta;
  const Graph* g;
  const Partition* p;
  std::vector<std::atomic<std::uint64_t>>* counts;

  float initial_value(VertexId) const { return 0; }
  double progress(float, float) const { return 1; }
  template <class Read>
  float update(VertexId v, float, Read&& read) const {
    const std::size_t t = p->num_workers();
    for (VertexId u : g->in_neighbors(v)) {
      (void)read(u);
      (*counts)[p->owner_of(v) * t + p->owner_of(u)]++;
    }
    return 0;
  }
};

TEST(AccessMatrix, StaticCountEqualsReadsInOneRound) {
  Graph g = random_graph(400, 3000, 77);
  for (std::size_t t : {2u, 5u}) {
    Partition p = partition_by_indegree(g, t);
    for (Mode mode : {Mode::synchronous(), Mode::asynchronous(), Mode::delayed(16)}) {
      std::vector<std::atomic<std::uint64_t>> counts(t * t);
      RunConfig c;
      c.mode = mode;
      c.num_workers = t;
      c.max_iterations = 1;
      run(g, ReadCounter{&g, &p, &counts}, c, p);
      auto m = access_matrix(g, p);
      for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < t; ++j) EXPECT_EQ(counts[i * t + j].load(), m.at(i, j));
    }
  }
}

TEST(AccessMatrix, ComponentsPerBlockGiveDiagonalMatrix) {
  // Four disjoint random components, then scatter their ids so that each
  // component lands in its own contiguous block after relabeling.
  std::mt19937_64 rng(5);
  const std::size_t parts = 4, size = 30;
  EdgeList edges;
  for (std::size_t c = 0; c < parts; ++c)
    for (int k = 0; k < 120; ++k) {
      VertexId a = static_cast<VertexId>(c * size + rng() % size);
      VertexId b = static_cast<VertexId>(c * size + rng() % size);
      edges.push_back({a, b, std::nullopt});
    }
  std::vector<VertexId> shuffle(parts * size);
  for (VertexId v = 0; v < shuffle.size(); ++v) shuffle[v] = v;
  std::shuffle(shuffle.begin(), shuffle.end(), rng);
  Graph scattered = relabel(build_graph(edges, parts * size, false), shuffle);
  EXPECT_LT(locality_report(access_matrix(scattered, Partition({0, 30, 60, 90, 120})))
                .diagonal_fraction,
            1.0);

  std::vector<VertexId> inverse(shuffle.size());
  for (VertexId v = 0; v < shuffle.size(); ++v) inverse[shuffle[v]] = v;
  Graph grouped = relabel(scattered, inverse);
  auto m = access_matrix(grouped, Partition({0, 30, 60, 90, 120}));
  for (std::size_t i = 0; i < parts; ++i)
    for (std::size_t j = 0; j < parts; ++j)
      if (i != j) {
        EXPECT_EQ(m.at(i, j), 0u);
      }
  EXPECT_DOUBLE_EQ(locality_report(m).diagonal_fraction, 1.0);
}

TEST(AccessMatrix, DiagonalFractionIgnoresRelabelingInsideBlocks) {
  std::mt19937_64 rng(11);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Graph g = random_graph(200, 1500, seed);
    Partition p = partition_by_indegree(g, 4);
    std::vector<VertexId> perm(g.num_vertices());
    for (VertexId v = 0; v < perm.size(); ++v) perm[v] = v;
    for (std::size_t i = 0; i < 4; ++i) {
      const Block b = p.block(i);
      std::shuffle(perm.begin() + b.begin, perm.begin() + b.end, rng);
    }
    Graph h = relabel(g, perm);
    auto a = access_matrix(g, p);
    auto b = access_matrix(h, p);
    EXPECT_EQ(a, b);
    EXPECT_DOUBLE_EQ(locality_report(a).diagonal_fraction,
                     locality_report(b).diagonal_fraction);
  }
}

TEST(LocalityReport, ThresholdIsOneOverT) {
  auto r = locality_report(matrix_of({{1, 3, 0, 0}, {0, 0, 0, 0}, {1, 1, 1, 1}, {5, 0, 0, 4}}));
  EXPECT_DOUBLE_EQ(r.threshold, 0.25);
  EXPECT_EQ(r.self_fraction, (std::vector<double>{0.25, 0.0, 0.25, 4.0 / 9}));
  EXPECT_EQ(r.flagged, (std::vector<bool>{true, false, true, true}));
  EXPECT_DOUBLE_EQ(r.diagonal_fraction, 6.0 / 17);
  for (double f : r.self_fraction) {
    EXPECT_GE(f, 0.0);
    EXPECT_LE(f, 1.0);
  }
}

TEST(LocalityReport, GridIsMoreLocalThanRmat) {
  GenSpec grid;
  grid.family = Family::kGrid;
  grid.rows = 64;
  grid.cols = 64;
  GenSpec rmat;
  rmat.family = Family::kRmat;
  rmat.scale = 12;
  Graph a = make_graph(grid), b = make_graph(rmat);
  const double grid_diag =
      locality_report(access_matrix(a, partition_by_indegree(a, 8))).diagonal_fraction;
  const double rmat_diag =
      locality_report(access_matrix(b, partition_by_indegree(b, 8))).diagonal_fraction;
  EXPECT_GT(grid_diag, 0.9);
  EXPECT_GT(grid_diag, rmat_diag);
}

TEST(AccessMatrixCsv, Layout) {
  EXPECT_EQ(access_matrix_csv(matrix_of({{6, 0}, {1, 12}})),
            "worker,0,1\n0,6,0\n1,1,12\n");
}

TEST(FlushAccounting, ExpectedCounts) {
  EXPECT_EQ(expected_flushes_per_round(Mode::delayed(16), 16), 1u);
  EXPECT_EQ(expected_flushes_per_round(Mode::delayed(16), 17), 2u);
  EXPECT_EQ(expected_flushes_per_round(Mode::delayed(64), 1000), 16u);
  EXPECT_EQ(expected_flushes_per_round(Mode::delayed(64), 0), 0u);
  EXPECT_EQ(expected_flushes_per_round(Mode::synchronous(), 1000), 1u);
  EXPECT_EQ(expected_flushes_per_round(Mode::asynchronous(), 1000), 0u);
}

TEST(FlushAccounting, SummarizesRun) {
  Graph g = random_graph(500, 4000, 3);
  RunConfig c;
  c.mode = Mode::delayed(32);
  c.num_workers = 3;
  auto r = run(g, PageRankKernel(g), c);
  FlushSummary s = flush_accounting(r);
  EXPECT_EQ(s.rounds, r.rounds);
  EXPECT_DOUBLE_EQ(s.total_seconds, r.total_seconds());
  EXPECT_NEAR(s.avg_round_seconds * static_cast<double>(s.rounds), s.total_seconds, 1e-12);
  ASSERT_EQ(s.block_sizes.size(), 3u);
  std::size_t covered = 0;
  for (std::size_t w = 0; w < 3; ++w) {
    covered += s.block_sizes[w];
    EXPECT_EQ(s.flushes_per_worker[w], s.rounds * ((s.block_sizes[w] + 31) / 32));
  }
  EXPECT_EQ(covered, g.num_vertices());
}

}  // namespace
}  // namespace dagraph
