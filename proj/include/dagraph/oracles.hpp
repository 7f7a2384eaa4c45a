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

// Serial reference solutions used to check engine output. They share nothing
// with the engine or the kernels beyond the Graph type.

#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <queue>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dagraph/graph.hpp"
#include "dagraph/types.hpp"

namespace dagraph {

/// Double-precision Jacobi power iteration of the PageRank recurrence
/// (push form over out-edges), run until the L1 change of an iteration is
/// at most `epsilon`.
inline std::vector<double> oracle_pagerank(const Graph& g, double damping = 0.85,
                                           double epsilon = 1e-10,
                                           std::size_t max_iterations = 100000) {
  const std::size_t n = g.num_vertices();
  if (n == 0) return {};
  const double teleport = (1.0 - damping) / static_cast<double>(n);
  std::vector<double> score(n, 1.0 / static_cast<double>(n));
  std::vector<double> next(n);
  for (std::size_t it = 0; it < max_iterations; ++it) {
    std::fill(next.begin(), next.end(), teleport);
    for (std::size_t u = 0; u < n; ++u) {
      auto out = g.out_neighbors(static_cast<VertexId>(u));
      if (out.empty()) continue;
      const double share = damping * score[u] / static_cast<double>(out.size());
      for (VertexId v : out) next[v] += share;
    }
    double change = 0;
    for (std::size_t v = 0; v < n; ++v) change += std::fabs(next[v] - score[v]);
    score.swap(next);
    if (change <= epsilon) return score;
  }
  throw std::runtime_error("oracle_pagerank did not converge");
}

/// Binary-heap Dijkstra over out-edges. Distances that would reach or exceed
/// the INF sentinel are reported as INF.
inline std::vector<Distance> oracle_dijkstra(const Graph& g, VertexId source) {
  const std::size_t n = g.num_vertices();
  if (!g.weighted() && g.num_edges() > 0)
    throw InvalidArgument("oracle_dijkstra needs weights");
  if (source >= n) throw InvalidArgument("source out of range");
  constexpr std::uint64_t kUnset = UINT64_MAX;
  std::vector<std::uint64_t> dist(n, kUnset);
  using Item = std::pair<std::uint64_t, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[source] = 0;
  heap.push({0, source});
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (d != dist[u]) continue;
    auto nbrs = g.out_neighbors(u);
    auto ws = g.out_weights(u);
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
      const std::uint64_t cand = d + ws[k];
      if (cand < dist[nbrs[k]]) {
        dist[nbrs[k]] = cand;
        heap.push({cand, nbrs[k]});
      }
    }
  }
  std::vector<Distance> out(n);
  for (std::size_t v = 0; v < n; ++v)
    out[v] = dist[v] >= kInfDistance ? kInfDistance : static_cast<Distance>(dist[v]);
  return out;
}

inline double l1_distance(std::span<const float> a, std::span<const double> b) {
  if (a.size() != b.size()) throw InvalidArgument("length mismatch");
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += std::fabs(static_cast<double>(a[i]) - b[i]);
  return s;
}

}  // namespace dagraph
