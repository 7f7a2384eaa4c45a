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

// Pull kernels for the engine: PageRank and Bellman-Ford SSSP.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "dagraph/graph.hpp"
#include "dagraph/stopping.hpp"
#include "dagraph/types.hpp"

namespace dagraph {

inline constexpr double kDefaultDamping = 0.85;
inline constexpr double kDefaultEpsilon = 1e-4;

/// score(v) = (1 - d)/n + d * sum_{u in in(v)} score(u) / out_degree(u)
///
/// Scores are stored as float and summed in double. Dangling vertices keep
/// their mass (it is not redistributed), so scores need not sum to one.
/// Initial score is 1/n.
class PageRankKernel {
 public:
  using value_type = float;
  static constexpr StopKind kStopKind = StopKind::kL1Delta;

  explicit PageRankKernel(const Graph& g, double damping = kDefaultDamping)
      : graph_(&g),
        damping_(damping),
        base_(g.num_vertices() == 0
                  ? 0.0
                  : (1.0 - damping) / static_cast<double>(g.num_vertices())),
        out_degree_(g.num_vertices()) {
    if (!(damping >= 0.0 && damping < 1.0))
      throw InvalidArgument("damping must be in [0, 1)");
    auto off = g.out_offsets();
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
      out_degree_[v] = static_cast<double>(off[v + 1] - off[v]);
  }

  float initial_value(VertexId) const {
    return static_cast<float>(1.0 / static_cast<double>(graph_->num_vertices()));
  }

  template <class Read>
  float update(VertexId v, float /*current*/, Read&& read) const {
    double sum = 0.0;
    for (VertexId u : graph_->in_neighbors(v)) {
      // u has the edge u->v, so its out-degree is at least one.
      sum += static_cast<double>(read(u)) / out_degree_[u];
    }
    return static_cast<float>(base_ + damping_ * sum);
  }

  double progress(float old_value, float new_value) const {
    return std::fabs(static_cast<double>(new_value) -
                     static_cast<double>(old_value));
  }

  double damping() const { return damping_; }

 private:
  const Graph* graph_;
  double damping_;
  double base_;
  std::vector<double> out_degree_;
};

/// min(a + b, INF) without wrapping.
inline Distance saturating_add(Distance a, Weight b) {
  const std::uint64_t s = std::uint64_t{a} + b;
  return s >= kInfDistance ? kInfDistance : static_cast<Distance>(s);
}

/// dist(v) = min(dist(v), min_{u in in(v)} dist(u) + w(u, v)); the source is
/// pinned at 0 and everything else starts at INF. progress() counts strictly
/// improving stores.
class BellmanFordKernel {
 public:
  using value_type = Distance;
  static constexpr StopKind kStopKind = StopKind::kNoUpdates;

  BellmanFordKernel(const Graph& g, VertexId source)
      : graph_(&g), source_(source) {
    if (!g.weighted())
      throw InvalidArgument("SSSP requires a weighted graph");
    if (source >= g.num_vertices())
      throw InvalidArgument("source vertex " + std::to_string(source) +
                            " out of range (n=" +
                            std::to_string(g.num_vertices()) + ")");
  }

  Distance initial_value(VertexId v) const {
    return v == source_ ? 0 : kInfDistance;
  }

  template <class Read>
  Distance update(VertexId v, Distance current, Read&& read) const {
    if (v == source_) return 0;
    Distance best = current;
    auto nbrs = graph_->in_neighbors(v);
    auto ws = graph_->in_weights(v);
    for (std::size_t k = 0; k < nbrs.size(); ++k)
      best = std::min(best, saturating_add(read(nbrs[k]), ws[k]));
    return best;
  }

  double progress(Distance old_value, Distance new_value) const {
    return new_value < old_value ? 1.0 : 0.0;
  }

  VertexId source() const { return source_; }

 private:
  const Graph* graph_;
  VertexId source_;
};

}  // namespace dagraph
