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

#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "dagraph/graph.hpp"
#include "dagraph/types.hpp"

namespace dagraph {

/// Half-open vertex range [begin, end).
struct Block {
  VertexId begin = 0;
  VertexId end = 0;

  std::size_t size() const { return end - begin; }
  bool contains(VertexId v) const { return v >= begin && v < end; }
  friend bool operator==(const Block&, const Block&) = default;
};

/// Static contiguous assignment of vertices to workers: worker i owns
/// [boundaries[i], boundaries[i+1]). Blocks may be empty.
class Partition {
 public:
  Partition() : boundaries_{0, 0} {}

  explicit Partition(std::vector<std::size_t> boundaries)
      : boundaries_(std::move(boundaries)) {
    if (boundaries_.size() < 2)
      throw InvalidArgument("partition needs at least one block");
    if (boundaries_.front() != 0)
      throw InvalidArgument("partition must start at vertex 0");
    if (!std::is_sorted(boundaries_.begin(), boundaries_.end()))
      throw InvalidArgument("partition boundaries must be nondecreasing");
  }

  std::size_t num_workers() const { return boundaries_.size() - 1; }
  std::size_t num_vertices() const { return boundaries_.back(); }
  std::span<const std::size_t> boundaries() const { return boundaries_; }

  Block block(std::size_t worker) const {
    return {static_cast<VertexId>(boundaries_[worker]),
            static_cast<VertexId>(boundaries_[worker + 1])};
  }

  std::size_t max_block_size() const {
    std::size_t best = 0;
    for (std::size_t i = 0; i < num_workers(); ++i)
      best = std::max(best, block(i).size());
    return best;
  }

  /// The unique worker whose block contains v. Empty blocks never own
  /// anything, so the last boundary <= v wins.
  std::size_t owner_of(VertexId v) const {
    if (v >= num_vertices())
      throw InvalidArgument("vertex " + std::to_string(v) +
                            " out of range (n=" +
                            std::to_string(num_vertices()) + ")");
    auto it = std::upper_bound(boundaries_.begin(), boundaries_.end(),
                               std::size_t{v});
    return static_cast<std::size_t>(it - boundaries_.begin()) - 1;
  }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<std::size_t> boundaries_;
};

/// Sum of in-degrees over each worker's block.
inline std::vector<EdgeIndex> block_loads(const Graph& g, const Partition& p) {
  auto off = g.in_offsets();
  std::vector<EdgeIndex> loads(p.num_workers());
  for (std::size_t i = 0; i < p.num_workers(); ++i) {
    const Block b = p.block(i);
    loads[i] = off[b.end] - off[b.begin];
  }
  return loads;
}

/// Greedy prefix cut over vertex ids: block i closes at (and includes) the
/// first vertex whose cumulative in-degree reaches (i+1)*m/T. With no edges
/// at all, vertices are split evenly by count instead.
inline Partition partition_by_indegree(const Graph& g, std::size_t num_workers) {
  if (num_workers == 0)
    throw InvalidArgument("partition needs at least one worker");
  const std::size_t n = g.num_vertices();
  const EdgeIndex m = g.num_edges();
  std::vector<std::size_t> b(num_workers + 1, 0);
  b[num_workers] = n;
  if (m == 0) {
    for (std::size_t i = 1; i < num_workers; ++i) b[i] = i * n / num_workers;
    return Partition(std::move(b));
  }
  // in_offsets is the inclusive prefix sum of in-degree shifted by one:
  // cumulative load through vertex v is off[v + 1]. Compare cum * T >= i * m
  // to stay in integers.
  auto off = g.in_offsets();
  std::size_t v = 0;
  for (std::size_t i = 1; i < num_workers; ++i) {
    const unsigned __int128 target = static_cast<unsigned __int128>(i) * m;
    while (v < n &&
           static_cast<unsigned __int128>(off[v + 1]) * num_workers < target)
      ++v;
    // v stays put: a heavy vertex can satisfy several targets, leaving the
    // blocks in between empty.
    b[i] = std::min(n, v + 1);
  }
  return Partition(std::move(b));
}

}  // namespace dagraph
