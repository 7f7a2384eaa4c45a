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
#include <cassert>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dagraph/types.hpp"

namespace dagraph {

struct Edge {
  VertexId src = 0;
  VertexId dst = 0;
  std::optional<Weight> weight;

  friend bool operator==(const Edge&, const Edge&) = default;
};

using EdgeList = std::vector<Edge>;

/// Immutable directed graph stored as both a forward CSR (out-edges) and its
/// transpose (in-edges), so pull kernels can walk incoming edges directly.
/// Neighbor lists are sorted ascending and free of duplicates. When weighted,
/// each adjacency array has a parallel weight array.
class Graph {
 public:
  Graph() : out_offsets_(1, 0), in_offsets_(1, 0) {}

  /// Builds a graph from a forward CSR, validating every invariant and
  /// recomputing the transpose. Throws FormatError on any violation.
  static Graph from_out_csr(std::size_t num_vertices,
                            std::vector<EdgeIndex> offsets,
                            std::vector<VertexId> adjacency,
                            std::optional<std::vector<Weight>> weights,
                            bool symmetric) {
    if (num_vertices > kMaxVertices)
      throw FormatError("vertex count " + std::to_string(num_vertices) +
                        " exceeds 32-bit id space");
    if (offsets.size() != num_vertices + 1)
      throw FormatError("offset array has " + std::to_string(offsets.size()) +
                        " entries, expected " +
                        std::to_string(num_vertices + 1));
    if (offsets.front() != 0)
      throw FormatError("first CSR offset must be 0");
    for (std::size_t v = 0; v < num_vertices; ++v) {
      if (offsets[v] > offsets[v + 1])
        throw FormatError("CSR offsets decrease at vertex " +
                          std::to_string(v));
    }
    if (offsets.back() != adjacency.size())
      throw FormatError("final CSR offset " + std::to_string(offsets.back()) +
                        " does not match edge count " +
                        std::to_string(adjacency.size()));
    if (weights && weights->size() != adjacency.size())
      throw FormatError("weight array length does not match edge count");
    for (std::size_t v = 0; v < num_vertices; ++v) {
      for (EdgeIndex e = offsets[v]; e < offsets[v + 1]; ++e) {
        if (adjacency[e] >= num_vertices)
          throw FormatError("neighbor id " + std::to_string(adjacency[e]) +
                            " out of range at vertex " + std::to_string(v));
        if (e > offsets[v] && adjacency[e - 1] >= adjacency[e])
          throw FormatError("neighbor list of vertex " + std::to_string(v) +
                            " is not strictly ascending");
      }
    }

    Graph g;
    g.num_vertices_ = num_vertices;
    g.out_offsets_ = std::move(offsets);
    g.out_adjacency_ = std::move(adjacency);
    g.weighted_ = weights.has_value();
    if (weights) g.out_weights_ = std::move(*weights);
    g.symmetric_ = symmetric;
    g.rebuild_transpose();
    if (symmetric && !g.check_symmetric())
      throw FormatError("graph flagged symmetric but has an unpaired edge");
    return g;
  }

  std::size_t num_vertices() const { return num_vertices_; }
  EdgeIndex num_edges() const { return out_adjacency_.size(); }
  bool weighted() const { return weighted_; }
  bool symmetric() const { return symmetric_; }

  std::size_t out_degree(VertexId v) const {
    check_vertex(v);
    return out_offsets_[v + 1] - out_offsets_[v];
  }
  std::size_t in_degree(VertexId v) const {
    check_vertex(v);
    return in_offsets_[v + 1] - in_offsets_[v];
  }

  std::span<const VertexId> out_neighbors(VertexId v) const {
    assert(v < num_vertices_);
    return {out_adjacency_.data() + out_offsets_[v],
            out_adjacency_.data() + out_offsets_[v + 1]};
  }
  std::span<const VertexId> in_neighbors(VertexId v) const {
    assert(v < num_vertices_);
    return {in_adjacency_.data() + in_offsets_[v],
            in_adjacency_.data() + in_offsets_[v + 1]};
  }
  /// Empty when the graph is unweighted.
  std::span<const Weight> out_weights(VertexId v) const {
    if (!weighted_) return {};
    return {out_weights_.data() + out_offsets_[v],
            out_weights_.data() + out_offsets_[v + 1]};
  }
  std::span<const Weight> in_weights(VertexId v) const {
    if (!weighted_) return {};
    return {in_weights_.data() + in_offsets_[v],
            in_weights_.data() + in_offsets_[v + 1]};
  }

  // Raw CSR arrays.
  std::span<const EdgeIndex> out_offsets() const { return out_offsets_; }
  std::span<const VertexId> out_adjacency() const { return out_adjacency_; }
  std::span<const Weight> out_weight_array() const { return out_weights_; }
  std::span<const EdgeIndex> in_offsets() const { return in_offsets_; }
  std::span<const VertexId> in_adjacency() const { return in_adjacency_; }
  std::span<const Weight> in_weight_array() const { return in_weights_; }

  /// Exchanges the roles of out- and in-edges.
  friend Graph transpose(const Graph& g) {
    Graph t = g;
    std::swap(t.out_offsets_, t.in_offsets_);
    std::swap(t.out_adjacency_, t.in_adjacency_);
    std::swap(t.out_weights_, t.in_weights_);
    return t;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

  static constexpr std::size_t kMaxVertices = std::size_t{1} << 32;

 private:
  void check_vertex(VertexId v) const {
    if (v >= num_vertices_)
      throw InvalidArgument("vertex " + std::to_string(v) +
                            " out of range (n=" +
                            std::to_string(num_vertices_) + ")");
  }

  // Counting-sort transpose. Sources are visited in ascending order, so every
  // in-neighbor list comes out sorted.
  void rebuild_transpose() {
    const std::size_t n = num_vertices_;
    in_offsets_.assign(n + 1, 0);
    for (VertexId dst : out_adjacency_) ++in_offsets_[dst + 1];
    for (std::size_t v = 0; v < n; ++v) in_offsets_[v + 1] += in_offsets_[v];
    in_adjacency_.resize(out_adjacency_.size());
    if (weighted_) in_weights_.resize(out_adjacency_.size());
    std::vector<EdgeIndex> cursor(in_offsets_.begin(), in_offsets_.end() - 1);
    for (std::size_t u = 0; u < n; ++u) {
      for (EdgeIndex e = out_offsets_[u]; e < out_offsets_[u + 1]; ++e) {
        const EdgeIndex slot = cursor[out_adjacency_[e]]++;
        in_adjacency_[slot] = static_cast<VertexId>(u);
        if (weighted_) in_weights_[slot] = out_weights_[e];
      }
    }
  }

  bool check_symmetric() const {
    for (std::size_t u = 0; u < num_vertices_; ++u) {
      for (EdgeIndex e = out_offsets_[u]; e < out_offsets_[u + 1]; ++e) {
        const VertexId v = out_adjacency_[e];
        auto back = out_neighbors(v);
        auto it = std::lower_bound(back.begin(), back.end(),
                                   static_cast<VertexId>(u));
        if (it == back.end() || *it != u) return false;
        if (weighted_) {
          const auto pos = out_offsets_[v] +
                           static_cast<EdgeIndex>(it - back.begin());
          if (out_weights_[pos] != out_weights_[e]) return false;
        }
      }
    }
    return true;
  }

  std::size_t num_vertices_ = 0;
  bool weighted_ = false;
  bool symmetric_ = false;
  std::vector<EdgeIndex> out_offsets_;
  std::vector<VertexId> out_adjacency_;
  std::vector<Weight> out_weights_;
  std::vector<EdgeIndex> in_offsets_;
  std::vector<VertexId> in_adjacency_;
  std::vector<Weight> in_weights_;
};

/// Builds a graph from an edge list. With `symmetrize`, every reverse edge is
/// added first. Duplicate (src, dst) pairs collapse to one edge carrying the
/// minimum weight. Either every edge is weighted or none is.
inline Graph build_graph(const EdgeList& edges, std::size_t num_vertices,
                         bool symmetrize) {
  if (num_vertices > Graph::kMaxVertices)
    throw InvalidArgument("vertex count exceeds 32-bit id space");
  const bool weighted = !edges.empty() && edges.front().weight.has_value();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.src >= num_vertices || e.dst >= num_vertices)
      throw InvalidArgument("edge " + std::to_string(i) + " (" +
                            std::to_string(e.src) + "," +
                            std::to_string(e.dst) +
                            ") has a vertex id >= " +
                            std::to_string(num_vertices));
    if (e.weight.has_value() != weighted)
      throw InvalidArgument("edge list mixes weighted and unweighted edges");
  }

  struct Packed {
    VertexId src, dst;
    Weight w;
  };
  std::vector<Packed> all;
  all.reserve(symmetrize ? 2 * edges.size() : edges.size());
  for (const Edge& e : edges) {
    const Weight w = e.weight.value_or(0);
    all.push_back({e.src, e.dst, w});
    if (symmetrize) all.push_back({e.dst, e.src, w});
  }
  std::sort(all.begin(), all.end(), [](const Packed& a, const Packed& b) {
    if (a.src != b.src) return a.src < b.src;
    if (a.dst != b.dst) return a.dst < b.dst;
    return a.w < b.w;
  });
  // First of each run has the minimum weight.
  auto last = std::unique(all.begin(), all.end(),
                          [](const Packed& a, const Packed& b) {
                            return a.src == b.src && a.dst == b.dst;
                          });
  all.erase(last, all.end());

  std::vector<EdgeIndex> offsets(num_vertices + 1, 0);
  std::vector<VertexId> adjacency;
  adjacency.reserve(all.size());
  std::vector<Weight> weights;
  if (weighted) weights.reserve(all.size());
  for (const Packed& p : all) {
    ++offsets[p.src + 1];
    adjacency.push_back(p.dst);
    if (weighted) weights.push_back(p.w);
  }
  for (std::size_t v = 0; v < num_vertices; ++v) offsets[v + 1] += offsets[v];

  std::optional<std::vector<Weight>> w;
  if (weighted) w = std::move(weights);
  return Graph::from_out_csr(num_vertices, std::move(offsets),
                             std::move(adjacency), std::move(w), symmetrize);
}

/// All out-edges in (src, dst) order.
inline EdgeList edges_of(const Graph& g) {
  EdgeList out;
  out.reserve(g.num_edges());
  for (std::size_t u = 0; u < g.num_vertices(); ++u) {
    const auto v = static_cast<VertexId>(u);
    auto nbrs = g.out_neighbors(v);
    auto ws = g.out_weights(v);
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
      Edge e{v, nbrs[k], std::nullopt};
      if (g.weighted()) e.weight = ws[k];
      out.push_back(e);
    }
  }
  return out;
}

inline std::size_t max_in_degree(const Graph& g) {
  std::size_t best = 0;
  auto off = g.in_offsets();
  for (std::size_t v = 0; v < g.num_vertices(); ++v)
    best = std::max<std::size_t>(best, off[v + 1] - off[v]);
  return best;
}

inline std::size_t max_out_degree(const Graph& g) {
  std::size_t best = 0;
  auto off = g.out_offsets();
  for (std::size_t v = 0; v < g.num_vertices(); ++v)
    best = std::max<std::size_t>(best, off[v + 1] - off[v]);
  return best;
}

}  // namespace dagraph
