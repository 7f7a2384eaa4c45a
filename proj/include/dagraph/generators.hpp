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

// Seeded synthetic graph families: RMAT (Kronecker-like, skewed degrees),
// uniform random (flat degrees) and 2D grids (high diameter, low degree).
// Output is a pure function of the GenSpec.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dagraph/graph.hpp"
#include "dagraph/types.hpp"

namespace dagraph {

enum class Family { kRmat, kUniform, kGrid };

inline std::string to_string(Family f) {
  switch (f) {
    case Family::kRmat: return "rmat";
    case Family::kUniform: return "uniform";
    case Family::kGrid: return "grid";
  }
  return "?";
}

inline Family parse_family(const std::string& s) {
  if (s == "rmat" || s == "kron") return Family::kRmat;
  if (s == "uniform" || s == "urand") return Family::kUniform;
  if (s == "grid" || s == "road") return Family::kGrid;
  throw InvalidArgument("unknown graph family '" + s + "'");
}

struct WeightRange {
  Weight lo = 1;
  Weight hi = 255;
};

struct GenSpec {
  Family family = Family::kRmat;
  unsigned scale = 14;        // log2 vertex count (rmat, uniform)
  std::size_t rows = 0;       // grid only
  std::size_t cols = 0;       // grid only
  unsigned edge_factor = 16;  // generated edges per vertex (rmat, uniform)
  std::uint64_t seed = 1;
  std::optional<WeightRange> weights;
};

struct GeneratedEdges {
  EdgeList edges;
  std::size_t num_vertices = 0;
};

/// Counter-based generator: every draw is a hash of (seed, stream, counter),
/// so any edge can be generated independently of the others.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : key_(mix(seed ^ 0x6a09e667f3bcc909ULL)) {}

  std::uint64_t bits(std::uint64_t stream, std::uint64_t counter) const {
    return mix(mix(key_ ^ mix(stream + kGolden)) + counter * kGolden);
  }

  /// Uniform double in [0, 1).
  double uniform(std::uint64_t stream, std::uint64_t counter) const {
    return static_cast<double>(bits(stream, counter) >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t stream, std::uint64_t counter,
                      std::uint64_t bound) const {
    const unsigned __int128 wide =
        static_cast<unsigned __int128>(bits(stream, counter)) * bound;
    return static_cast<std::uint64_t>(wide >> 64);
  }

 private:
  static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

  // splitmix64 finalizer
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t key_;
};

namespace detail {

// Stream ids reserved for non-edge draws.
inline constexpr std::uint64_t kPermutationStream = 0xfeedULL << 48;

inline void validate_random_spec(const GenSpec& spec) {
  if (spec.scale < 1)
    throw InvalidArgument("scale must be >= 1");
  if (spec.scale > 32)
    throw InvalidArgument("scale " + std::to_string(spec.scale) +
                          " too large for 32-bit vertex ids");
  if (spec.edge_factor < 1)
    throw InvalidArgument("edge_factor must be >= 1");
  const unsigned __int128 m =
      static_cast<unsigned __int128>(spec.edge_factor) << spec.scale;
  if (m > static_cast<unsigned __int128>(SIZE_MAX / sizeof(Edge)))
    throw InvalidArgument("edge count too large for address space");
  if (spec.weights && spec.weights->lo > spec.weights->hi)
    throw InvalidArgument("weight range lo > hi");
}

}  // namespace detail

/// Gives every edge a uniform weight in [lo, hi]. The draw is keyed on the
/// unordered endpoint pair, so (u,v) and (v,u) always get the same weight.
inline EdgeList assign_weights(EdgeList edges, std::uint64_t seed,
                               WeightRange range) {
  if (range.lo > range.hi) throw InvalidArgument("weight range lo > hi");
  const CounterRng rng(seed ^ 0x5745494748545321ULL);
  const std::uint64_t span = std::uint64_t{range.hi} - range.lo + 1;
  for (Edge& e : edges) {
    const std::uint64_t a = std::min(e.src, e.dst);
    const std::uint64_t b = std::max(e.src, e.dst);
    e.weight = static_cast<Weight>(range.lo + rng.below((a << 32) | b, 0, span));
  }
  return edges;
}

/// RMAT with (a, b, c, d) = (0.57, 0.19, 0.19, 0.05). Vertex ids are shuffled
/// afterwards by a seeded permutation so hubs are not clustered at low ids.
inline GeneratedEdges gen_rmat(const GenSpec& spec) {
  if (spec.family != Family::kRmat)
    throw InvalidArgument("gen_rmat requires family rmat");
  detail::validate_random_spec(spec);
  constexpr double kA = 0.57, kB = 0.19, kC = 0.19;
  const std::size_t n = std::size_t{1} << spec.scale;
  const std::size_t m = std::size_t{spec.edge_factor} << spec.scale;
  const CounterRng rng(spec.seed);

  std::vector<VertexId> perm(n);
  std::iota(perm.begin(), perm.end(), VertexId{0});
  for (std::size_t i = n - 1; i > 0; --i) {
    const auto j = rng.below(detail::kPermutationStream, i, i + 1);
    std::swap(perm[i], perm[j]);
  }

  GeneratedEdges out;
  out.num_vertices = n;
  out.edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::uint64_t src = 0, dst = 0;
    for (unsigned level = 0; level < spec.scale; ++level) {
      const double r = rng.uniform(i, level);
      src <<= 1;
      dst <<= 1;
      if (r < kA) {
      } else if (r < kA + kB) {
        dst |= 1;
      } else if (r < kA + kB + kC) {
        src |= 1;
      } else {
        src |= 1;
        dst |= 1;
      }
    }
    out.edges.push_back({perm[src], perm[dst], std::nullopt});
  }
  if (spec.weights)
    out.edges = assign_weights(std::move(out.edges), spec.seed, *spec.weights);
  return out;
}

/// Both endpoints of each edge drawn uniformly from [0, 2^scale).
inline GeneratedEdges gen_uniform(const GenSpec& spec) {
  if (spec.family != Family::kUniform)
    throw InvalidArgument("gen_uniform requires family uniform");
  detail::validate_random_spec(spec);
  const std::size_t n = std::size_t{1} << spec.scale;
  const std::size_t m = std::size_t{spec.edge_factor} << spec.scale;
  const CounterRng rng(spec.seed);
  GeneratedEdges out;
  out.num_vertices = n;
  out.edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    out.edges.push_back({static_cast<VertexId>(rng.below(i, 0, n)),
                         static_cast<VertexId>(rng.below(i, 1, n)),
                         std::nullopt});
  }
  if (spec.weights)
    out.edges = assign_weights(std::move(out.edges), spec.seed, *spec.weights);
  return out;
}

/// 4-connected rows x cols lattice with both directions of every edge.
/// Vertex (r, c) has id r * cols + c.
inline GeneratedEdges gen_grid(std::size_t rows, std::size_t cols,
                               const GenSpec& spec) {
  if (rows == 0 || cols == 0)
    throw InvalidArgument("grid dimensions must be nonzero");
  if (rows * cols < 2)
    throw InvalidArgument("grid needs at least 2 vertices");
  if (rows * cols > Graph::kMaxVertices)
    throw InvalidArgument("grid too large for 32-bit vertex ids");
  if (spec.weights && spec.weights->lo > spec.weights->hi)
    throw InvalidArgument("weight range lo > hi");
  GeneratedEdges out;
  out.num_vertices = rows * cols;
  out.edges.reserve(2 * (rows * (cols - 1) + cols * (rows - 1)));
  auto id = [cols](std::size_t r, std::size_t c) {
    return static_cast<VertexId>(r * cols + c);
  };
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) {
        out.edges.push_back({id(r, c), id(r, c + 1), std::nullopt});
        out.edges.push_back({id(r, c + 1), id(r, c), std::nullopt});
      }
      if (r + 1 < rows) {
        out.edges.push_back({id(r, c), id(r + 1, c), std::nullopt});
        out.edges.push_back({id(r + 1, c), id(r, c), std::nullopt});
      }
    }
  }
  if (spec.weights)
    out.edges = assign_weights(std::move(out.edges), spec.seed, *spec.weights);
  return out;
}

inline GeneratedEdges generate(const GenSpec& spec) {
  switch (spec.family) {
    case Family::kRmat: return gen_rmat(spec);
    case Family::kUniform: return gen_uniform(spec);
    case Family::kGrid: return gen_grid(spec.rows, spec.cols, spec);
  }
  throw InvalidArgument("unknown family");
}

/// Generates and builds in one step. Grids are symmetric by construction.
inline Graph make_graph(const GenSpec& spec, bool symmetrize = true) {
  GeneratedEdges g = generate(spec);
  return build_graph(g.edges, g.num_vertices,
                     symmetrize || spec.family == Family::kGrid);
}

}  // namespace dagraph
