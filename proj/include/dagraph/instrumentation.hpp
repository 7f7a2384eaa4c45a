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

// Static communication analysis of a partitioned graph, plus flush and round
// accounting over run results.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dagraph/engine.hpp"
#include "dagraph/graph.hpp"
#include "dagraph/partition.hpp"
#include "dagraph/types.hpp"

namespace dagraph {

/// counts(i, j): in-edges u->v with v owned by worker i and u owned by
/// worker j, i.e. the reads worker i makes of worker j's values in one pull
/// round. Pull kernels read every in-neighbor exactly once per round, so the
/// static count equals the runtime count.
class AccessMatrix {
 public:
  explicit AccessMatrix(std::size_t workers = 0)
      : workers_(workers), counts_(workers * workers, 0) {}

  std::size_t num_workers() const { return workers_; }
  std::uint64_t& at(std::size_t reader, std::size_t owner) {
    return counts_[reader * workers_ + owner];
  }
  std::uint64_t at(std::size_t reader, std::size_t owner) const {
    return counts_[reader * workers_ + owner];
  }
  std::uint64_t row_sum(std::size_t reader) const {
    std::uint64_t s = 0;
    for (std::size_t j = 0; j < workers_; ++j) s += at(reader, j);
    return s;
  }
  std::uint64_t total() const {
    std::uint64_t s = 0;
    for (auto c : counts_) s += c;
    return s;
  }

  friend bool operator==(const AccessMatrix&, const AccessMatrix&) = default;

 private:
  std::size_t workers_;
  std::vector<std::uint64_t> counts_;
};

inline AccessMatrix access_matrix(const Graph& g, const Partition& p) {
  if (p.num_vertices() != g.num_vertices())
    throw InvalidArgument("partition covers " +
                          std::to_string(p.num_vertices()) +
                          " vertices but graph has " +
                          std::to_string(g.num_vertices()));
  const std::size_t t = p.num_workers();
  std::vector<std::uint32_t> owner(g.num_vertices());
  for (std::size_t i = 0; i < t; ++i) {
    const Block b = p.block(i);
    for (VertexId v = b.begin; v < b.end; ++v)
      owner[v] = static_cast<std::uint32_t>(i);
  }
  AccessMatrix m(t);
  for (std::size_t i = 0; i < t; ++i) {
    const Block b = p.block(i);
    for (VertexId v = b.begin; v < b.end; ++v)
      for (VertexId u : g.in_neighbors(v)) ++m.at(i, owner[u]);
  }
  return m;
}

struct LocalityReport {
  /// counts(i, i) / row_sum(i); 0 for rows without reads.
  std::vector<double> self_fraction;
  /// self_fraction >= threshold, never set for rows without reads.
  std::vector<bool> flagged;
  double threshold = 0;
  /// Share of all reads that stay inside the reader's own block.
  double diagonal_fraction = 0;
};

/// The flag threshold is 1/T: the share a row would get from itself if its
/// reads were spread evenly over all workers.
inline LocalityReport locality_report(const AccessMatrix& m) {
  const std::size_t t = m.num_workers();
  LocalityReport r;
  r.threshold = t == 0 ? 0.0 : 1.0 / static_cast<double>(t);
  r.self_fraction.resize(t, 0.0);
  r.flagged.resize(t, false);
  std::uint64_t diag = 0;
  for (std::size_t i = 0; i < t; ++i) {
    diag += m.at(i, i);
    const std::uint64_t row = m.row_sum(i);
    if (row == 0) continue;
    r.self_fraction[i] =
        static_cast<double>(m.at(i, i)) / static_cast<double>(row);
    r.flagged[i] = r.self_fraction[i] >= r.threshold;
  }
  const std::uint64_t total = m.total();
  r.diagonal_fraction =
      total == 0 ? 0.0 : static_cast<double>(diag) / static_cast<double>(total);
  return r;
}

/// Row-major CSV: header "worker,0,1,...,T-1", then one line per reading
/// worker starting with its id.
inline std::string access_matrix_csv(const AccessMatrix& m) {
  std::string out = "worker";
  for (std::size_t j = 0; j < m.num_workers(); ++j)
    out += "," + std::to_string(j);
  out += '\n';
  for (std::size_t i = 0; i < m.num_workers(); ++i) {
    out += std::to_string(i);
    for (std::size_t j = 0; j < m.num_workers(); ++j)
      out += "," + std::to_string(m.at(i, j));
    out += '\n';
  }
  return out;
}

/// Flushes one worker performs per round for a block of `block_size`
/// vertices: ceil(B / delta) when delayed, one whole-block write-out when
/// synchronous, none when asynchronous.
inline std::uint64_t expected_flushes_per_round(const Mode& mode,
                                                std::size_t block_size) {
  switch (mode.kind()) {
    case ModeKind::kDelayed:
      return (block_size + mode.delta() - 1) / mode.delta();
    case ModeKind::kSynchronous:
      return block_size > 0 ? 1 : 0;
    case ModeKind::kAsynchronous:
      return 0;
  }
  return 0;
}

struct FlushSummary {
  std::size_t rounds = 0;
  double total_seconds = 0;
  double avg_round_seconds = 0;
  std::vector<std::uint64_t> flushes_per_worker;
  std::vector<std::size_t> block_sizes;
};

template <class T>
FlushSummary flush_accounting(const RunResult<T>& r) {
  FlushSummary s;
  s.rounds = r.rounds;
  s.total_seconds = r.total_seconds();
  s.avg_round_seconds = r.avg_round_seconds();
  s.flushes_per_worker = r.total_flushes;
  for (std::size_t w = 0; w < r.partition.num_workers(); ++w)
    s.block_sizes.push_back(r.partition.block(w).size());
  return s;
}

}  // namespace dagraph
