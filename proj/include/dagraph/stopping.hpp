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

#include <cstdint>
#include <string>

#include "dagraph/types.hpp"

namespace dagraph {

enum class StopKind {
  kL1Delta,    // summed |new - old| over all vertices
  kNoUpdates,  // count of strictly improving stores
};

/// PageRank stops once the total absolute score change of a round is at most
/// epsilon (inclusive).
inline bool pr_stop(double total_l1_delta, double epsilon) {
  return total_l1_delta <= epsilon;
}

/// SSSP stops after a round in which no distance improved.
inline bool sssp_stop(std::uint64_t updates_this_round) {
  return updates_this_round == 0;
}

class StoppingRule {
 public:
  static StoppingRule pagerank_l1(double epsilon) {
    if (!(epsilon > 0.0))
      throw InvalidArgument("L1 stopping threshold must be > 0");
    return StoppingRule(StopKind::kL1Delta, epsilon);
  }
  static StoppingRule no_updates() {
    return StoppingRule(StopKind::kNoUpdates, 0.0);
  }

  StopKind kind() const { return kind_; }
  double epsilon() const { return epsilon_; }

  /// `statistic` is the round's reduced progress value.
  bool should_stop(double statistic) const {
    if (kind_ == StopKind::kL1Delta) return pr_stop(statistic, epsilon_);
    return sssp_stop(static_cast<std::uint64_t>(statistic));
  }

 private:
  StoppingRule(StopKind kind, double epsilon) : kind_(kind), epsilon_(epsilon) {}

  StopKind kind_;
  double epsilon_;
};

}  // namespace dagraph
