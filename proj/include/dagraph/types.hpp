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

#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace dagraph {

using VertexId = std::uint32_t;
using EdgeIndex = std::uint64_t;
using Weight = std::uint32_t;
using Distance = std::uint32_t;

/// "Unreached" distance for SSSP.
inline constexpr Distance kInfDistance = std::numeric_limits<Distance>::max();

/// Vertex values are 32-bit elements; a 64-byte cache line holds 16 of them.
inline constexpr std::size_t kCacheLineBytes = 64;
inline constexpr std::size_t kElementsPerCacheLine = kCacheLineBytes / 4;

/// Bad arguments: out-of-range ids, invalid mode parameters, mismatched
/// kernel and stopping rule.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed or truncated input files.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// I/O failures (open, read, write).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dagraph
