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

// On-disk formats.
//
// Edge list text: one edge per line, "src dst" or "src dst weight", ASCII
// decimal separated by a single space, '#' starts a comment line.
//
// Binary graph ("DFG1"), all integers little-endian:
//   magic "DFG1" | u64 n | u64 m | u8 flags (bit0 weighted, bit1 symmetric)
//   | u64 offsets[n+1] | u32 adjacency[m] | u32 weights[m] (if weighted)
// Only the forward CSR is stored; the transpose is rebuilt on load.

#pragma once

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dagraph/graph.hpp"
#include "dagraph/types.hpp"

namespace dagraph {

struct EdgeListFile {
  EdgeList edges;
  std::size_t num_vertices = 0;  // 1 + max id seen
  std::vector<std::string> warnings;
};

inline constexpr std::array<char, 4> kBinaryMagic = {'D', 'F', 'G', '1'};
inline constexpr std::uint8_t kFlagWeighted = 0x1;
inline constexpr std::uint8_t kFlagSymmetric = 0x2;

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::string data((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read failed on '" + path + "'");
  return data;
}

inline void write_file(const std::string& path, std::string_view data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  out.flush();
  if (!out) throw IoError("write failed on '" + path + "'");
}

template <class T>
void put_le(std::string& buf, T value) {
  for (std::size_t i = 0; i < sizeof(T); ++i)
    buf.push_back(static_cast<char>((static_cast<std::uint64_t>(value) >> (8 * i)) & 0xff));
}

template <class T>
T get_le(std::string_view buf, std::size_t pos) {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i)
    v |= std::uint64_t{static_cast<unsigned char>(buf[pos + i])} << (8 * i);
  return static_cast<T>(v);
}

}  // namespace detail

/// Parses an edge list held in memory. `source` names it in error messages.
inline EdgeListFile parse_edge_list(std::string_view text,
                                    const std::string& source = "<memory>") {
  EdgeListFile out;
  std::optional<int> arity;
  std::size_t line_no = 0;
  std::uint64_t max_id = 0;
  bool any = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;

    auto fail = [&](const std::string& why) {
      return FormatError(source + ":" + std::to_string(line_no) + ": " + why);
    };
    std::uint64_t fields[3];
    int count = 0;
    const char* p = line.data();
    const char* end = line.data() + line.size();
    while (p < end) {
      if (count == 3) throw fail("too many fields");
      std::uint64_t value = 0;
      auto [next, ec] = std::from_chars(p, end, value);
      if (ec != std::errc() || next == p)
        throw fail("expected an unsigned decimal integer");
      fields[count++] = value;
      p = next;
      if (p < end) {
        if (*p != ' ') throw fail("fields must be separated by one space");
        ++p;
        if (p == end) throw fail("trailing space");
      }
    }
    if (count < 2) throw fail("expected 'src dst' or 'src dst weight'");
    if (!arity) arity = count;
    if (*arity != count)
      throw fail("inconsistent arity: expected " + std::to_string(*arity) +
                 " fields, found " + std::to_string(count));
    if (fields[0] > UINT32_MAX || fields[1] > UINT32_MAX)
      throw fail("vertex id exceeds 32 bits");
    if (count == 3 && fields[2] > UINT32_MAX)
      throw fail("weight exceeds 32 bits");
    Edge e{static_cast<VertexId>(fields[0]), static_cast<VertexId>(fields[1]),
           std::nullopt};
    if (count == 3) e.weight = static_cast<Weight>(fields[2]);
    max_id = std::max({max_id, fields[0], fields[1]});
    any = true;
    out.edges.push_back(e);
  }
  out.num_vertices = any ? static_cast<std::size_t>(max_id) + 1 : 0;
  if (!any) out.warnings.push_back(source + ": no edges");
  return out;
}

inline EdgeListFile read_edge_list(const std::string& path) {
  return parse_edge_list(detail::read_file(path), path);
}

inline std::string format_edge_list(const EdgeList& edges) {
  std::string out;
  out.reserve(edges.size() * 16);
  for (const Edge& e : edges) {
    out += std::to_string(e.src);
    out += ' ';
    out += std::to_string(e.dst);
    if (e.weight) {
      out += ' ';
      out += std::to_string(*e.weight);
    }
    out += '\n';
  }
  return out;
}

inline void write_edge_list(const EdgeList& edges, const std::string& path) {
  detail::write_file(path, format_edge_list(edges));
}

inline std::string encode_binary(const Graph& g) {
  std::string buf;
  const std::size_t m = g.num_edges();
  buf.reserve(21 + 8 * (g.num_vertices() + 1) + 8 * m);
  buf.append(kBinaryMagic.data(), kBinaryMagic.size());
  detail::put_le<std::uint64_t>(buf, g.num_vertices());
  detail::put_le<std::uint64_t>(buf, m);
  std::uint8_t flags = 0;
  if (g.weighted()) flags |= kFlagWeighted;
  if (g.symmetric()) flags |= kFlagSymmetric;
  detail::put_le<std::uint8_t>(buf, flags);
  for (EdgeIndex off : g.out_offsets()) detail::put_le<std::uint64_t>(buf, off);
  for (VertexId v : g.out_adjacency()) detail::put_le<std::uint32_t>(buf, v);
  if (g.weighted())
    for (Weight w : g.out_weight_array()) detail::put_le<std::uint32_t>(buf, w);
  return buf;
}

inline Graph decode_binary(std::string_view buf,
                           const std::string& source = "<memory>") {
  constexpr std::size_t kHeader = 4 + 8 + 8 + 1;
  if (buf.size() < 4 ||
      std::memcmp(buf.data(), kBinaryMagic.data(), kBinaryMagic.size()) != 0)
    throw FormatError(source + ": bad magic (expected \"DFG1\")");
  if (buf.size() < kHeader)
    throw FormatError(source + ": truncated header: expected " +
                      std::to_string(kHeader) + " bytes, got " +
                      std::to_string(buf.size()));
  const auto n = detail::get_le<std::uint64_t>(buf, 4);
  const auto m = detail::get_le<std::uint64_t>(buf, 12);
  const auto flags = detail::get_le<std::uint8_t>(buf, 20);
  if (flags & ~(kFlagWeighted | kFlagSymmetric))
    throw FormatError(source + ": unknown flag bits");
  if (n > Graph::kMaxVertices || m > (std::uint64_t{1} << 40))
    throw FormatError(source + ": implausible header sizes");
  const bool weighted = flags & kFlagWeighted;
  const std::uint64_t expected =
      kHeader + 8 * (n + 1) + 4 * m + (weighted ? 4 * m : 0);
  if (buf.size() != expected)
    throw FormatError(source + (buf.size() < expected ? ": truncated file"
                                                      : ": trailing bytes") +
                      ": expected " + std::to_string(expected) +
                      " bytes, got " + std::to_string(buf.size()));

  std::size_t pos = kHeader;
  std::vector<EdgeIndex> offsets(n + 1);
  for (auto& off : offsets) {
    off = detail::get_le<std::uint64_t>(buf, pos);
    pos += 8;
  }
  std::vector<VertexId> adjacency(m);
  for (auto& v : adjacency) {
    v = detail::get_le<std::uint32_t>(buf, pos);
    pos += 4;
  }
  std::optional<std::vector<Weight>> weights;
  if (weighted) {
    weights.emplace(m);
    for (auto& w : *weights) {
      w = detail::get_le<std::uint32_t>(buf, pos);
      pos += 4;
    }
  }
  try {
    return Graph::from_out_csr(n, std::move(offsets), std::move(adjacency),
                               std::move(weights), flags & kFlagSymmetric);
  } catch (const FormatError& e) {
    throw FormatError(source + ": " + e.what());
  }
}

inline void write_binary(const Graph& g, const std::string& path) {
  detail::write_file(path, encode_binary(g));
}

inline Graph read_binary(const std::string& path) {
  return decode_binary(detail::read_file(path), path);
}

/// Loads either format: binary if the file starts with the magic, otherwise
/// an edge list (optionally symmetrized).
inline Graph load_graph(const std::string& path, bool symmetrize_text = false) {
  const std::string data = detail::read_file(path);
  if (data.size() >= 4 &&
      std::memcmp(data.data(), kBinaryMagic.data(), kBinaryMagic.size()) == 0)
    return decode_binary(data, path);
  EdgeListFile el = parse_edge_list(data, path);
  return build_graph(el.edges, el.num_vertices, symmetrize_text);
}

}  // namespace dagraph
