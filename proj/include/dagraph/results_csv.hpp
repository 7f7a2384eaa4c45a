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

// Per-trial benchmark results CSV:
//
//   graph,algorithm,mode,delta,threads,read_policy,trial,rounds,
//   total_seconds,avg_round_seconds,converged
//
// Seconds are printed with exactly six fractional digits. The average round
// time is rounded to whole microseconds first and the total is written as
// rounds * average, so the two columns agree exactly.

#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dagraph/types.hpp"

namespace dagraph {

inline constexpr std::string_view kResultsHeader =
    "graph,algorithm,mode,delta,threads,read_policy,trial,rounds,"
    "total_seconds,avg_round_seconds,converged";

enum class Outcome { kConverged, kNotConverged, kError };

struct ResultRow {
  std::string graph;
  std::string algorithm;   // pagerank | sssp
  std::string mode;        // sync | async | delayed
  std::optional<std::size_t> delta;  // delayed only
  std::size_t threads = 1;
  std::string read_policy = "global";
  std::size_t trial = 0;
  std::size_t rounds = 0;
  std::int64_t avg_round_micros = 0;
  Outcome outcome = Outcome::kNotConverged;

  std::int64_t total_micros() const {
    return avg_round_micros * static_cast<std::int64_t>(rounds);
  }
  double total_seconds() const { return static_cast<double>(total_micros()) * 1e-6; }
  double avg_round_seconds() const {
    return static_cast<double>(avg_round_micros) * 1e-6;
  }

  /// Sets the timing columns from a measured total.
  void set_timing(std::size_t num_rounds, double measured_total_seconds) {
    rounds = num_rounds;
    avg_round_micros =
        num_rounds == 0
            ? 0
            : std::llround(measured_total_seconds * 1e6 /
                           static_cast<double>(num_rounds));
  }

  friend bool operator==(const ResultRow&, const ResultRow&) = default;
};

inline std::string format_micros(std::int64_t micros) {
  std::string frac = std::to_string(micros % 1000000);
  return std::to_string(micros / 1000000) + "." +
         std::string(6 - frac.size(), '0') + frac;
}

inline std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::kConverged: return "true";
    case Outcome::kNotConverged: return "false";
    case Outcome::kError: return "error";
  }
  return "?";
}

namespace detail {

inline void check_csv_field(const std::string& s, const char* what) {
  if (s.find_first_of(",\n\r\"") != std::string::npos)
    throw InvalidArgument(std::string(what) + " '" + s +
                          "' contains a CSV delimiter");
}

inline std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

inline std::uint64_t parse_uint(std::string_view s, const std::string& where) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty())
    throw FormatError(where + ": expected unsigned integer, got '" +
                      std::string(s) + "'");
  return v;
}

inline std::int64_t parse_micros(std::string_view s, const std::string& where) {
  const std::size_t dot = s.find('.');
  if (dot == std::string_view::npos || s.size() - dot - 1 != 6)
    throw FormatError(where + ": seconds need exactly 6 fractional digits, got '" +
                      std::string(s) + "'");
  const auto whole = parse_uint(s.substr(0, dot), where);
  const auto frac = parse_uint(s.substr(dot + 1), where);
  return static_cast<std::int64_t>(whole * 1000000 + frac);
}

}  // namespace detail

inline std::string format_result_row(const ResultRow& r) {
  detail::check_csv_field(r.graph, "graph name");
  detail::check_csv_field(r.algorithm, "algorithm");
  detail::check_csv_field(r.mode, "mode");
  detail::check_csv_field(r.read_policy, "read policy");
  std::string out;
  out += r.graph + "," + r.algorithm + "," + r.mode + ",";
  if (r.delta) out += std::to_string(*r.delta);
  out += "," + std::to_string(r.threads) + "," + r.read_policy + "," +
         std::to_string(r.trial) + "," + std::to_string(r.rounds) + "," +
         format_micros(r.total_micros()) + "," +
         format_micros(r.avg_round_micros) + "," + to_string(r.outcome);
  return out;
}

inline std::string format_results_csv(const std::vector<ResultRow>& rows) {
  std::string out(kResultsHeader);
  out += '\n';
  for (const auto& r : rows) {
    out += format_result_row(r);
    out += '\n';
  }
  return out;
}

inline ResultRow parse_result_row(std::string_view line,
                                  const std::string& where) {
  auto f = detail::split_commas(line);
  if (f.size() != 11)
    throw FormatError(where + ": expected 11 fields, found " +
                      std::to_string(f.size()));
  ResultRow r;
  r.graph = f[0];
  r.algorithm = f[1];
  r.mode = f[2];
  if (!f[3].empty()) r.delta = detail::parse_uint(f[3], where);
  if ((r.mode == "delayed") != r.delta.has_value())
    throw FormatError(where + ": delta must be set exactly for delayed rows");
  r.threads = detail::parse_uint(f[4], where);
  r.read_policy = f[5];
  r.trial = detail::parse_uint(f[6], where);
  r.rounds = detail::parse_uint(f[7], where);
  const auto total = detail::parse_micros(f[8], where);
  r.avg_round_micros = detail::parse_micros(f[9], where);
  if (total != r.total_micros())
    throw FormatError(where + ": total_seconds != rounds * avg_round_seconds");
  if (f[10] == "true") r.outcome = Outcome::kConverged;
  else if (f[10] == "false") r.outcome = Outcome::kNotConverged;
  else if (f[10] == "error") r.outcome = Outcome::kError;
  else throw FormatError(where + ": bad converged value '" + std::string(f[10]) + "'");
  return r;
}

inline std::vector<ResultRow> parse_results_csv(std::string_view text,
                                                const std::string& source = "<memory>") {
  std::vector<ResultRow> rows;
  std::size_t pos = 0, line_no = 0;
  bool header = false;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    const std::string where = source + ":" + std::to_string(line_no);
    if (!header) {
      if (line != kResultsHeader) throw FormatError(where + ": bad header");
      header = true;
      continue;
    }
    rows.push_back(parse_result_row(line, where));
  }
  if (!header) throw FormatError(source + ": missing header");
  return rows;
}

}  // namespace dagraph
