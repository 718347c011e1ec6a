// Copyright 2026 The precsimp Authors
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

#include "precsimp/dcs_io.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>

#include "precsimp/error.hpp"

namespace precsimp {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos >= line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
    fields.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return fields;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw Error(ErrorCode::kParseError,
              "line " + std::to_string(line_no) + ": " + what);
}

long long parse_count(std::string_view field, std::size_t line_no) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size() || value < 0) {
    fail(line_no, "expected a nonnegative integer, got '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

Normalized parse_dcs(std::string_view text) {
  std::optional<long long> n;
  long long expected = 0;
  std::vector<RawEdge> raw;
  std::size_t line_no = 0;

  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto fields = split_fields(line);
    if (fields.empty()) {
      if (end == text.size()) break;
      continue;
    }

    if (fields[0] == "p") {
      if (n) fail(line_no, "duplicate problem line");
      if (fields.size() != 4 || fields[1] != "dcs") {
        fail(line_no, "expected 'p dcs <n> <m>'");
      }
      n = parse_count(fields[2], line_no);
      expected = parse_count(fields[3], line_no);
      if (*n > std::numeric_limits<int>::max()) fail(line_no, "node count too large");
    } else if (fields[0] == "e") {
      if (!n) fail(line_no, "edge before 'p dcs' line");
      if (fields.size() != 4) fail(line_no, "expected 'e <i> <j> <c>'");
      long long i = parse_count(fields[1], line_no);
      long long j = parse_count(fields[2], line_no);
      if (i < 1 || i > *n || j < 1 || j > *n) {
        fail(line_no, "node index outside 1.." + std::to_string(*n));
      }
      Weight c;
      try {
        c = Weight::parse(fields[3]);
      } catch (const Error& e) {
        fail(line_no, e.what());
      }
      raw.push_back(RawEdge{static_cast<Node>(i), static_cast<Node>(j), c});
    } else {
      fail(line_no, "unknown line type '" + std::string(fields[0]) + "'");
    }
    if (end == text.size()) break;
  }

  if (!n) throw Error(ErrorCode::kParseError, "missing 'p dcs <n> <m>' line");
  if (static_cast<long long>(raw.size()) != expected) {
    throw Error(ErrorCode::kParseError,
                "header announces " + std::to_string(expected) + " edges, found " +
                    std::to_string(raw.size()));
  }
  return normalize(static_cast<int>(*n), raw);
}

Normalized read_dcs_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kParseError, "cannot open " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_dcs(buffer.str());
}

std::string serialize_dcs(const PrecedenceGraph& g,
                          const std::vector<std::string>& comments) {
  std::ostringstream os;
  for (const std::string& c : comments) os << "# " << c << '\n';
  os << "p dcs " << g.n() << ' ' << g.size() << '\n';
  for (const auto& [e, w] : g.edges()) {
    os << "e " << e.from << ' ' << e.to << ' ' << w << '\n';
  }
  return os.str();
}

}  // namespace precsimp
