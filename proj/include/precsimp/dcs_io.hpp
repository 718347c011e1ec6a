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

// Reader and writer for the line-oriented "p dcs" system format:
//
//   # comment
//   p dcs <n> <m>
//   e <i> <j> <c>        (m lines, meaning x_i - x_j <= c)
//
// Nodes are 1-based; c is an integer, a decimal or a fraction p/q.

#ifndef PRECSIMP_DCS_IO_HPP_
#define PRECSIMP_DCS_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "precsimp/graph.hpp"

namespace precsimp {

// Throws Error(kParseError) with the offending line number, plus whatever
// normalize() raises.
Normalized parse_dcs(std::string_view text);
Normalized read_dcs_file(const std::filesystem::path& path);

// Canonical rendering: edges sorted by (i,j), weights as integers or p/q.
// Each comment line is emitted as "# <line>" before the header.
std::string serialize_dcs(const PrecedenceGraph& g,
                          const std::vector<std::string>& comments = {});

}  // namespace precsimp

#endif  // PRECSIMP_DCS_IO_HPP_
