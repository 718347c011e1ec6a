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

#include <random>
#include <string>

#include "doctest.h"
#include "precsimp/dcs_io.hpp"
#include "precsimp/error.hpp"
#include "precsimp/weight.hpp"
#include "support/oracles.hpp"

using namespace precsimp;

TEST_CASE("weights parse from integers, decimals and fractions") {
  CHECK(Weight::parse("-2") == Weight(-2));
  CHECK(Weight::parse("0.5") == Weight(1, 2));
  CHECK(Weight::parse("-3/2") == Weight(-3, 2));
  CHECK(Weight::parse("+4/6") == Weight(2, 3));
  CHECK(Weight::parse("-.25") == Weight(-1, 4));
  CHECK(Weight::parse("7.") == Weight(7));
  CHECK(Weight::parse("123456789012345678901234567890").to_string() ==
        "123456789012345678901234567890");
  for (const char* bad : {"", "-", "1/0", "1/-2", "a", "1.2.3", "1e3", "/2", "."}) {
    CHECK_THROWS_AS(Weight::parse(bad), Error);
  }
}

TEST_CASE("weights render canonically and compare exactly") {
  CHECK(Weight(6, -4).to_string() == "-3/2");
  CHECK(Weight(4, 2).to_string() == "2");
  CHECK(Weight(1, 3) + Weight(2, 3) == Weight(1));
  CHECK(Weight(1, 3) < Weight(34, 100));
  CHECK(-Weight(1, 3) == Weight(-1, 3));
  CHECK(Weight(-3, 2).denominator() == 2);
}

TEST_CASE("parse_dcs reads the fixture format") {
  Normalized n = parse_dcs(
      "# comment line\n"
      "p dcs 3 4\n"
      "e 1 2 0.5   # trailing comment\n"
      "e 2 3 -3/2\n"
      "\n"
      "e 1 2 2\n"
      "e 3 3 0\n");
  CHECK(n.graph.n() == 3);
  CHECK(n.graph.size() == 2);
  CHECK(n.graph.weight({1, 2}) == Weight(1, 2));
  CHECK(n.graph.weight({2, 3}) == Weight(-3, 2));
  CHECK(n.dropped_self_loops.size() == 1);
}

TEST_CASE("parse_dcs rejects malformed input") {
  auto code = [](const std::string& text) {
    try {
      parse_dcs(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kIndexOutOfRange;  // not reached in these cases
  };
  CHECK(code("e 1 2 3\n") == ErrorCode::kParseError);
  CHECK(code("p dcs 2 2\ne 1 2 3\n") == ErrorCode::kParseError);
  CHECK(code("p dcs 2 1\ne 1 3 3\n") == ErrorCode::kParseError);
  CHECK(code("p dcs 2 1\ne 1 2 x\n") == ErrorCode::kParseError);
  CHECK(code("p cnf 2 1\n") == ErrorCode::kParseError);
  CHECK(code("p dcs 2 0\nq\n") == ErrorCode::kParseError);
  CHECK(code("") == ErrorCode::kParseError);
  CHECK(code("p dcs 1 1\ne 1 1 -1\n") == ErrorCode::kNegativeSelfLoop);
}

TEST_CASE("shipped fixture files match the in-code fixtures") {
  const std::string dir = PRECSIMP_FIXTURE_DIR;
  CHECK(read_dcs_file(dir + "/five_node.dcs").graph == testing::five_node());
  CHECK(read_dcs_file(dir + "/zero_cycle_trap.dcs").graph == testing::zero_cycle_trap());
  CHECK(read_dcs_file(dir + "/two_maxima.dcs").graph == testing::two_maxima());
  CHECK(read_dcs_file(dir + "/triangle.dcs").graph == testing::triangle());
}

TEST_CASE("canonical files survive a parse/serialize round trip byte for byte") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    PrecedenceGraph g = testing::random_graph(rng, 7, 20, -50, 50);
    // Mix in fractional weights.
    PrecedenceGraph::EdgeMap edges;
    int k = 0;
    for (const auto& [e, w] : g.edges()) {
      edges.emplace(e, (k++ % 3 == 0) ? Weight(w.numerator(), 7) : w);
    }
    std::string text = serialize_dcs(PrecedenceGraph(g.n(), edges));
    CHECK(serialize_dcs(parse_dcs(text).graph) == text);
  }
}
