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

#ifndef PRECSIMP_VERIFY_HPP_
#define PRECSIMP_VERIFY_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "precsimp/graph.hpp"

namespace precsimp {

enum class Side { kA, kB };

// A constraint of one system that the other system does not imply.
struct EquivalenceWitness {
  Edge edge;
  Side side;  // system the edge belongs to
};

struct EquivalenceReport {
  bool equivalent = true;
  std::optional<EquivalenceWitness> witness;  // set iff !equivalent
};

// Two feasible systems over the same variables are equivalent iff each
// implies every constraint of the other. Edges of a are checked first, in
// (i,j) order. Throws Error(kNodeCountMismatch) and
// Error(kInfeasibleSystem).
EquivalenceReport systems_equivalent(const PrecedenceGraph& a,
                                     const PrecedenceGraph& b);

struct BruteForceResult {
  std::size_t size = 0;
  std::vector<EdgeSet> sets;  // every redundant edge set of that size
};

// Exhaustive search over edge subsets from the largest cardinality down.
// Throws Error(kLimitExceeded) for graphs with more than limit edges.
BruteForceResult brute_force_max_redundant(const PrecedenceGraph& g,
                                           std::size_t limit = 16);

// Every edge whose singleton is a redundant edge set. Throws
// Error(kInfeasibleSystem).
EdgeSet brute_force_redundant_edges(const PrecedenceGraph& g);

}  // namespace precsimp

#endif  // PRECSIMP_VERIFY_HPP_
