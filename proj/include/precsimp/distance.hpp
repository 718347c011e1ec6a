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

#ifndef PRECSIMP_DISTANCE_HPP_
#define PRECSIMP_DISTANCE_HPP_

#include <optional>
#include <vector>

#include "precsimp/graph.hpp"
#include "precsimp/weight.hpp"

namespace precsimp {

// Minimum walk weights between all ordered node pairs. An absent entry
// means no walk exists. An infeasible matrix (negative closed walk present)
// carries no values at all.
class DistanceMatrix {
 public:
  static DistanceMatrix infeasible(int n);
  // entries is row-major over (i-1, j-1).
  static DistanceMatrix from_entries(int n,
                                     std::vector<std::optional<Weight>> entries);

  int n() const { return n_; }
  bool feasible() const { return feasible_; }

  // Throws Error(kInfeasibleSystem) on an infeasible matrix and
  // Error(kIndexOutOfRange) for bad nodes.
  const std::optional<Weight>& at(Node i, Node j) const;
  bool reachable(Node i, Node j) const { return at(i, j).has_value(); }

 private:
  DistanceMatrix(int n, bool feasible,
                 std::vector<std::optional<Weight>> entries)
      : n_(n), feasible_(feasible), d_(std::move(entries)) {}

  int n_ = 0;
  bool feasible_ = false;
  std::vector<std::optional<Weight>> d_;
};

// Floyd-Warshall. Never throws on negative cycles; inspect feasible().
DistanceMatrix analyze_distances(const PrecedenceGraph& g);

// As analyze_distances, but throws Error(kInfeasibleSystem) when the graph
// has a negative-weight cycle.
DistanceMatrix min_walk_weights(const PrecedenceGraph& g);

// True iff every solution of the system behind d also satisfies
// x_u - x_v <= b. Throws Error(kSameNode) for u == v.
bool implies(const DistanceMatrix& d, Node u, Node v, const Weight& b);

}  // namespace precsimp

#endif  // PRECSIMP_DISTANCE_HPP_
