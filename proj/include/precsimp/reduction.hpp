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

#ifndef PRECSIMP_REDUCTION_HPP_
#define PRECSIMP_REDUCTION_HPP_

#include <cstddef>

#include "precsimp/decomposition.hpp"
#include "precsimp/distance.hpp"
#include "precsimp/graph.hpp"

namespace precsimp {

struct ReductionResult {
  PrecedenceGraph reduced;
  Partition partition;
  // Input edge count minus reduced edge count.
  std::size_t removed_count = 0;
};

// Minimum-edge system with the same solution set as g. Each class of two or
// more nodes becomes one zero-weight cycle through its members in ascending
// order, weighted by minimum walk weights. Each surviving class pair keeps
// its representing edge with the original weight. The result may contain
// edges that g does not have.
ReductionResult equivalent_reduction(
    const PrecedenceGraph& g,
    RepresentativePolicy policy = RepresentativePolicy::kSmallest);

// As above, reusing an existing decomposition of g.
ReductionResult equivalent_reduction(const PrecedenceGraph& g,
                                     const Decomposition& dec);

// Eliminates all but the representative variable of every class from a
// reduction: one edge per connected class pair, weighted
// d(v_i, u) + c_uv + d(v, v_j) with d taken from the original graph.
Condensation er_condensation(const ReductionResult& r, const DistanceMatrix& d);

}  // namespace precsimp

#endif  // PRECSIMP_REDUCTION_HPP_
