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

#ifndef PRECSIMP_REDUNDANCY_HPP_
#define PRECSIMP_REDUNDANCY_HPP_

#include "precsimp/distance.hpp"
#include "precsimp/graph.hpp"

namespace precsimp {

// True iff two distinct nodes lie on a common zero-weight closed walk,
// i.e. d_ij + d_ji == 0 for some i != j.
bool has_zero_weight_cycle(const DistanceMatrix& d);

// All edges (i,j) with min over out-edges (i,k), k != j, of c_ik + d_kj
// not exceeding c_ij. Only sound when every cycle weighs strictly more than
// zero, so a zero-weight cycle raises Error(kZeroWeightCycle).
EdgeSet find_redundant_edges(const PrecedenceGraph& g, const DistanceMatrix& d);

// Whether every (u,v) in r keeps a replacement u ~> v of weight <= c_uv
// once all of r is removed. Throws Error(kNotASubset) when r has edges
// outside g.
bool is_redundant_edge_set(const PrecedenceGraph& g, const EdgeSet& r);

// The unique maximum redundant edge set of a graph whose cycles all have
// positive weight.
EdgeSet mres_no_zero_cycles(const PrecedenceGraph& g);

}  // namespace precsimp

#endif  // PRECSIMP_REDUNDANCY_HPP_
