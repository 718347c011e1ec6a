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

#include "precsimp/redundancy.hpp"

#include <sstream>

#include "precsimp/error.hpp"

namespace precsimp {

bool has_zero_weight_cycle(const DistanceMatrix& d) {
  for (Node i = 1; i <= d.n(); ++i) {
    for (Node j = i + 1; j <= d.n(); ++j) {
      const auto& dij = d.at(i, j);
      const auto& dji = d.at(j, i);
      if (dij && dji && (*dij + *dji).is_zero()) return true;
    }
  }
  return false;
}

EdgeSet find_redundant_edges(const PrecedenceGraph& g, const DistanceMatrix& d) {
  if (!d.feasible()) {
    throw Error(ErrorCode::kInfeasibleSystem,
                "negative cycle found; the constraint system is infeasible");
  }
  if (has_zero_weight_cycle(d)) {
    throw Error(ErrorCode::kZeroWeightCycle,
                "graph has a zero-weight cycle; the shortest-path criterion "
                "does not identify redundant edges there");
  }
  const auto out = g.out_lists();
  EdgeSet redundant;
  for (const auto& [e, cij] : g.edges()) {
    for (const auto& [k, cik] : out[e.from]) {
      if (k == e.to) continue;
      const auto& dkj = d.at(k, e.to);
      if (dkj && cik + *dkj <= cij) {
        redundant.insert(redundant.end(), e);
        break;
      }
    }
  }
  return redundant;
}

bool is_redundant_edge_set(const PrecedenceGraph& g, const EdgeSet& r) {
  for (const Edge& e : r) {
    if (!g.contains(e)) {
      std::ostringstream os;
      os << "edge " << e << " is not in the graph";
      throw Error(ErrorCode::kNotASubset, os.str());
    }
  }
  if (r.empty()) return true;
  // A feasible remainder that replaces every removed edge implies the full
  // graph is feasible as well.
  DistanceMatrix d = analyze_distances(g.without(r));
  if (!d.feasible()) {
    throw Error(ErrorCode::kInfeasibleSystem,
                "negative cycle found; the constraint system is infeasible");
  }
  for (const Edge& e : r) {
    const auto& duv = d.at(e.from, e.to);
    if (!duv || *duv > g.weight(e)) return false;
  }
  return true;
}

EdgeSet mres_no_zero_cycles(const PrecedenceGraph& g) {
  return find_redundant_edges(g, min_walk_weights(g));
}

}  // namespace precsimp
