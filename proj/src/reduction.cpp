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

#include "precsimp/reduction.hpp"

#include "precsimp/error.hpp"

namespace precsimp {

ReductionResult equivalent_reduction(const PrecedenceGraph& g,
                                     RepresentativePolicy policy) {
  return equivalent_reduction(g, decompose(g, policy));
}

ReductionResult equivalent_reduction(const PrecedenceGraph& g,
                                     const Decomposition& dec) {
  const Partition& p = dec.partition;
  const DistanceMatrix& d = dec.distances;
  PrecedenceGraph::EdgeMap edges;

  for (const auto& members : p.classes) {
    if (members.size() < 2) continue;
    for (std::size_t q = 0; q < members.size(); ++q) {
      Node from = members[q];
      Node to = members[(q + 1) % members.size()];
      edges.emplace(Edge{from, to}, *d.at(from, to));
    }
  }

  for (const auto& [key, block] : dec.edges.inter) {
    Edge condensed{p.rep[key.first], p.rep[key.second]};
    if (dec.condensation_mres.contains(condensed)) continue;
    edges.emplace(block.representing, g.weight(block.representing));
  }

  ReductionResult out;
  out.reduced = PrecedenceGraph(g.n(), std::move(edges));
  out.partition = p;
  out.removed_count = g.size() - out.reduced.size();
  return out;
}

Condensation er_condensation(const ReductionResult& r, const DistanceMatrix& d) {
  const Partition& p = r.partition;
  Condensation out;
  out.nodes = p.rep;
  for (const auto& [e, c] : r.reduced.edges()) {
    const int ki = p.class_of[e.from];
    const int kj = p.class_of[e.to];
    if (ki == kj) continue;
    const Node vi = p.rep[ki];
    const Node vj = p.rep[kj];
    const auto& head = d.at(vi, e.from);
    const auto& tail = d.at(e.to, vj);
    if (!head || !tail) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "reduction does not match the distance matrix");
    }
    out.edges.emplace(Edge{vi, vj}, *head + c + *tail);
  }
  return out;
}

}  // namespace precsimp
