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

#ifndef PRECSIMP_DECOMPOSITION_HPP_
#define PRECSIMP_DECOMPOSITION_HPP_

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "precsimp/distance.hpp"
#include "precsimp/graph.hpp"

namespace precsimp {

// Which member of each tight class acts as its representative. Every
// quantity the solvers report is independent of this choice; the option
// exists so that independence can be exercised.
enum class RepresentativePolicy { kSmallest, kLargest };

// Nodes grouped by "lies on a common zero-weight closed walk". Classes are
// ordered by their smallest member; members are ascending.
struct Partition {
  std::vector<std::vector<Node>> classes;
  std::vector<Node> rep;       // rep[k] is a member of classes[k]
  std::vector<int> class_of;   // indexed by node, entry 0 unused

  std::size_t size() const { return classes.size(); }
};

// Edges with both endpoints in one class.
struct ClassEdges {
  EdgeSet all;        // E_k
  EdgeSet removable;  // c_ij > d_ij: always redundant
  EdgeSet tight;      // c_ij == d_ij
};

// Edges from class i to class j != i.
struct InterClassEdges {
  EdgeSet all;
  // Minimisers of d(rep_i, s) + c_st + d(t, rep_j) over (s,t) in all.
  EdgeSet critical;
  // Lexicographically smallest member of critical.
  Edge representing;
};

struct EdgePartition {
  std::vector<ClassEdges> intra;  // one per class
  // Keyed by (class index i, class index j), only for non-empty E_ij.
  std::map<std::pair<int, int>, InterClassEdges> inter;

  EdgeSet inter_all() const;           // E_0
  EdgeSet inter_critical() const;      // E_0^c
  EdgeSet inter_representing() const;  // E_0^d
};

// Weighted digraph over the class representatives. Edge keys use the
// representatives' original node ids.
struct Condensation {
  std::vector<Node> nodes;  // nodes[k] represents class k
  PrecedenceGraph::EdgeMap edges;

  // Same graph renumbered so class k becomes node k+1.
  PrecedenceGraph class_graph() const;
  // Maps an edge of class_graph() back to representative ids.
  Edge to_representatives(const Edge& class_edge) const;

  friend bool operator==(const Condensation&, const Condensation&) = default;
};

Partition equivalence_classes(
    const DistanceMatrix& d,
    RepresentativePolicy policy = RepresentativePolicy::kSmallest);

EdgePartition partition_edges(const PrecedenceGraph& g, const DistanceMatrix& d,
                              const Partition& p);

Condensation condensation(const PrecedenceGraph& g, const DistanceMatrix& d,
                          const Partition& p, const EdgePartition& ep);

// Everything the solvers derive from a feasible graph before choosing
// edges. condensation_mres holds the unique maximum redundant edge set of
// the condensation, in representative ids.
struct Decomposition {
  DistanceMatrix distances;
  Partition partition;
  EdgePartition edges;
  Condensation condensed;
  EdgeSet condensation_mres;
};

// Throws Error(kInfeasibleSystem) on a negative cycle.
Decomposition decompose(
    const PrecedenceGraph& g,
    RepresentativePolicy policy = RepresentativePolicy::kSmallest);

struct SolverConfig {
  // Largest tight intra-class edge set solved exactly.
  std::size_t exact_limit = 20;
  // Fall back to the greedy intra-class solver above exact_limit instead of
  // raising Error(kExactLimitExceeded).
  bool allow_heuristic = true;
  RepresentativePolicy representative = RepresentativePolicy::kSmallest;
};

struct RedundantEdgeSet {
  EdgeSet edges;
  // False when some class was solved greedily; edges is then maximal but
  // not proven maximum.
  bool certified = true;
};

RedundantEdgeSet max_redundant_edge_set(const PrecedenceGraph& g,
                                        const SolverConfig& cfg = {});

// As above on an existing decomposition; cfg.representative is ignored in
// favour of the one dec was built with.
RedundantEdgeSet max_redundant_edge_set(const Decomposition& dec,
                                        const SolverConfig& cfg);

}  // namespace precsimp

#endif  // PRECSIMP_DECOMPOSITION_HPP_
