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

#ifndef PRECSIMP_GRAPH_HPP_
#define PRECSIMP_GRAPH_HPP_

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <set>
#include <span>
#include <vector>

#include "precsimp/weight.hpp"

namespace precsimp {

// Nodes are 1-based, matching the file format.
using Node = int;

// Directed edge (from, to), standing for the constraint x_from - x_to <= c.
struct Edge {
  Node from = 0;
  Node to = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

std::ostream& operator<<(std::ostream& os, const Edge& e);

using EdgeSet = std::set<Edge>;

// A system of difference constraints viewed as a weighted digraph. Edges
// are kept sorted by (from, to); there are no self-loops and no parallel
// edges.
class PrecedenceGraph {
 public:
  using EdgeMap = std::map<Edge, Weight>;

  PrecedenceGraph() = default;
  explicit PrecedenceGraph(int n) : n_(n) {}
  // Throws Error(kIndexOutOfRange) for endpoints outside 1..n and for
  // self-loops.
  PrecedenceGraph(int n, EdgeMap edges);

  int n() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  const EdgeMap& edges() const { return edges_; }

  bool contains(const Edge& e) const { return edges_.contains(e); }
  // Throws Error(kNotAWalk) when the edge is absent.
  const Weight& weight(const Edge& e) const;

  EdgeSet edge_set() const;
  PrecedenceGraph without(const EdgeSet& removed) const;

  // Out-neighbours of every node, index 0 unused.
  std::vector<std::vector<std::pair<Node, Weight>>> out_lists() const;

  friend bool operator==(const PrecedenceGraph&,
                         const PrecedenceGraph&) = default;

 private:
  int n_ = 0;
  EdgeMap edges_;
};

struct RawEdge {
  Node from = 0;
  Node to = 0;
  Weight weight;
};

struct Normalized {
  PrecedenceGraph graph;
  // Nonnegative self-loops that were discarded; callers may warn on these.
  std::vector<RawEdge> dropped_self_loops;
};

// Collapses parallel constraints to the tightest one and drops trivially
// satisfied self-loops. A negative self-loop x_i - x_i <= c < 0 makes the
// system infeasible and raises Error(kNegativeSelfLoop).
Normalized normalize(int n, std::span<const RawEdge> raw_edges);

// Node sequence (i_0, ..., i_m). A single node is the degenerate walk.
struct Walk {
  std::vector<Node> nodes;

  std::size_t edge_count() const {
    return nodes.empty() ? 0 : nodes.size() - 1;
  }
  bool is_closed() const {
    return nodes.size() >= 2 && nodes.front() == nodes.back();
  }
  // Closed walk with at least one edge whose nodes are distinct apart from
  // the repeated endpoint.
  bool is_cycle() const;
  // No node repeats (includes the degenerate walk).
  bool is_simple_path() const;
  std::vector<Edge> edges() const;

  friend bool operator==(const Walk&, const Walk&) = default;
};

std::ostream& operator<<(std::ostream& os, const Walk& w);

// Throws Error(kNotAWalk) if a consecutive pair is not an edge of g.
Weight walk_weight(const PrecedenceGraph& g, const Walk& w);

struct ScanResult {
  Walk rest;
  std::vector<Walk> closed_walks;
};

// Single left-to-right pass: at each position k the segment up to the last
// later occurrence of the node at k is cut out as a closed walk. The
// remaining walk has no repeated nodes.
ScanResult scan(const Walk& w);

struct WalkDecomposition {
  Walk path;
  std::vector<Walk> cycles;
};

// Splits a walk into a simple path between its endpoints plus simple
// cycles, conserving the multiset of traversed edges.
WalkDecomposition decompose_walk(const PrecedenceGraph& g, const Walk& w);

}  // namespace precsimp

#endif  // PRECSIMP_GRAPH_HPP_
