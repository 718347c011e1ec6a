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

#include "precsimp/graph.hpp"

#include <deque>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_set>

#include "precsimp/error.hpp"

namespace precsimp {

namespace {

std::string edge_text(Node i, Node j) {
  std::ostringstream os;
  os << "(" << i << "," << j << ")";
  return os.str();
}

void check_endpoints(int n, Node i, Node j) {
  if (i < 1 || i > n || j < 1 || j > n) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "edge " + edge_text(i, j) + " outside nodes 1.." +
                    std::to_string(n));
  }
}

void check_walk(const PrecedenceGraph& g, const Walk& w) {
  if (w.nodes.empty()) throw Error(ErrorCode::kNotAWalk, "empty walk");
  for (Node v : w.nodes) {
    if (v < 1 || v > g.n()) {
      throw Error(ErrorCode::kNotAWalk,
                  "node " + std::to_string(v) + " not in graph");
    }
  }
  for (const Edge& e : w.edges()) {
    if (!g.contains(e)) {
      throw Error(ErrorCode::kNotAWalk,
                  edge_text(e.from, e.to) + " is not an edge");
    }
  }
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const Edge& e) {
  return os << "(" << e.from << "," << e.to << ")";
}

PrecedenceGraph::PrecedenceGraph(int n, EdgeMap edges)
    : n_(n), edges_(std::move(edges)) {
  if (n_ < 0) {
    throw Error(ErrorCode::kIndexOutOfRange, "negative node count");
  }
  for (const auto& [e, w] : edges_) {
    check_endpoints(n_, e.from, e.to);
    if (e.from == e.to) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "self-loop " + edge_text(e.from, e.to));
    }
  }
}

const Weight& PrecedenceGraph::weight(const Edge& e) const {
  auto it = edges_.find(e);
  if (it == edges_.end()) {
    throw Error(ErrorCode::kNotAWalk,
                edge_text(e.from, e.to) + " is not an edge");
  }
  return it->second;
}

EdgeSet PrecedenceGraph::edge_set() const {
  EdgeSet out;
  for (const auto& [e, w] : edges_) out.insert(out.end(), e);
  return out;
}

PrecedenceGraph PrecedenceGraph::without(const EdgeSet& removed) const {
  PrecedenceGraph out(n_);
  for (const auto& [e, w] : edges_) {
    if (!removed.contains(e)) out.edges_.emplace_hint(out.edges_.end(), e, w);
  }
  return out;
}

std::vector<std::vector<std::pair<Node, Weight>>> PrecedenceGraph::out_lists()
    const {
  std::vector<std::vector<std::pair<Node, Weight>>> out(n_ + 1);
  for (const auto& [e, w] : edges_) out[e.from].emplace_back(e.to, w);
  return out;
}

Normalized normalize(int n, std::span<const RawEdge> raw_edges) {
  if (n < 0) throw Error(ErrorCode::kIndexOutOfRange, "negative node count");
  Normalized out;
  PrecedenceGraph::EdgeMap edges;
  for (const RawEdge& r : raw_edges) {
    check_endpoints(n, r.from, r.to);
    if (r.from == r.to) {
      if (r.weight.is_negative()) {
        throw Error(ErrorCode::kNegativeSelfLoop,
                    "self-loop " + edge_text(r.from, r.to) + " with weight " +
                        r.weight.to_string() + " < 0 is unsatisfiable");
      }
      out.dropped_self_loops.push_back(r);
      continue;
    }
    auto [it, inserted] = edges.try_emplace(Edge{r.from, r.to}, r.weight);
    if (!inserted && r.weight < it->second) it->second = r.weight;
  }
  out.graph = PrecedenceGraph(n, std::move(edges));
  return out;
}

bool Walk::is_cycle() const {
  if (!is_closed()) return false;
  std::unordered_set<Node> seen(nodes.begin(), nodes.end() - 1);
  return seen.size() == nodes.size() - 1;
}

bool Walk::is_simple_path() const {
  std::unordered_set<Node> seen(nodes.begin(), nodes.end());
  return !nodes.empty() && seen.size() == nodes.size();
}

std::vector<Edge> Walk::edges() const {
  std::vector<Edge> out;
  for (std::size_t k = 0; k + 1 < nodes.size(); ++k) {
    out.push_back(Edge{nodes[k], nodes[k + 1]});
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Walk& w) {
  os << "(";
  for (std::size_t k = 0; k < w.nodes.size(); ++k) {
    if (k) os << ",";
    os << w.nodes[k];
  }
  return os << ")";
}

Weight walk_weight(const PrecedenceGraph& g, const Walk& w) {
  check_walk(g, w);
  Weight total;
  for (const Edge& e : w.edges()) total += g.weight(e);
  return total;
}

ScanResult scan(const Walk& w) {
  ScanResult out;
  std::vector<Node> rest = w.nodes;
  for (std::size_t k = 0; k + 1 < rest.size(); ++k) {
    std::size_t r = rest.size();
    for (std::size_t q = rest.size() - 1; q > k; --q) {
      if (rest[q] == rest[k]) {
        r = q;
        break;
      }
    }
    if (r == rest.size()) continue;
    out.closed_walks.push_back(
        Walk{std::vector<Node>(rest.begin() + k, rest.begin() + r + 1)});
    rest.erase(rest.begin() + k + 1, rest.begin() + r + 1);
  }
  out.rest = Walk{std::move(rest)};
  return out;
}

WalkDecomposition decompose_walk(const PrecedenceGraph& g, const Walk& w) {
  check_walk(g, w);
  ScanResult first = scan(w);
  WalkDecomposition out;
  out.path = std::move(first.rest);

  std::deque<Walk> pending(first.closed_walks.begin(), first.closed_walks.end());
  while (!pending.empty()) {
    Walk c = std::move(pending.front());
    pending.pop_front();
    if (c.is_cycle()) {
      out.cycles.push_back(std::move(c));
      continue;
    }
    // (i_0, i_1, ..., i_m = i_0): scanning the strictly shorter open walk
    // i_1 ~> i_0 yields a simple path that closes into a cycle through the
    // edge (i_0, i_1).
    ScanResult inner =
        scan(Walk{std::vector<Node>(c.nodes.begin() + 1, c.nodes.end())});
    Walk cycle{{c.nodes.front()}};
    cycle.nodes.insert(cycle.nodes.end(), inner.rest.nodes.begin(),
                       inner.rest.nodes.end());
    out.cycles.push_back(std::move(cycle));
    for (Walk& child : inner.closed_walks) pending.push_back(std::move(child));
  }
  return out;
}

}  // namespace precsimp
