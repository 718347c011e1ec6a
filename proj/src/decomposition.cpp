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

#include "precsimp/decomposition.hpp"

#include <numeric>
#include <optional>
#include <string>

#include "precsimp/error.hpp"
#include "precsimp/meg.hpp"
#include "precsimp/redundancy.hpp"

namespace precsimp {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

// d(from, to) for nodes known to be mutually reachable.
const Weight& finite(const DistanceMatrix& d, Node from, Node to) {
  const auto& w = d.at(from, to);
  if (!w) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "nodes " + std::to_string(from) + " and " + std::to_string(to) +
                    " are not connected");
  }
  return *w;
}

}  // namespace

EdgeSet EdgePartition::inter_all() const {
  EdgeSet out;
  for (const auto& [key, block] : inter) out.insert(block.all.begin(), block.all.end());
  return out;
}

EdgeSet EdgePartition::inter_critical() const {
  EdgeSet out;
  for (const auto& [key, block] : inter) {
    out.insert(block.critical.begin(), block.critical.end());
  }
  return out;
}

EdgeSet EdgePartition::inter_representing() const {
  EdgeSet out;
  for (const auto& [key, block] : inter) out.insert(block.representing);
  return out;
}

PrecedenceGraph Condensation::class_graph() const {
  std::map<Node, int> index;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    index[nodes[k]] = static_cast<int>(k) + 1;
  }
  PrecedenceGraph::EdgeMap renumbered;
  for (const auto& [e, w] : edges) {
    renumbered.emplace(Edge{index.at(e.from), index.at(e.to)}, w);
  }
  return PrecedenceGraph(static_cast<int>(nodes.size()), std::move(renumbered));
}

Edge Condensation::to_representatives(const Edge& class_edge) const {
  return Edge{nodes.at(static_cast<std::size_t>(class_edge.from - 1)),
              nodes.at(static_cast<std::size_t>(class_edge.to - 1))};
}

Partition equivalence_classes(const DistanceMatrix& d,
                              RepresentativePolicy policy) {
  const int n = d.n();
  DisjointSets sets(static_cast<std::size_t>(n) + 1);
  for (Node i = 1; i <= n; ++i) {
    for (Node j = i + 1; j <= n; ++j) {
      const auto& dij = d.at(i, j);
      if (!dij) continue;
      const auto& dji = d.at(j, i);
      if (dji && (*dij + *dji).is_zero()) sets.unite(i, j);
    }
  }

  Partition p;
  p.class_of.assign(static_cast<std::size_t>(n) + 1, -1);
  std::vector<int> class_of_root(static_cast<std::size_t>(n) + 1, -1);
  // Roots are the smallest members, so ascending node order yields classes
  // sorted by smallest member.
  for (Node v = 1; v <= n; ++v) {
    std::size_t root = sets.find(v);
    if (class_of_root[root] < 0) {
      class_of_root[root] = static_cast<int>(p.classes.size());
      p.classes.emplace_back();
    }
    int k = class_of_root[root];
    p.classes[k].push_back(v);
    p.class_of[v] = k;
  }
  for (const auto& members : p.classes) {
    p.rep.push_back(policy == RepresentativePolicy::kSmallest ? members.front()
                                                              : members.back());
  }
  return p;
}

EdgePartition partition_edges(const PrecedenceGraph& g, const DistanceMatrix& d,
                              const Partition& p) {
  EdgePartition ep;
  ep.intra.resize(p.size());
  std::map<std::pair<int, int>, Weight> best;
  for (const auto& [e, c] : g.edges()) {
    const int ki = p.class_of[e.from];
    const int kj = p.class_of[e.to];
    if (ki == kj) {
      ClassEdges& block = ep.intra[ki];
      block.all.insert(e);
      if (c > finite(d, e.from, e.to)) {
        block.removable.insert(e);
      } else {
        block.tight.insert(e);
      }
      continue;
    }
    Weight through = finite(d, p.rep[ki], e.from) + c + finite(d, e.to, p.rep[kj]);
    auto key = std::make_pair(ki, kj);
    InterClassEdges& block = ep.inter[key];
    block.all.insert(e);
    auto it = best.find(key);
    if (it == best.end() || through < it->second) {
      best[key] = through;
      block.critical = {e};
    } else if (through == it->second) {
      block.critical.insert(e);
    }
  }
  for (auto& [key, block] : ep.inter) block.representing = *block.critical.begin();
  return ep;
}

Condensation condensation(const PrecedenceGraph& g, const DistanceMatrix& d,
                          const Partition& p, const EdgePartition& ep) {
  Condensation out;
  out.nodes = p.rep;
  for (const auto& [key, block] : ep.inter) {
    const Node vi = p.rep[key.first];
    const Node vj = p.rep[key.second];
    const Edge& e = block.representing;
    out.edges.emplace(Edge{vi, vj},
                      finite(d, vi, e.from) + g.weight(e) + finite(d, e.to, vj));
  }
  return out;
}

Decomposition decompose(const PrecedenceGraph& g, RepresentativePolicy policy) {
  DistanceMatrix d = min_walk_weights(g);
  Partition p = equivalence_classes(d, policy);
  EdgePartition ep = partition_edges(g, d, p);
  Condensation cond = condensation(g, d, p, ep);
  EdgeSet cond_mres;
  for (const Edge& e : mres_no_zero_cycles(cond.class_graph())) {
    cond_mres.insert(cond.to_representatives(e));
  }
  return Decomposition{std::move(d), std::move(p), std::move(ep), std::move(cond),
                       std::move(cond_mres)};
}

RedundantEdgeSet max_redundant_edge_set(const PrecedenceGraph& g,
                                        const SolverConfig& cfg) {
  return max_redundant_edge_set(decompose(g, cfg.representative), cfg);
}

RedundantEdgeSet max_redundant_edge_set(const Decomposition& dec,
                                        const SolverConfig& cfg) {
  const Partition& p = dec.partition;
  RedundantEdgeSet out;

  for (const auto& [key, block] : dec.edges.inter) {
    Edge condensed{p.rep[key.first], p.rep[key.second]};
    out.edges.insert(block.all.begin(), block.all.end());
    if (!dec.condensation_mres.contains(condensed)) {
      out.edges.erase(block.representing);
    }
  }

  for (std::size_t k = 0; k < p.size(); ++k) {
    const ClassEdges& block = dec.edges.intra[k];
    out.edges.insert(block.removable.begin(), block.removable.end());
    if (block.tight.empty()) continue;

    // Solve the tight edges as an unweighted reachability problem on the
    // class, renumbered to 1..|class|.
    const auto& members = p.classes[k];
    std::map<Node, Node> local;
    for (std::size_t q = 0; q < members.size(); ++q) {
      local[members[q]] = static_cast<Node>(q) + 1;
    }
    EdgeSet arcs;
    for (const Edge& e : block.tight) arcs.insert(Edge{local[e.from], local[e.to]});
    Digraph h(static_cast<int>(members.size()), std::move(arcs));

    EdgeSet kept;
    if (h.arcs().size() <= cfg.exact_limit) {
      kept = meg_exact(h, cfg.exact_limit);
    } else if (cfg.allow_heuristic) {
      kept = meg_greedy(h);
      out.certified = false;
    } else {
      throw Error(ErrorCode::kExactLimitExceeded,
                  "class of node " + std::to_string(members.front()) + " has " +
                      std::to_string(h.arcs().size()) +
                      " tight edges, above the exact limit of " +
                      std::to_string(cfg.exact_limit));
    }
    for (const Edge& e : block.tight) {
      if (!kept.contains(Edge{local[e.from], local[e.to]})) out.edges.insert(e);
    }
  }
  return out;
}

}  // namespace precsimp
