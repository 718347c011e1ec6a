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

#include "precsimp/verify.hpp"

#include <numeric>
#include <string>

#include "precsimp/distance.hpp"
#include "precsimp/error.hpp"
#include "precsimp/redundancy.hpp"

namespace precsimp {

namespace {

// Advances idx to the next k-combination of 0..m-1 in lexicographic order.
bool next_combination(std::vector<std::size_t>& idx, std::size_t m) {
  const std::size_t k = idx.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (idx[i] < m - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::optional<Edge> first_unimplied(const PrecedenceGraph& constraints,
                                    const DistanceMatrix& other) {
  for (const auto& [e, c] : constraints.edges()) {
    if (!implies(other, e.from, e.to, c)) return e;
  }
  return std::nullopt;
}

}  // namespace

EquivalenceReport systems_equivalent(const PrecedenceGraph& a,
                                     const PrecedenceGraph& b) {
  if (a.n() != b.n()) {
    throw Error(ErrorCode::kNodeCountMismatch,
                "systems have " + std::to_string(a.n()) + " and " +
                    std::to_string(b.n()) + " variables");
  }
  DistanceMatrix da = min_walk_weights(a);
  DistanceMatrix db = min_walk_weights(b);
  EquivalenceReport report;
  if (auto e = first_unimplied(a, db)) {
    report.equivalent = false;
    report.witness = EquivalenceWitness{*e, Side::kA};
  } else if (auto f = first_unimplied(b, da)) {
    report.equivalent = false;
    report.witness = EquivalenceWitness{*f, Side::kB};
  }
  return report;
}

BruteForceResult brute_force_max_redundant(const PrecedenceGraph& g,
                                           std::size_t limit) {
  if (g.size() > limit) {
    throw Error(ErrorCode::kLimitExceeded,
                std::to_string(g.size()) + " edges exceed the brute-force limit of " +
                    std::to_string(limit));
  }
  min_walk_weights(g);

  const EdgeSet all = g.edge_set();
  const std::vector<Edge> edges(all.begin(), all.end());
  const std::size_t m = edges.size();
  BruteForceResult out;
  for (std::size_t k = m; k > 0; --k) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    do {
      EdgeSet r;
      for (std::size_t i : idx) r.insert(edges[i]);
      if (is_redundant_edge_set(g, r)) out.sets.push_back(std::move(r));
    } while (next_combination(idx, m));
    if (!out.sets.empty()) {
      out.size = k;
      return out;
    }
  }
  out.sets.push_back(EdgeSet{});
  return out;
}

EdgeSet brute_force_redundant_edges(const PrecedenceGraph& g) {
  min_walk_weights(g);
  EdgeSet out;
  for (const auto& [e, c] : g.edges()) {
    if (is_redundant_edge_set(g, EdgeSet{e})) out.insert(out.end(), e);
  }
  return out;
}

}  // namespace precsimp
