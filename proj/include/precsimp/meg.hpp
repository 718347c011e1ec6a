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

#ifndef PRECSIMP_MEG_HPP_
#define PRECSIMP_MEG_HPP_

#include <cstddef>
#include <vector>

#include "precsimp/graph.hpp"

namespace precsimp {

// Unweighted digraph on nodes 1..n.
class Digraph {
 public:
  Digraph() = default;
  // Throws Error(kIndexOutOfRange) on self-loops or endpoints outside 1..n.
  Digraph(int n, EdgeSet arcs);

  int n() const { return n_; }
  const EdgeSet& arcs() const { return arcs_; }

 private:
  int n_ = 0;
  EdgeSet arcs_;
};

// Row-major n x n; entry (i-1)*n + (j-1) is set iff j is reachable from i.
class ReachabilityMatrix {
 public:
  ReachabilityMatrix(int n, std::vector<char> bits)
      : n_(n), bits_(std::move(bits)) {}
  int n() const { return n_; }
  bool operator()(Node i, Node j) const {
    return bits_[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) +
                 static_cast<std::size_t>(j - 1)] != 0;
  }
  friend bool operator==(const ReachabilityMatrix&,
                         const ReachabilityMatrix&) = default;

 private:
  int n_;
  std::vector<char> bits_;
};

ReachabilityMatrix reachability(const Digraph& h);

// True iff every arc of h outside kept is bridged by a walk using only kept
// arcs. Throws Error(kNotASubset) if kept is not a subset of h's arcs.
bool same_reachability(const Digraph& h, const EdgeSet& kept);

// Minimum-cardinality reachability-preserving arc subset by
// branch-and-bound seeded with the greedy solution. Throws
// Error(kLimitExceeded) when h has more than limit arcs.
EdgeSet meg_exact(const Digraph& h, std::size_t limit);

// Drops arcs in lexicographic order whenever reachability survives. The
// result is minimal (no single arc can be dropped) but not always minimum.
EdgeSet meg_greedy(const Digraph& h);

}  // namespace precsimp

#endif  // PRECSIMP_MEG_HPP_
