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

#include "precsimp/meg.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "precsimp/error.hpp"

namespace precsimp {

namespace {

using Adjacency = std::vector<std::vector<Node>>;

bool reaches(const Adjacency& adj, Node from, Node to,
             std::vector<char>& seen, std::vector<Node>& stack) {
  if (from == to) return true;
  std::fill(seen.begin(), seen.end(), 0);
  stack.clear();
  stack.push_back(from);
  seen[from] = 1;
  while (!stack.empty()) {
    Node u = stack.back();
    stack.pop_back();
    for (Node v : adj[u]) {
      if (v == to) return true;
      if (!seen[v]) {
        seen[v] = 1;
        stack.push_back(v);
      }
    }
  }
  return false;
}

// Depth-first branch-and-bound over keep/drop decisions in arc order.
// Invariant: every dropped arc is bridged by the arcs currently kept, where
// undecided arcs count as kept. At a leaf this is exactly
// same_reachability.
class MegSearch {
 public:
  MegSearch(const Digraph& h, const EdgeSet& incumbent)
      : n_(h.n()),
        arcs_(h.arcs().begin(), h.arcs().end()),
        kept_(arcs_.size(), 1),
        best_size_(incumbent.size()),
        seen_(static_cast<std::size_t>(n_) + 1),
        lower_bound_(degree_bound()) {
    best_kept_.assign(arcs_.size(), 0);
    for (std::size_t a = 0; a < arcs_.size(); ++a) {
      best_kept_[a] = incumbent.contains(arcs_[a]) ? 1 : 0;
    }
  }

  EdgeSet run() {
    if (best_size_ > lower_bound_) search(0, arcs_.size());
    EdgeSet out;
    for (std::size_t a = 0; a < arcs_.size(); ++a) {
      if (best_kept_[a]) out.insert(out.end(), arcs_[a]);
    }
    return out;
  }

 private:
  // Every node with an out-arc keeps one; likewise for in-arcs.
  std::size_t degree_bound() const {
    std::vector<char> has_out(static_cast<std::size_t>(n_) + 1, 0);
    std::vector<char> has_in(static_cast<std::size_t>(n_) + 1, 0);
    for (const Edge& e : arcs_) {
      has_out[e.from] = 1;
      has_in[e.to] = 1;
    }
    return std::max(std::count(has_out.begin(), has_out.end(), 1),
                    std::count(has_in.begin(), has_in.end(), 1));
  }

  bool dropped_arcs_bridged() {
    Adjacency adj(static_cast<std::size_t>(n_) + 1);
    for (std::size_t a = 0; a < arcs_.size(); ++a) {
      if (kept_[a]) adj[arcs_[a].from].push_back(arcs_[a].to);
    }
    for (std::size_t a : dropped_) {
      if (!reaches(adj, arcs_[a].from, arcs_[a].to, seen_, stack_)) return false;
    }
    return true;
  }

  void search(std::size_t index, std::size_t kept_count) {
    if (done_) return;
    const std::size_t undecided = arcs_.size() - index;
    if (kept_count - undecided >= best_size_) return;
    if (index == arcs_.size()) {
      best_size_ = kept_count;
      best_kept_ = kept_;
      done_ = best_size_ <= lower_bound_;
      return;
    }
    kept_[index] = 0;
    dropped_.push_back(index);
    if (dropped_arcs_bridged()) search(index + 1, kept_count - 1);
    dropped_.pop_back();
    kept_[index] = 1;
    search(index + 1, kept_count);
  }

  int n_;
  std::vector<Edge> arcs_;
  std::vector<char> kept_;
  std::vector<std::size_t> dropped_;
  std::size_t best_size_;
  std::vector<char> best_kept_;
  std::vector<char> seen_;
  std::vector<Node> stack_;
  std::size_t lower_bound_;
  bool done_ = false;
};

}  // namespace

Digraph::Digraph(int n, EdgeSet arcs) : n_(n), arcs_(std::move(arcs)) {
  for (const Edge& e : arcs_) {
    if (e.from < 1 || e.from > n_ || e.to < 1 || e.to > n_ || e.from == e.to) {
      std::ostringstream os;
      os << "arc " << e << " invalid for " << n_ << " nodes";
      throw Error(ErrorCode::kIndexOutOfRange, os.str());
    }
  }
}

ReachabilityMatrix reachability(const Digraph& h) {
  const std::size_t n = static_cast<std::size_t>(h.n());
  Adjacency adj(n + 1);
  for (const Edge& e : h.arcs()) adj[e.from].push_back(e.to);
  std::vector<char> bits(n * n, 0);
  std::vector<Node> stack;
  for (Node s = 1; s <= h.n(); ++s) {
    char* row = &bits[static_cast<std::size_t>(s - 1) * n];
    row[s - 1] = 1;
    stack.assign(1, s);
    while (!stack.empty()) {
      Node u = stack.back();
      stack.pop_back();
      for (Node v : adj[u]) {
        if (!row[v - 1]) {
          row[v - 1] = 1;
          stack.push_back(v);
        }
      }
    }
  }
  return ReachabilityMatrix(h.n(), std::move(bits));
}

bool same_reachability(const Digraph& h, const EdgeSet& kept) {
  Adjacency adj(static_cast<std::size_t>(h.n()) + 1);
  for (const Edge& e : kept) {
    if (!h.arcs().contains(e)) {
      std::ostringstream os;
      os << "arc " << e << " is not in the digraph";
      throw Error(ErrorCode::kNotASubset, os.str());
    }
    adj[e.from].push_back(e.to);
  }
  std::vector<char> seen(static_cast<std::size_t>(h.n()) + 1);
  std::vector<Node> stack;
  for (const Edge& e : h.arcs()) {
    if (kept.contains(e)) continue;
    if (!reaches(adj, e.from, e.to, seen, stack)) return false;
  }
  return true;
}

EdgeSet meg_greedy(const Digraph& h) {
  Adjacency adj(static_cast<std::size_t>(h.n()) + 1);
  for (const Edge& e : h.arcs()) adj[e.from].push_back(e.to);
  std::vector<char> seen(static_cast<std::size_t>(h.n()) + 1);
  std::vector<Node> stack;
  EdgeSet kept = h.arcs();
  for (const Edge& e : h.arcs()) {
    auto& out = adj[e.from];
    auto it = std::find(out.begin(), out.end(), e.to);
    out.erase(it);
    if (reaches(adj, e.from, e.to, seen, stack)) {
      kept.erase(e);
    } else {
      out.push_back(e.to);
    }
  }
  return kept;
}

EdgeSet meg_exact(const Digraph& h, std::size_t limit) {
  if (h.arcs().size() > limit) {
    throw Error(ErrorCode::kLimitExceeded,
                std::to_string(h.arcs().size()) +
                    " arcs exceed the exact search limit of " +
                    std::to_string(limit));
  }
  return MegSearch(h, meg_greedy(h)).run();
}

}  // namespace precsimp
