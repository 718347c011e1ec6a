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

#include "precsimp/distance.hpp"

#include <cstdint>
#include <limits>
#include <string>

#include "precsimp/error.hpp"

namespace precsimp {

namespace {

enum class Relaxation { kDone, kNegativeCycle, kOverflow };

// Floyd-Warshall over integer weights that share one implicit denominator.
// reach[i*n+j] marks finite entries; no sentinel values are used. Stops as
// soon as a diagonal entry turns negative so values cannot run away.
template <typename Int, typename CheckedAdd>
Relaxation floyd_warshall(int n, std::vector<Int>& d, std::vector<char>& reach,
                          CheckedAdd add) {
  const std::size_t un = static_cast<std::size_t>(n);
  for (std::size_t k = 0; k < un; ++k) {
    for (std::size_t i = 0; i < un; ++i) {
      if (!reach[i * un + k]) continue;
      const Int dik = d[i * un + k];
      Int* row = &d[i * un];
      char* row_reach = &reach[i * un];
      const Int* krow = &d[k * un];
      const char* krow_reach = &reach[k * un];
      for (std::size_t j = 0; j < un; ++j) {
        if (!krow_reach[j]) continue;
        Int candidate;
        if (!add(dik, krow[j], candidate)) return Relaxation::kOverflow;
        if (!row_reach[j] || candidate < row[j]) {
          row[j] = std::move(candidate);
          row_reach[j] = 1;
        }
      }
      if (row[i] < 0) return Relaxation::kNegativeCycle;
    }
  }
  return Relaxation::kDone;
}

template <typename Int>
void seed(const PrecedenceGraph& g, const std::vector<BigInt>& scaled,
          std::vector<Int>& d, std::vector<char>& reach) {
  const std::size_t un = static_cast<std::size_t>(g.n());
  d.assign(un * un, Int(0));
  reach.assign(un * un, 0);
  for (std::size_t i = 0; i < un; ++i) reach[i * un + i] = 1;
  std::size_t idx = 0;
  for (const auto& [e, w] : g.edges()) {
    std::size_t pos = static_cast<std::size_t>(e.from - 1) * un +
                      static_cast<std::size_t>(e.to - 1);
    d[pos] = static_cast<Int>(scaled[idx++]);
    reach[pos] = 1;
  }
}

}  // namespace

DistanceMatrix DistanceMatrix::infeasible(int n) {
  return DistanceMatrix(n, false, {});
}

DistanceMatrix DistanceMatrix::from_entries(
    int n, std::vector<std::optional<Weight>> entries) {
  if (entries.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw Error(ErrorCode::kIndexOutOfRange, "distance entries size mismatch");
  }
  return DistanceMatrix(n, true, std::move(entries));
}

const std::optional<Weight>& DistanceMatrix::at(Node i, Node j) const {
  if (!feasible_) {
    throw Error(ErrorCode::kInfeasibleSystem,
                "negative cycle found; no minimum walk weights exist");
  }
  if (i < 1 || i > n_ || j < 1 || j > n_) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "node pair (" + std::to_string(i) + "," + std::to_string(j) +
                    ") outside 1.." + std::to_string(n_));
  }
  return d_[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) +
            static_cast<std::size_t>(j - 1)];
}

DistanceMatrix analyze_distances(const PrecedenceGraph& g) {
  const int n = g.n();
  const std::size_t un = static_cast<std::size_t>(n);

  // Bring all weights onto the least common denominator.
  BigInt lcd = 1;
  for (const auto& [e, w] : g.edges()) {
    BigInt den = w.denominator();
    if (den != 1) lcd = lcd / boost::multiprecision::gcd(lcd, den) * den;
  }
  std::vector<BigInt> scaled;
  scaled.reserve(g.size());
  bool fits_int64 = true;
  const BigInt lo = std::numeric_limits<std::int64_t>::min();
  const BigInt hi = std::numeric_limits<std::int64_t>::max();
  for (const auto& [e, w] : g.edges()) {
    scaled.push_back(w.numerator() * (lcd / w.denominator()));
    if (scaled.back() < lo || scaled.back() > hi) fits_int64 = false;
  }

  std::vector<char> reach;
  std::vector<std::optional<Weight>> entries(un * un);
  auto unscale = [&](const auto& value) {
    return Weight(BigInt(value), lcd);
  };

  if (fits_int64) {
    std::vector<std::int64_t> d;
    seed(g, scaled, d, reach);
    Relaxation status = floyd_warshall(
        n, d, reach, [](std::int64_t a, std::int64_t b, std::int64_t& out) {
          return !__builtin_add_overflow(a, b, &out);
        });
    if (status == Relaxation::kNegativeCycle) {
      return DistanceMatrix::infeasible(n);
    }
    if (status == Relaxation::kDone) {
      for (std::size_t p = 0; p < un * un; ++p) {
        if (reach[p]) entries[p] = unscale(d[p]);
      }
      return DistanceMatrix::from_entries(n, std::move(entries));
    }
  }

  std::vector<BigInt> d;
  seed(g, scaled, d, reach);
  Relaxation status =
      floyd_warshall(n, d, reach, [](const BigInt& a, const BigInt& b, BigInt& out) {
        out = a + b;
        return true;
      });
  if (status == Relaxation::kNegativeCycle) return DistanceMatrix::infeasible(n);
  for (std::size_t p = 0; p < un * un; ++p) {
    if (reach[p]) entries[p] = unscale(d[p]);
  }
  return DistanceMatrix::from_entries(n, std::move(entries));
}

DistanceMatrix min_walk_weights(const PrecedenceGraph& g) {
  DistanceMatrix d = analyze_distances(g);
  if (!d.feasible()) {
    throw Error(ErrorCode::kInfeasibleSystem,
                "negative cycle found; the constraint system is infeasible");
  }
  return d;
}

bool implies(const DistanceMatrix& d, Node u, Node v, const Weight& b) {
  if (u == v) {
    throw Error(ErrorCode::kSameNode,
                "implication test needs distinct nodes, got " +
                    std::to_string(u) + " twice");
  }
  const std::optional<Weight>& duv = d.at(u, v);
  return duv.has_value() && *duv <= b;
}

}  // namespace precsimp
