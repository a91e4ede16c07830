// Copyright 2026 The isocert Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "isocert/ball.hpp"
#include "isocert/catalogue.hpp"
#include "isocert/field.hpp"
#include "isocert/group.hpp"

namespace isocert::testing {

inline ExploredBall ball_of(const GroupSpec& spec, int horizon) {
  return build_ball(Space(spec), horizon);
}

inline VertexId id_of(const ExploredBall& ball, const Vertex& v) { return ball.find(v).value(); }

inline ExactField exact_field(const ExploredBall& ball,
                              const std::vector<std::pair<Vertex, std::int64_t>>& values) {
  ExactField f(ball.size());
  for (const auto& [v, x] : values) f[id_of(ball, v)] = Rational(x);
  return f;
}

/// Cut edges of a subset counted edge by edge, without incremental updates.
inline std::uint64_t brute_cut(const ExploredBall& ball, const std::vector<char>& member) {
  std::uint64_t cut = 0;
  for (VertexId v = 0; v < ball.size(); ++v) {
    for (auto u : ball.adjacency[v]) {
      if (v < u && member[v] != member[u]) ++cut;
    }
  }
  return cut;
}

/// Minimum perimeter over all k-subsets of `pool`, by bitmask sweep.
inline std::uint64_t brute_min_perimeter(const ExploredBall& ball,
                                         const std::vector<VertexId>& pool, std::size_t k) {
  std::uint64_t best = UINT64_MAX;
  const std::uint64_t n = pool.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != k) continue;
    std::vector<char> member(ball.size(), 0);
    for (std::uint64_t i = 0; i < n; ++i) {
      if (mask >> i & 1) member[pool[i]] = 1;
    }
    best = std::min(best, 2 * brute_cut(ball, member));
  }
  return best;
}

}  // namespace isocert::testing
