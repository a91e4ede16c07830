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

#include "isocert/ball.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <limits>
#include <utility>

#include "isocert/errors.hpp"

namespace isocert {

std::optional<VertexId> ExploredBall::find(const Vertex& v) const {
  const auto it = index.find(v);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

std::size_t ExploredBall::interior_count() const {
  return static_cast<std::size_t>(std::count(interior.begin(), interior.end(), char{1}));
}

std::vector<VertexId> ExploredBall::interior_vertices() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < interior.size(); ++v) {
    if (interior[v]) out.push_back(v);
  }
  return out;
}

int ExploredBall::max_distance() const {
  return dist.empty() ? 0 : *std::max_element(dist.begin(), dist.end());
}

ExploredBall build_ball(const Space& space, int horizon, const BuildOptions& options) {
  if (horizon < 1) throw PreconditionError("horizon must be >= 1");

  ExploredBall ball;
  ball.horizon = horizon;
  ball.generator_count = space.generators().size();
  ball.vertices.push_back(space.basepoint());
  ball.index.emplace(space.basepoint(), 0);
  ball.dist.push_back(0);

  bool escaped = false;
  std::vector<VertexId> neighbours;
  for (VertexId cur = 0; cur < ball.vertices.size(); ++cur) {
    neighbours.clear();
    const int d = ball.dist[cur];
    for (const auto& s : space.generators()) {
      Vertex next = space.act(s, ball.vertices[cur]);
      if (next == ball.vertices[cur]) continue;
      if (const auto it = ball.index.find(next); it != ball.index.end()) {
        neighbours.push_back(it->second);
        continue;
      }
      if (d >= horizon) {
        escaped = true;
        continue;
      }
      if (ball.vertices.size() >= options.max_vertices) {
        throw ResourceError("explored ball exceeds the vertex cap of " +
                            std::to_string(options.max_vertices) + " at radius " +
                            std::to_string(d + 1));
      }
      const auto id = static_cast<VertexId>(ball.vertices.size());
      ball.index.emplace(next, id);
      ball.vertices.push_back(std::move(next));
      ball.dist.push_back(d + 1);
      neighbours.push_back(id);
    }
    std::sort(neighbours.begin(), neighbours.end());
    neighbours.erase(std::unique(neighbours.begin(), neighbours.end()), neighbours.end());
    ball.adjacency.push_back(neighbours);
  }

  ball.complete = !escaped;
  ball.interior.resize(ball.vertices.size());
  for (std::size_t v = 0; v < ball.vertices.size(); ++v) {
    ball.interior[v] = (ball.complete || ball.dist[v] < horizon) ? 1 : 0;
  }
  ball.degree = static_cast<int>(ball.adjacency[0].size());
  return ball;
}

std::string_view diagnostic_name(DiagnosticKind kind) {
  static constexpr std::array<std::string_view, 11> names{
      "adjacency-unsorted", "self-loop",        "duplicate-edge",
      "asymmetric-edge",    "neighbor-out-of-range", "distance-mismatch",
      "outside-horizon",    "interior-flag-mismatch", "degree-irregular",
      "degree-exceeds-generators", "basepoint-not-origin"};
  return names[static_cast<std::size_t>(kind)];
}

std::vector<Diagnostic> validate_ball(const ExploredBall& ball) {
  std::vector<Diagnostic> out;
  const auto n = static_cast<VertexId>(ball.size());
  auto report = [&](DiagnosticKind kind, VertexId v, std::string msg) {
    out.push_back({kind, v, std::move(msg)});
  };

  if (ball.adjacency.size() != n || ball.dist.size() != n || ball.interior.size() != n) {
    report(DiagnosticKind::NeighborOutOfRange, 0, "per-vertex arrays have inconsistent sizes");
    return out;
  }
  if (n == 0) return out;
  if (ball.dist[0] != 0) report(DiagnosticKind::BasepointNotOrigin, 0, "dist(basepoint) != 0");

  for (VertexId v = 0; v < n; ++v) {
    const auto& adj = ball.adjacency[v];
    for (std::size_t i = 0; i < adj.size(); ++i) {
      const VertexId u = adj[i];
      if (u >= n) {
        report(DiagnosticKind::NeighborOutOfRange, v, "neighbour index " + std::to_string(u));
        continue;
      }
      if (u == v) report(DiagnosticKind::SelfLoop, v, "vertex lists itself as a neighbour");
      if (i > 0 && adj[i - 1] == u) {
        report(DiagnosticKind::DuplicateEdge, v, "neighbour " + std::to_string(u) + " repeated");
      } else if (i > 0 && adj[i - 1] > u) {
        report(DiagnosticKind::AdjacencyUnsorted, v, "neighbour list not sorted");
      }
      const auto& back = ball.adjacency[u];
      if (std::find(back.begin(), back.end(), v) == back.end()) {
        report(DiagnosticKind::AsymmetricEdge, v,
               "edge " + std::to_string(v) + "->" + std::to_string(u) + " has no reverse");
      }
    }
  }

  for (VertexId v = 0; v < n; ++v) {
    if (ball.dist[v] > ball.horizon || ball.dist[v] < 0) {
      report(DiagnosticKind::OutsideHorizon, v, "dist " + std::to_string(ball.dist[v]));
    }
    if (v != 0) {
      int best = std::numeric_limits<int>::max();
      for (auto u : ball.adjacency[v]) {
        if (u < n) best = std::min(best, ball.dist[u]);
      }
      if (best == std::numeric_limits<int>::max() || ball.dist[v] != best + 1) {
        report(DiagnosticKind::DistanceMismatch, v,
               "dist " + std::to_string(ball.dist[v]) + " violates the BFS recurrence");
      }
    }
    const bool expect_interior = ball.complete || ball.dist[v] < ball.horizon;
    if (expect_interior != (ball.interior[v] != 0)) {
      report(DiagnosticKind::InteriorFlagMismatch, v, "interior flag inconsistent with dist");
    }
    if (ball.interior[v] && static_cast<int>(ball.adjacency[v].size()) != ball.degree) {
      report(DiagnosticKind::DegreeIrregular, v,
             "degree " + std::to_string(ball.adjacency[v].size()) + " != " +
                 std::to_string(ball.degree));
    }
  }
  if (static_cast<std::size_t>(ball.degree) > ball.generator_count) {
    report(DiagnosticKind::DegreeExceedsGenerators, 0, "degree exceeds |generators|");
  }
  return out;
}

std::vector<int> ball_distances(const ExploredBall& ball, std::span<const VertexId> sources) {
  std::vector<int> d(ball.size(), -1);
  std::deque<VertexId> queue;
  for (auto s : sources) {
    if (d[s] != 0) {
      d[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    for (auto v : ball.adjacency[u]) {
      if (d[v] < 0) {
        d[v] = d[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return d;
}

std::vector<std::vector<std::size_t>> ball_size_profiles(const ExploredBall& ball) {
  if (!ball.complete) throw PreconditionError("ball size profiles need a complete graph");
  std::vector<std::vector<int>> all;
  all.reserve(ball.size());
  int ecc = 0;
  for (VertexId v = 0; v < ball.size(); ++v) {
    const VertexId src[] = {v};
    all.push_back(ball_distances(ball, src));
    ecc = std::max(ecc, *std::max_element(all.back().begin(), all.back().end()));
  }
  std::vector<std::vector<std::size_t>> profiles;
  profiles.reserve(ball.size());
  for (const auto& d : all) {
    std::vector<std::size_t> sizes(ecc + 1, 0);
    for (int x : d) {
      for (int r = x + 1; r <= ecc + 1; ++r) ++sizes[r - 1];
    }
    profiles.push_back(std::move(sizes));
  }
  return profiles;
}

}  // namespace isocert
