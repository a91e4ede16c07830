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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "isocert/group.hpp"

namespace isocert {

using VertexId = std::uint32_t;

/// Finite BFS-explored portion of a (possibly infinite) vertex-transitive
/// graph: the closed ball {v : d(basepoint, v) <= horizon}.
///
/// Vertices with dist < horizon are interior: all of their neighbours are
/// present, so gradients and perimeters of data supported there are exact.
/// When the whole graph was exhausted (`complete`), every vertex is interior.
struct ExploredBall {
  std::vector<Vertex> vertices;                  // index 0 is the basepoint
  std::vector<std::vector<VertexId>> adjacency;  // sorted, simple graph
  std::vector<int> dist;
  std::vector<char> interior;
  int horizon = 0;
  bool complete = false;
  int degree = 0;  // common degree of interior vertices
  std::size_t generator_count = 0;

  std::size_t size() const { return vertices.size(); }
  std::optional<VertexId> find(const Vertex& v) const;
  bool is_interior(VertexId v) const { return interior[v] != 0; }
  std::size_t interior_count() const;
  std::vector<VertexId> interior_vertices() const;
  /// Largest distance present in the ball; the diameter when complete.
  int max_distance() const;

  std::unordered_map<Vertex, VertexId, ElementHash> index;
};

struct BuildOptions {
  std::size_t max_vertices = 5'000'000;
};

/// BFS from the basepoint up to radius `horizon`. Throws ResourceError when
/// the vertex cap is exceeded and PreconditionError when horizon < 1.
ExploredBall build_ball(const Space& space, int horizon, const BuildOptions& options = {});

enum class DiagnosticKind {
  AdjacencyUnsorted,
  SelfLoop,
  DuplicateEdge,
  AsymmetricEdge,
  NeighborOutOfRange,
  DistanceMismatch,
  OutsideHorizon,
  InteriorFlagMismatch,
  DegreeIrregular,
  DegreeExceedsGenerators,
  BasepointNotOrigin,
};

struct Diagnostic {
  DiagnosticKind kind;
  VertexId vertex = 0;
  std::string message;
};

std::string_view diagnostic_name(DiagnosticKind kind);

/// Re-checks every ExploredBall invariant. An empty list means valid.
std::vector<Diagnostic> validate_ball(const ExploredBall& ball);

/// Multi-source BFS distances inside the explored subgraph. Entries that
/// cannot be reached are -1.
std::vector<int> ball_distances(const ExploredBall& ball, std::span<const VertexId> sources);

/// For complete balls: the sorted list of |B(v, r)| profiles, one vector of
/// open-ball sizes r = 1..diameter+1 per vertex. Used to check transitivity.
std::vector<std::vector<std::size_t>> ball_size_profiles(const ExploredBall& ball);

}  // namespace isocert
