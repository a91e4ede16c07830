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
#include <vector>

#include "isocert/ball.hpp"
#include "isocert/field.hpp"

namespace isocert {

/// One step of splitmix64; advances `state`.
std::uint64_t splitmix64(std::uint64_t& state);

/// Counter-based seed splitting: the seed of stream (a, b) under `master`.
/// Independent of evaluation order, so parallel workers stay reproducible.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t substream = 0);

/// xoshiro256** with portable helper distributions (no reliance on the
/// implementation-defined <random> distributions).
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }
  result_type operator()();

  /// Uniform integer in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n);
  /// Uniform integer in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);
  /// Uniform double in [0, 1).
  double uniform();
  /// Standard normal (Box-Muller).
  double normal();

 private:
  std::uint64_t s_[4];
  std::optional<double> spare_;
};

enum class FieldMode { Exact, Floating };

struct RandomFieldOptions {
  std::size_t support_size = 1;
  std::int64_t lo = -5;  // exact mode value range
  std::int64_t hi = 5;
  FieldMode mode = FieldMode::Exact;
  std::uint64_t seed = 0;
  bool zero_sum = false;  // only on complete graphs
  /// Support candidates; empty means all interior vertices.
  std::vector<VertexId> pool;
};

/// Uniformly random support among the interior vertices (or `pool`); integer values in
/// [lo, hi] (exact) or standard normal values (floating). With `zero_sum`,
/// the mean is subtracted (exactly in exact mode). Deterministic per seed.
ScalarField random_field(const ExploredBall& ball, const RandomFieldOptions& options);

ExactField random_exact_field(const ExploredBall& ball, const RandomFieldOptions& options);
RealField random_real_field(const ExploredBall& ball, const RandomFieldOptions& options);

}  // namespace isocert
