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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isocert/ball.hpp"

namespace isocert {

/// Infinite graphs use the plain inequalities; compact (finite) graphs use the
/// restricted forms: radii bounded by the diameter, complements, zero-mean data.
enum class Regime { Infinite, Compact };

std::string_view regime_name(Regime regime);

/// Volume growth r -> Gamma(r) = |{v : d(basepoint, v) < r}| of open balls.
struct GrowthTable {
  std::vector<std::uint64_t> gamma;  // gamma[r - 1] = Gamma(r), r = 1..horizon
  int horizon = 0;
  int degree = 0;
  bool complete = false;
  std::optional<int> diameter;        // set iff complete
  std::optional<std::uint64_t> total;  // |V|, set iff complete
  std::uint64_t closed_ball = 0;       // |{d <= horizon}| = Gamma(horizon + 1)

  /// Gamma(r) for any r whose value is determined by the explored ball:
  /// r <= horizon + 1 always, every r >= 1 when complete. Gamma(0) = 0.
  std::uint64_t at(int r) const;
  /// Largest r for which at(r) is known (INT_MAX when complete).
  int known_up_to() const;

  /// Smallest integer r >= 1 with count <= Gamma(r). Throws PreconditionError
  /// when the explored range is too short to decide.
  int radius_for(std::uint64_t count) const;
  /// Smallest integer r >= 1 with count <= Gamma(r) / 2 (compact threshold).
  int half_radius_for(std::uint64_t count) const;
};

GrowthTable growth_table(const ExploredBall& ball);

struct SuperadditivityViolation {
  int r = 0;
  int s = 0;
  std::uint64_t lhs = 0;  // Gamma(r + s)
  std::uint64_t rhs = 0;  // Gamma(r) + Gamma(s)
};

/// Every pair r <= s with Gamma(r + s) < Gamma(r) + Gamma(s) in range:
/// r + s <= horizon (infinite) or r + s <= floor(diameter / 2) (compact).
/// Throws PreconditionError when the regime does not match completeness.
std::vector<SuperadditivityViolation> superadditivity_report(const GrowthTable& table,
                                                             Regime regime);

/// Whether Gamma(floor(d0 / 8)) <= |V| / 4 on a complete graph. Radius 0 (d0 < 8)
/// is reported as not applicable.
struct QuarterDiagnostic {
  int radius = 0;
  bool applicable = false;
  std::uint64_t gamma = 0;
  std::uint64_t total = 0;
  bool holds = false;
};

QuarterDiagnostic quarter_volume_diagnostic(const GrowthTable& table);

}  // namespace isocert
