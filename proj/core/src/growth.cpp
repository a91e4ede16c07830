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

#include "isocert/growth.hpp"

#include <algorithm>
#include <limits>

#include "isocert/errors.hpp"

namespace isocert {

std::string_view regime_name(Regime regime) {
  return regime == Regime::Infinite ? "infinite" : "compact";
}

std::uint64_t GrowthTable::at(int r) const {
  if (r <= 0) return 0;
  if (r <= horizon) return gamma[r - 1];
  if (r == horizon + 1) return closed_ball;
  if (complete) return *total;
  throw PreconditionError("Gamma(" + std::to_string(r) + ") lies beyond the explored horizon " +
                          std::to_string(horizon));
}

int GrowthTable::known_up_to() const {
  return complete ? std::numeric_limits<int>::max() : horizon + 1;
}

int GrowthTable::radius_for(std::uint64_t count) const {
  const int limit = complete ? *diameter + 1 : horizon + 1;
  for (int r = 1; r <= limit; ++r) {
    if (count <= at(r)) return r;
  }
  throw PreconditionError("no explored radius r has Gamma(r) >= " + std::to_string(count));
}

int GrowthTable::half_radius_for(std::uint64_t count) const {
  const int limit = complete ? *diameter + 1 : horizon + 1;
  for (int r = 1; r <= limit; ++r) {
    if (2 * count <= at(r)) return r;
  }
  throw PreconditionError("no explored radius r has Gamma(r) / 2 >= " + std::to_string(count));
}

GrowthTable growth_table(const ExploredBall& ball) {
  GrowthTable t;
  t.horizon = ball.horizon;
  t.degree = ball.degree;
  t.complete = ball.complete;
  std::vector<std::uint64_t> shell(ball.horizon + 1, 0);
  for (int d : ball.dist) ++shell[d];
  t.gamma.resize(ball.horizon);
  std::uint64_t acc = 0;
  for (int r = 1; r <= ball.horizon; ++r) {
    acc += shell[r - 1];
    t.gamma[r - 1] = acc;
  }
  t.closed_ball = acc + shell[ball.horizon];
  if (ball.complete) {
    t.diameter = ball.max_distance();
    t.total = ball.size();
  }
  return t;
}

std::vector<SuperadditivityViolation> superadditivity_report(const GrowthTable& table,
                                                             Regime regime) {
  if (regime == Regime::Infinite && table.complete) {
    throw PreconditionError("infinite-mode super-additivity needs an incomplete ball");
  }
  if (regime == Regime::Compact && !table.complete) {
    throw PreconditionError("compact-mode super-additivity needs a complete graph");
  }
  const int limit = regime == Regime::Infinite ? table.horizon : *table.diameter / 2;
  std::vector<SuperadditivityViolation> out;
  for (int r = 1; 2 * r <= limit; ++r) {
    for (int s = r; r + s <= limit; ++s) {
      const auto lhs = table.at(r + s);
      const auto rhs = table.at(r) + table.at(s);
      if (lhs < rhs) out.push_back({r, s, lhs, rhs});
    }
  }
  return out;
}

QuarterDiagnostic quarter_volume_diagnostic(const GrowthTable& table) {
  if (!table.complete) throw PreconditionError("quarter-volume diagnostic needs a complete graph");
  QuarterDiagnostic q;
  q.radius = *table.diameter / 8;
  q.total = *table.total;
  q.applicable = q.radius >= 1;
  if (q.applicable) {
    q.gamma = table.at(q.radius);
    q.holds = 4 * q.gamma <= q.total;
  }
  return q;
}

}  // namespace isocert
