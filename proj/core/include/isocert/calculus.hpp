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
#include <span>
#include <variant>
#include <vector>

#include "isocert/ball.hpp"
#include "isocert/field.hpp"
#include "isocert/growth.hpp"

namespace isocert {

/// Exponent p in [1, inf] for l^p norms.
class Exponent {
 public:
  /// Throws PreconditionError for p < 1 or NaN.
  explicit Exponent(double p);
  static Exponent infinity();

  bool is_infinite() const { return infinite_; }
  double value() const { return value_; }

 private:
  Exponent() = default;
  double value_ = 1.0;
  bool infinite_ = false;
};

/// |grad f|(m) = sum over neighbours n of |f(m) - f(n)|.
/// The support of f must avoid non-interior vertices of an incomplete ball.
template <class T>
Field<T> gradient_modulus(const ExploredBall& ball, const Field<T>& f);

/// Counting-measure l^p norm.
template <class T>
double lp_norm(const Field<T>& f, Exponent p);

Rational l1_norm(const ExactField& f);

/// ||grad 1_A||_1, i.e. twice the number of cut edges.
std::uint64_t edge_perimeter(const ExploredBall& ball, std::span<const VertexId> subset);
std::uint64_t edge_perimeter(const ExploredBall& ball, const std::vector<char>& member);

/// integral_0^inf ||d{|f| > s}|| ds - ||grad |f| ||_1, evaluated exactly.
Rational coarea_residual(const ExploredBall& ball, const ExactField& f);
/// Throws ModeError for floating fields.
Rational coarea_residual(const ExploredBall& ball, const ScalarField& f);

/// m0 = min { t : |{f <= t}| >= |V| / 2 } on a complete graph.
template <class T>
T median(const ExploredBall& ball, const Field<T>& f);

struct MedianCounts {
  std::size_t above = 0;  // |{f > m0}|
  std::size_t below = 0;  // |{f < m0}|
  std::size_t total = 0;
  bool holds() const { return 2 * above <= total && 2 * below <= total; }
};

template <class T>
MedianCounts median_counts(const Field<T>& f, const T& m0);

struct CanonicalWeight {
  VertexId center = 0;
};

struct MultipointWeight {
  int k = 1;
  std::vector<VertexId> points;
};

using WeightKind = std::variant<CanonicalWeight, MultipointWeight>;

/// canonical(m0): w = d(m0, .) + 1; multipoint: w = k * (min_j d(m_j, .) + 1).
Weight make_weight(const ExploredBall& ball, const WeightKind& kind);

struct AdmissibilityViolation {
  int r = 0;
  std::uint64_t count = 0;  // |{w <= r}|
  std::uint64_t gamma = 0;  // Gamma(r)
};

struct AdmissibilityReport {
  std::vector<AdmissibilityViolation> violations;
  int checked_up_to = 0;
  /// Radii above `certified_up_to` were evaluated on the window only.
  int certified_up_to = 0;
  bool partial = false;
  bool equality_everywhere = true;
  bool ok() const { return violations.empty(); }
};

/// Checks |{w <= r}| <= Gamma(r) for r = 1..horizon (1..diameter + 1 when complete).
AdmissibilityReport weight_admissibility(const ExploredBall& ball, const Weight& w,
                                         const GrowthTable& table);

/// Throws PreconditionError if f is non-zero on a non-interior vertex.
template <class T>
void require_interior_support(const ExploredBall& ball, const Field<T>& f);

}  // namespace isocert
