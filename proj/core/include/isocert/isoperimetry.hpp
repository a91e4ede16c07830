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
#include <span>
#include <vector>

#include "isocert/ball.hpp"
#include "isocert/field.hpp"
#include "isocert/finite_group.hpp"
#include "isocert/growth.hpp"
#include "isocert/rational.hpp"

namespace isocert {

struct ProfileEntry {
  std::size_t k = 0;
  std::uint64_t perimeter = 0;
  std::vector<VertexId> witness;  // sorted vertex ids, |witness| = k
  bool exact = false;
};

/// Minimal perimeter found per cardinality.
struct IsoProfile {
  Regime convention = Regime::Infinite;
  std::vector<ProfileEntry> entries;  // ascending k

  const ProfileEntry* find(std::size_t k) const;
  bool all_exact() const;
};

/// Vertices a subset may use: interior vertices (infinite convention) or the
/// whole vertex set (compact convention, complete graphs only).
std::vector<VertexId> profile_candidates(const ExploredBall& ball, Regime convention);

/// Minimal-change ("revolving door") order over the t-subsets of {0..n-1}.
/// Consecutive subsets differ by removing one element and inserting another.
class RevolvingDoor {
 public:
  RevolvingDoor(std::size_t n, std::size_t t);

  /// Current subset, ascending.
  const std::vector<std::size_t>& current() const { return sorted_; }
  /// Advances to the next subset; returns false after the last one. On
  /// success `removed` and `inserted` describe the swap.
  bool next(std::size_t& removed, std::size_t& inserted);

 private:
  void refresh_sorted();

  std::size_t n_;
  std::size_t t_;
  std::vector<std::size_t> c_;  // 1-based, c_[t + 1] = n sentinel
  std::vector<std::size_t> sorted_;
  std::vector<std::size_t> previous_;
  bool done_ = false;
};

/// Sum_{k=1..kmax} C(n, k), saturating at UINT64_MAX.
std::uint64_t subset_count(std::size_t n, std::size_t kmax);

struct EnumerationOptions {
  std::uint64_t work_cap = 100'000'000;
  unsigned workers = 1;
};

/// Exhaustive minimum perimeter for k = 1..kmax. The compact convention
/// clips kmax to |V| / 2. Throws ResourceError beyond the work cap.
IsoProfile exact_profile(const ExploredBall& ball, std::size_t kmax, Regime convention,
                         const EnumerationOptions& options = {});

struct AnnealingOptions {
  std::uint64_t budget = 50'000;  // proposed moves per chain
  std::uint64_t seed = 0;
  unsigned restarts = 1;
  unsigned workers = 1;
};

/// Simulated annealing over fixed-cardinality subsets with swap moves biased
/// toward the outer vertex boundary; entries are upper bounds (exact = false).
IsoProfile heuristic_profile(const ExploredBall& ball, std::span<const std::size_t> ks,
                             Regime convention, const AnnealingOptions& options = {});

struct IsoConstantEstimate {
  Rational value;  // max_k k / (r_k * I(k))
  std::size_t k = 0;
  int radius = 0;
  std::uint64_t perimeter = 0;
  std::vector<VertexId> witness;
  bool exact = false;  // false: lower bound from heuristic entries
  Regime convention = Regime::Infinite;
};

/// C_M estimate from a profile. Infinite: r_k = min{r : k <= Gamma(r)}.
/// Compact: k <= |V| / 2 and r_k = min{r : k <= Gamma(r) / 2}.
IsoConstantEstimate isoperimetric_constant(const IsoProfile& profile, const GrowthTable& table,
                                           Regime convention);

template <class T>
struct BoundCheck {
  T lhs{};
  T bound{};
  bool pass = false;
};

struct DecoupledCheck : BoundCheck<Rational> {
  int radius = 0;  // r_E
  std::uint64_t perimeter = 0;
};

/// |A n E| <= C * r_E * ||dA||, with r_E the smallest radius with |E| <= Gamma(r).
DecoupledCheck decoupled_check(const ExploredBall& ball, std::span<const VertexId> a,
                               std::span<const VertexId> e, const GrowthTable& table,
                               const Rational& constant, Regime convention);

struct DoubleCountingCheck {
  Rational average;    // (1/|B|) sum_{b in B} |Ab \ A|
  Rational threshold;  // |A| / 2
  bool pass = false;
};

/// Throws PreconditionError unless 2|A| <= |B| and B is non-empty.
DoubleCountingCheck double_counting_check(const FiniteGroup& group,
                                          std::span<const FiniteGroup::Index> a,
                                          std::span<const FiniteGroup::Index> b);

/// True iff every generator maps edges of the complete ball to edges, i.e.
/// the left action of the group is by graph automorphisms.
bool action_preserves_adjacency(const Space& space, const ExploredBall& ball);

struct TranslationCheck : BoundCheck<Rational> {
  int distance = 0;  // d(0, x.0)
  std::size_t stabilizer = 0;
};

/// lhs = (1/|Stab|) sum_{y in G} |f((yx).0) - f(y.0)|, bound = d(0, x.0) ||grad f||_1.
TranslationCheck translation_gradient_check(const Space& space, const ExploredBall& ball,
                                            const FiniteGroup& group, const ExactField& f,
                                            const Element& x);

}  // namespace isocert
