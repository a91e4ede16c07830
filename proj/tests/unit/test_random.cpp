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

#include <gtest/gtest.h>

#include <atomic>
#include <set>

#include "helpers.hpp"
#include "isocert/errors.hpp"
#include "isocert/parallel.hpp"
#include "isocert/random.hpp"

namespace isocert {
namespace {

using testing::ball_of;

TEST(Rng, KnownFirstOutputsAreStable) {
  Rng a(42), b(42), c(43);
  for (int i = 0; i < 100; ++i) {
    const auto x = a();
    EXPECT_EQ(x, b());
    (void)c();
  }
  EXPECT_NE(Rng(42)(), Rng(43)());
}

TEST(Rng, BelowStaysInRange) {
  Rng rng(7);
  std::vector<int> hits(6, 0);
  for (int i = 0; i < 6000; ++i) ++hits[rng.below(6)];
  for (int h : hits) {
    EXPECT_GT(h, 800);
    EXPECT_LT(h, 1200);
  }
  for (int i = 0; i < 1000; ++i) {
    const auto x = rng.between(-5, 5);
    EXPECT_GE(x, -5);
    EXPECT_LE(x, 5);
  }
}

TEST(Rng, NormalMoments) {
  Rng rng(11);
  double sum = 0, sq = 0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    const double x = rng.normal();
    sum += x;
    sq += x * x;
  }
  EXPECT_NEAR(sum / n, 0.0, 0.05);
  EXPECT_NEAR(sq / n, 1.0, 0.05);
}

TEST(DeriveSeed, StreamsAreDistinct) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t s = 0; s < 50; ++s) {
    for (std::uint64_t t = 0; t < 50; ++t) seen.insert(derive_seed(9, s, t));
  }
  EXPECT_EQ(seen.size(), 2500u);
  EXPECT_EQ(derive_seed(1, 2, 3), derive_seed(1, 2, 3));
  EXPECT_NE(derive_seed(1, 2, 3), derive_seed(2, 2, 3));
}

TEST(RandomField, SameSeedSameField) {
  const auto ball = ball_of(lattice_spec(2), 4);
  RandomFieldOptions o;
  o.support_size = 10;
  o.seed = 1;
  EXPECT_EQ(random_exact_field(ball, o), random_exact_field(ball, o));
  o.mode = FieldMode::Floating;
  EXPECT_EQ(std::get<RealField>(random_field(ball, o)), std::get<RealField>(random_field(ball, o)));
}

TEST(RandomField, SupportIsInteriorAndSized) {
  const auto ball = ball_of(lattice_spec(2), 4);
  RandomFieldOptions o;
  o.support_size = ball.interior_count();
  o.lo = 1;
  o.hi = 3;
  const auto f = random_exact_field(ball, o);
  EXPECT_EQ(f.support().size(), ball.interior_count());
  for (auto v : f.support()) EXPECT_TRUE(ball.is_interior(v));
  o.support_size += 1;
  EXPECT_THROW(random_exact_field(ball, o), PreconditionError);
}

TEST(RandomField, ZeroSumIsExact) {
  const auto ball = ball_of(cyclic_spec(7), 7);
  RandomFieldOptions o;
  o.support_size = 3;
  o.zero_sum = true;
  for (std::uint64_t s = 0; s < 20; ++s) {
    o.seed = s;
    const auto f = random_exact_field(ball, o);
    Rational sum = 0;
    for (const auto& x : f.values()) sum += x;
    EXPECT_EQ(sum, 0);
  }
  EXPECT_THROW(random_exact_field(ball_of(lattice_spec(1), 3), o), PreconditionError);
}

TEST(ParallelFor, CoversEveryIndexAndRethrows) {
  std::vector<int> slots(1000, 0);
  parallel_for(slots.size(), 4, [&](std::size_t i) { slots[i] = static_cast<int>(i) * 2; });
  for (std::size_t i = 0; i < slots.size(); ++i) EXPECT_EQ(slots[i], static_cast<int>(i) * 2);
  EXPECT_THROW(parallel_for(100, 3,
                            [](std::size_t i) {
                              if (i == 17) throw ResourceError("boom");
                            }),
               ResourceError);
}

}  // namespace
}  // namespace isocert
