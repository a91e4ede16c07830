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

#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "isocert/errors.hpp"
#include "isocert/random.hpp"
#include "isocert/uncertainty.hpp"

namespace isocert {
namespace {

using testing::ball_of;
using testing::id_of;

// Ternary search on the convex map r -> a r + b r^-alpha.
double grid_minimum(double alpha, double a, double b, double* argmin = nullptr) {
  double lo = 1e-9, hi = 1e9;
  const auto f = [&](double r) { return a * r + b * std::pow(r, -alpha); };
  for (int i = 0; i < 2000; ++i) {
    // Work in log r so the bracket shrinks evenly.
    const double l1 = std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) / 3);
    const double l2 = std::exp(std::log(lo) + 2 * (std::log(hi) - std::log(lo)) / 3);
    if (f(l1) < f(l2)) {
      hi = l2;
    } else {
      lo = l1;
    }
  }
  if (argmin) *argmin = (lo + hi) / 2;
  return f((lo + hi) / 2);
}

TEST(Balance, SymmetricCase) {
  const auto r = balance_constant(1, 1, 1);
  EXPECT_DOUBLE_EQ(r.minimum, 2.0);
  EXPECT_DOUBLE_EQ(r.argmin, 1.0);
  EXPECT_DOUBLE_EQ(r.constant, 2.0);
}

TEST(Balance, AlphaTwo) {
  const auto r = balance_constant(2, 1, 1);
  EXPECT_NEAR(r.constant, std::cbrt(2.0) + std::pow(2.0, -2.0 / 3.0), 1e-15);
  EXPECT_NEAR(r.minimum, 1.88988, 1e-5);
  EXPECT_NEAR(r.argmin, std::cbrt(2.0), 1e-15);
}

TEST(Balance, AgreesWithSearch) {
  for (double alpha : {0.01, 0.5, 1.0, 2.0, 7.5, 100.0}) {
    for (double a : {0.1, 1.0, 13.0}) {
      for (double b : {0.2, 1.0, 40.0}) {
        double where = 0;
        const double oracle = grid_minimum(alpha, a, b, &where);
        const auto r = balance_constant(alpha, a, b);
        EXPECT_NEAR(r.minimum, oracle, 1e-9 * oracle) << alpha << " " << a << " " << b;
        EXPECT_LE(std::fabs(a * r.argmin + b * std::pow(r.argmin, -alpha) - r.minimum),
                  1e-12 * r.minimum);
      }
    }
  }
}

TEST(Balance, BoundedByTwoE) {
  for (int i = -30; i <= 30; ++i) {
    const double alpha = std::pow(10.0, i / 10.0);
    EXPECT_LE(balance_constant(alpha, 1, 1).constant, 2 * std::numbers::e) << alpha;
  }
  EXPECT_THROW(balance_constant(0, 1, 1), PreconditionError);
  EXPECT_THROW(balance_constant(1, -1, 1), PreconditionError);
}

TEST(CertifiedConstant, InfiniteLinearCase) {
  const auto t = certified_constant({1, 1, Regime::Infinite});
  EXPECT_DOUBLE_EQ(t.balance, 2.0);
  EXPECT_DOUBLE_EQ(t.faris, 4.0);
  EXPECT_DOUBLE_EQ(t.additive_gradient, 4.0);
  EXPECT_DOUBLE_EQ(t.additive_weight, 1.0);
  EXPECT_NEAR(t.value, 2.0 * std::sqrt(8.0), 1e-12);
  EXPECT_NEAR(t.value, t.balance * std::sqrt(t.ceiling * t.additive_gradient), 1e-12);
}

TEST(CertifiedConstant, MonotoneInEveryFactor) {
  for (Regime setting : {Regime::Infinite, Regime::Compact}) {
    for (double p : {1.0, 2.0, 3.0}) {
      for (double alpha : {0.5, 1.0, 2.0}) {
        const UncertaintyParams params{p, alpha, setting};
        const double base = certified_constant(params).value;
        for (int which = 0; which < 5; ++which) {
          ChainFactors f;
          double* fields[] = {&f.weak_isoperimetric_infinite, &f.weak_isoperimetric_compact,
                              &f.decoupling_infinite, &f.decoupling_compact, &f.ceiling};
          *fields[which] *= 1.5;
          EXPECT_GE(certified_constant(params, f).value, base);
        }
      }
    }
  }
}

TEST(CertifiedConstant, RejectsBadParams) {
  EXPECT_THROW(certified_constant({0.5, 1, Regime::Infinite}), PreconditionError);
  EXPECT_THROW(certified_constant({1, 0, Regime::Infinite}), PreconditionError);
  EXPECT_THROW(certified_constant({INFINITY, 1, Regime::Compact}), PreconditionError);
}

TEST(HpwRatio, DeltaOnLine) {
  const auto z = ball_of(lattice_spec(1), 4);
  const auto table = growth_table(z);
  const auto w = make_weight(z, CanonicalWeight{0});
  ExactField f(z.size());
  f[0] = 1;
  EXPECT_NEAR(hpw_ratio(z, f, w, table, {1, 1, Regime::Infinite}), 0.5, 1e-15);
  EXPECT_NEAR(hpw_ratio(z, f, w, table, {2, 1, Regime::Infinite}),
              std::pow(2.0, -0.5) * std::pow(6.0, -0.25), 1e-15);
  EXPECT_NEAR(hpw_ratio(z, f, w, table, {2, 1, Regime::Infinite}), 0.4518, 1e-4);
  EXPECT_THROW(hpw_ratio(z, ExactField(z.size()), w, table, {1, 1, Regime::Infinite}),
               PreconditionError);
}

TEST(HpwRatio, Preconditions) {
  const auto z = ball_of(lattice_spec(1), 4);
  const auto table = growth_table(z);
  Weight flat;
  flat.values.assign(z.size(), 1.0);
  ExactField f(z.size());
  f[0] = 1;
  EXPECT_THROW(hpw_ratio(z, f, flat, table, {1, 1, Regime::Infinite}), PreconditionError);
  const auto c8 = ball_of(cyclic_spec(8), 8);
  const auto w8 = make_weight(c8, CanonicalWeight{0});
  ExactField g(c8.size());
  g[0] = 1;
  EXPECT_THROW(hpw_ratio(c8, g, w8, growth_table(c8), {1, 1, Regime::Compact}),
               PreconditionError);
  g[1] = -1;
  EXPECT_NO_THROW(hpw_ratio(c8, g, w8, growth_table(c8), {1, 1, Regime::Compact}));
  EXPECT_THROW(hpw_ratio(c8, g, w8, growth_table(c8), {1, 1, Regime::Infinite}),
               PreconditionError);
}

TEST(HpwRatio, ScalingInvariance) {
  const auto z2 = ball_of(lattice_spec(2), 5);
  const auto table = growth_table(z2);
  const auto w = make_weight(z2, CanonicalWeight{0});
  for (std::uint64_t s = 1; s <= 20; ++s) {
    RandomFieldOptions o;
    o.support_size = 6;
    o.seed = s;
    const auto f = random_exact_field(z2, o);
    if (f.is_zero()) continue;
    ExactField g(f.size());
    for (VertexId v = 0; v < f.size(); ++v) g[v] = f[v] * Rational(-7, 3);
    for (double p : {1.0, 2.0, 3.0}) {
      const UncertaintyParams params{p, 0.5, Regime::Infinite};
      EXPECT_NEAR(hpw_ratio(z2, f, w, table, params), hpw_ratio(z2, g, w, table, params), 1e-12);
    }
  }
}

TEST(HpwRatio, AutomorphismInvariance) {
  // Rotations of C12 act by automorphisms; move f and the weight centre together.
  const Space space(cyclic_spec(12));
  const auto ball = build_ball(space, 12);
  const auto table = growth_table(ball);
  for (std::uint64_t s = 1; s <= 10; ++s) {
    RandomFieldOptions o;
    o.support_size = 5;
    o.seed = s;
    o.zero_sum = true;
    const auto f = random_exact_field(ball, o);
    if (f.is_zero()) continue;
    for (std::int64_t shift = 1; shift < 12; shift += 4) {
      ExactField g(f.size());
      for (VertexId v = 0; v < f.size(); ++v) {
        g[id_of(ball, space.act({shift}, ball.vertices[v]))] = f[v];
      }
      const auto w0 = make_weight(ball, CanonicalWeight{0});
      const auto w1 = make_weight(ball, CanonicalWeight{id_of(ball, {shift})});
      const UncertaintyParams params{2, 1, Regime::Compact};
      EXPECT_NEAR(hpw_ratio(ball, f, w0, table, params), hpw_ratio(ball, g, w1, table, params),
                  1e-12);
    }
  }
}

TEST(AdditiveLink, HoldsOnLine) {
  const auto z = ball_of(lattice_spec(1), 8);
  const auto w = make_weight(z, CanonicalWeight{0});
  const auto trace = certified_constant({2, 1, Regime::Infinite});
  RandomFieldOptions o;
  o.support_size = 7;
  o.mode = FieldMode::Floating;
  const auto f = random_real_field(z, o);
  for (int r = 1; r <= 8; ++r) EXPECT_TRUE(additive_link_check(z, f, w, trace, r).pass);
  EXPECT_THROW(additive_link_check(z, f, w, trace, 0), PreconditionError);
}

TEST(Faris, SpecExamples) {
  const auto z = ball_of(lattice_spec(1), 3);
  const auto tz = growth_table(z);
  ExactField f(z.size());
  f[0] = 1;
  const VertexId e[] = {0};
  const auto r = faris_check(z, f, e, 1, Rational(1), tz, Regime::Infinite);
  EXPECT_EQ(r.lhs, 1);
  EXPECT_EQ(r.bound, 4);
  EXPECT_TRUE(r.pass);
  const VertexId e2[] = {0, 1};
  EXPECT_THROW(faris_check(z, f, e2, 1, Rational(1), tz, Regime::Infinite), PreconditionError);

  const auto c8 = ball_of(cyclic_spec(8), 8);
  const auto t8 = growth_table(c8);
  ExactField constant(std::vector<Rational>(8, Rational(3)));
  const auto c = faris_check(c8, constant, e, 1, Rational(1), t8, Regime::Compact);
  EXPECT_EQ(c.lhs, 0);
  EXPECT_TRUE(c.pass);
}

TEST(Faris, CycleArcWithCertifiedConstant) {
  const auto c8 = ball_of(cyclic_spec(8), 8);
  const auto t8 = growth_table(c8);
  ASSERT_EQ(t8.at(2), 3u);
  const VertexId arc[] = {id_of(c8, {7}), id_of(c8, {0}), id_of(c8, {1})};
  const Rational cf(static_cast<long long>(certified_constant({1, 1, Regime::Compact}).faris));
  for (std::uint64_t s = 0; s < 200; ++s) {
    RandomFieldOptions o;
    o.support_size = 1 + s % 8;
    o.seed = s;
    const auto f = random_exact_field(c8, o);
    ASSERT_TRUE(faris_check(c8, f, arc, 2, cf, t8, Regime::Compact).pass);
  }
}

TEST(Markov, MedianBoundedByMean) {
  const auto q4 = ball_of(hypercube_spec(4), 4);
  for (std::uint64_t s = 0; s < 100; ++s) {
    RandomFieldOptions o;
    o.support_size = 1 + s % 16;
    o.seed = s;
    o.zero_sum = s % 2 == 0;
    ASSERT_TRUE(markov_check(q4, random_exact_field(q4, o)).pass);
  }
}

TEST(Poincare, CycleFourExamples) {
  const auto c4 = ball_of(cyclic_spec(4), 4);
  const auto t4 = growth_table(c4);
  const auto alt = testing::exact_field(c4, {{{0}, 1}, {{1}, -1}, {{2}, 1}, {{3}, -1}});
  EXPECT_DOUBLE_EQ(poincare_ratio(c4, alt, t4, 1), 1.0 / 8);
  const auto wave = testing::exact_field(c4, {{{0}, 1}, {{2}, -1}});
  EXPECT_DOUBLE_EQ(poincare_ratio(c4, wave, t4, 1), 1.0 / 8);
  EXPECT_DOUBLE_EQ(poincare_ratio(c4, ExactField(4), t4, 1), 0.0);
  EXPECT_THROW(poincare_ratio(c4, testing::exact_field(c4, {{{0}, 1}}), t4, 1),
               PreconditionError);
}

TEST(DmEstimate, LineStartsAtDelta) {
  const auto z = ball_of(lattice_spec(1), 6);
  const auto w = make_weight(z, CanonicalWeight{0});
  RealField delta(z.size());
  delta[0] = 1;
  EXPECT_NEAR(dm_ratio(z, delta, w), 1 / std::sqrt(6.0), 1e-15);
  DmOptions o;
  o.restarts = 1;
  o.steps = 100;
  const auto est = dm_estimate(z, w, Regime::Infinite, o);
  ASSERT_FALSE(est.history.empty());
  EXPECT_NEAR(est.history.front(), 1 / std::sqrt(6.0), 1e-15);
  EXPECT_GE(est.ratio, 1 / std::sqrt(6.0));
  for (std::size_t i = 1; i < est.history.size(); ++i) {
    EXPECT_GE(est.history[i], est.history[i - 1]);
  }
  EXPECT_NEAR(est.ratio, dm_ratio(z, est.witness, w), 1e-15);
}

TEST(DmEstimate, ZeroStepsReturnsBestStart) {
  const auto z2 = ball_of(lattice_spec(2), 4);
  const auto w = make_weight(z2, CanonicalWeight{0});
  DmOptions o;
  o.steps = 0;
  o.restarts = 4;
  o.seed = 5;
  const auto est = dm_estimate(z2, w, Regime::Infinite, o);
  EXPECT_EQ(est.history.size(), 1u);
  EXPECT_EQ(est.ratio, dm_ratio(z2, est.witness, w));
}

TEST(DmEstimate, CompactIteratesStayZeroSum) {
  const auto c8 = ball_of(cyclic_spec(8), 8);
  const auto w = make_weight(c8, CanonicalWeight{0});
  DmOptions o;
  o.seed = 3;
  o.restarts = 4;
  o.steps = 50;
  const auto est = dm_estimate(c8, w, Regime::Compact, o);
  double sum = 0;
  for (double x : est.witness.values()) sum += x;
  EXPECT_LE(std::fabs(sum), 1e-12);
  EXPECT_GT(est.ratio, 0);
}

TEST(DmEstimate, DeterministicAcrossWorkers) {
  const auto h = ball_of(heisenberg_spec(), 3);
  const auto w = make_weight(h, CanonicalWeight{0});
  DmOptions a;
  a.seed = 17;
  a.restarts = 4;
  a.steps = 30;
  DmOptions b = a;
  b.workers = 4;
  const auto x = dm_estimate(h, w, Regime::Infinite, a);
  const auto y = dm_estimate(h, w, Regime::Infinite, b);
  EXPECT_EQ(x.ratio, y.ratio);
  EXPECT_EQ(x.witness, y.witness);
}

TEST(ConstantsReport, IntegerLine) {
  const auto z = ball_of(lattice_spec(1), 8);
  ConstantsOptions o;
  o.kmax = 5;
  o.dm.restarts = 2;
  o.dm.steps = 50;
  const auto rep = constants_relation_report(z, growth_table(z), Regime::Infinite, o);
  EXPECT_EQ(rep.c.value, Rational(5, 12));
  EXPECT_GE(rep.d.ratio, 1 / std::sqrt(6.0));
  EXPECT_NEAR(rep.ratio, rep.d.ratio / std::pow(5.0 / 12.0, 2), 1e-12);
  EXPECT_GE(rep.ratio, 2.35);
}

}  // namespace
}  // namespace isocert
