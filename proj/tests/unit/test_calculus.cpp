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

#include "helpers.hpp"
#include "isocert/calculus.hpp"
#include "isocert/errors.hpp"
#include "isocert/growth.hpp"
#include "isocert/random.hpp"

namespace isocert {
namespace {

using testing::ball_of;
using testing::exact_field;
using testing::id_of;

TEST(Gradient, DeltaOnLine) {
  const auto ball = ball_of(lattice_spec(1), 4);
  const auto f = exact_field(ball, {{{0}, 1}});
  const auto g = gradient_modulus(ball, f);
  EXPECT_EQ(g[id_of(ball, {0})], 2);
  EXPECT_EQ(g[id_of(ball, {1})], 1);
  EXPECT_EQ(g[id_of(ball, {-1})], 1);
  EXPECT_EQ(g[id_of(ball, {2})], 0);
  EXPECT_EQ(l1_norm(g), 4);
}

TEST(Gradient, RampOnLineSeesZeroExtension) {
  // f = (0, 1, 2) at x = 0, 1, 2 and zero elsewhere on Z.
  const auto ball = ball_of(lattice_spec(1), 5);
  const auto f = exact_field(ball, {{{1}, 1}, {{2}, 2}});
  const auto g = gradient_modulus(ball, f);
  EXPECT_EQ(g[id_of(ball, {0})], 1);
  EXPECT_EQ(g[id_of(ball, {1})], 2);
  EXPECT_EQ(g[id_of(ball, {2})], 3);
  EXPECT_EQ(g[id_of(ball, {3})], 2);
  EXPECT_EQ(coarea_residual(ball, f), 0);
}

TEST(Gradient, ConstantOnCompleteGraphVanishes) {
  const auto ball = ball_of(hypercube_spec(3), 3);
  ExactField f(std::vector<Rational>(ball.size(), Rational(7, 3)));
  EXPECT_TRUE(gradient_modulus(ball, f).is_zero());
}

TEST(Gradient, RejectsBoundarySupport) {
  const auto ball = ball_of(lattice_spec(1), 2);
  const auto f = exact_field(ball, {{{2}, 1}});
  EXPECT_THROW(gradient_modulus(ball, f), PreconditionError);
}

TEST(LpNorm, SpecExamples) {
  EXPECT_DOUBLE_EQ(lp_norm(RealField(std::vector<double>{1, 0, 0}), Exponent(2)), 1.0);
  EXPECT_DOUBLE_EQ(lp_norm(RealField(std::vector<double>{3, 4}), Exponent(2)), 5.0);
  EXPECT_DOUBLE_EQ(lp_norm(RealField(std::vector<double>{1, -2, 2}), Exponent(1)), 5.0);
  EXPECT_DOUBLE_EQ(lp_norm(RealField(std::vector<double>{1, -2, 2}), Exponent::infinity()), 2.0);
  EXPECT_EQ(l1_norm(ExactField(std::vector<Rational>{Rational(1, 2), Rational(-1, 3)})),
            Rational(5, 6));
  EXPECT_THROW(Exponent(0.5), PreconditionError);
}

TEST(EdgePerimeter, SpecExamples) {
  const auto z = ball_of(lattice_spec(1), 3);
  const VertexId origin[] = {0};
  EXPECT_EQ(edge_perimeter(z, origin), 4u);
  EXPECT_EQ(edge_perimeter(z, std::span<const VertexId>{}), 0u);

  const auto z2 = ball_of(lattice_spec(2), 3);
  const VertexId domino[] = {id_of(z2, {0, 0}), id_of(z2, {1, 0})};
  EXPECT_EQ(edge_perimeter(z2, domino), 12u);

  const VertexId outside[] = {id_of(z, {3})};
  EXPECT_THROW(edge_perimeter(z, outside), PreconditionError);
}

TEST(EdgePerimeter, ComplementSymmetryOnCompleteGraphs) {
  for (const auto& name : {"C8", "Q3", "D6", "S4-points"}) {
    const auto inst = catalogue_instance(name);
    const auto ball = ball_of(inst.spec, inst.horizon);
    const std::size_t n = ball.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << std::min<std::size_t>(n, 12));
         ++mask) {
      std::vector<char> a(n, 0), c(n, 1);
      for (std::size_t i = 0; i < n && i < 12; ++i) {
        a[i] = mask >> i & 1;
        c[i] = !a[i];
      }
      ASSERT_EQ(edge_perimeter(ball, a), edge_perimeter(ball, c)) << name;
      ASSERT_EQ(edge_perimeter(ball, a), 2 * testing::brute_cut(ball, a));
    }
  }
}

TEST(Coarea, Examples) {
  const auto z = ball_of(lattice_spec(1), 3);
  EXPECT_EQ(coarea_residual(z, exact_field(z, {{{0}, 1}})), 0);
  EXPECT_EQ(coarea_residual(z, exact_field(z, {{{0}, -3}, {{1}, 2}, {{-1}, 2}})), 0);
  EXPECT_THROW(coarea_residual(z, ScalarField(RealField(z.size()))), ModeError);
}

TEST(Coarea, RandomFieldsVanishExactly) {
  std::uint64_t seed = 0;
  for (const auto& inst : standard_catalogue()) {
    const auto ball = ball_of(inst.spec, std::min(inst.horizon, 4));
    for (int i = 0; i < 20; ++i) {
      RandomFieldOptions o;
      o.support_size = 1 + (seed % std::min<std::size_t>(ball.interior_count(), 9));
      o.seed = ++seed;
      const auto f = random_exact_field(ball, o);
      ASSERT_EQ(coarea_residual(ball, f), 0) << inst.name << " seed " << seed;
    }
  }
}

TEST(Coarea, RationalValues) {
  const auto z2 = ball_of(lattice_spec(2), 3);
  ExactField f(z2.size());
  f[id_of(z2, {0, 0})] = Rational(1, 3);
  f[id_of(z2, {1, 0})] = Rational(-5, 7);
  f[id_of(z2, {1, 1})] = Rational(1, 3);
  EXPECT_EQ(coarea_residual(z2, f), 0);
}

TEST(Median, SpecExamples) {
  const auto c4 = ball_of(cyclic_spec(4), 4);
  const auto f1 = exact_field(c4, {{{0}, 2}});
  EXPECT_EQ(median(c4, f1), 0);
  const auto f2 = exact_field(c4, {{{0}, 1}, {{1}, 1}});
  EXPECT_EQ(median(c4, f2), 0);
  ExactField constant(std::vector<Rational>(4, Rational(5)));
  EXPECT_EQ(median(c4, constant), 5);
  EXPECT_THROW(median(ball_of(lattice_spec(1), 2), ExactField(5)), PreconditionError);
}

TEST(Median, InequalitiesHoldOnRandomFields) {
  for (const auto& name : {"C8", "Q4", "D8", "S4-points"}) {
    const auto inst = catalogue_instance(name);
    const auto ball = ball_of(inst.spec, inst.horizon);
    for (std::uint64_t s = 1; s <= 100; ++s) {
      RandomFieldOptions o;
      o.support_size = 1 + s % ball.size();
      o.seed = s;
      o.lo = -3;
      o.hi = 3;
      const auto f = random_exact_field(ball, o);
      const auto m0 = median(ball, f);
      ASSERT_TRUE(median_counts(f, m0).holds()) << name << " seed " << s;
      // Minimality: no smaller value of f qualifies.
      std::size_t at_most = 0;
      for (const auto& x : f.values()) at_most += x <= m0;
      ASSERT_GE(2 * at_most, f.size());
      for (const auto& t : f.values()) {
        if (t >= m0) continue;
        std::size_t c = 0;
        for (const auto& x : f.values()) c += x <= t;
        ASSERT_LT(2 * c, f.size());
      }
    }
  }
}

TEST(Weight, CanonicalOnLine) {
  const auto z = ball_of(lattice_spec(1), 4);
  const auto w = make_weight(z, CanonicalWeight{0});
  EXPECT_EQ(w[id_of(z, {0})], 1.0);
  EXPECT_EQ(w[id_of(z, {1})], 2.0);
  EXPECT_EQ(w[id_of(z, {-2})], 3.0);
  const auto report = weight_admissibility(z, w, growth_table(z));
  EXPECT_TRUE(report.ok());
  EXPECT_TRUE(report.equality_everywhere);
  EXPECT_TRUE(report.partial);
}

TEST(Weight, MultipointSinglePointIsCanonical) {
  const auto z2 = ball_of(lattice_spec(2), 4);
  const auto a = make_weight(z2, CanonicalWeight{3});
  const auto b = make_weight(z2, MultipointWeight{1, {3}});
  EXPECT_EQ(a.values, b.values);
  EXPECT_THROW(make_weight(z2, MultipointWeight{0, {3}}), PreconditionError);
  EXPECT_THROW(make_weight(z2, MultipointWeight{1, {}}), PreconditionError);
}

TEST(Weight, ConstantOneIsNotAdmissible) {
  const auto c8 = ball_of(cyclic_spec(8), 8);
  Weight w;
  w.values.assign(c8.size(), 1.0);
  const auto report = weight_admissibility(c8, w, growth_table(c8));
  ASSERT_FALSE(report.ok());
  EXPECT_EQ(report.violations.front().r, 1);
  EXPECT_EQ(report.violations.front().count, 8u);
}

TEST(Weight, TwoPointOnPlaneIsAdmissible) {
  const auto z2 = ball_of(lattice_spec(2), 6);
  const auto w = make_weight(z2, MultipointWeight{2, {0, id_of(z2, {2, 1})}});
  const auto report = weight_admissibility(z2, w, growth_table(z2));
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(report.checked_up_to, 6);
}

// Leibniz, degree and Dirichlet bounds on random fields.
TEST(Properties, LeibnizDegreeDirichlet) {
  for (const auto& name : {"Z2", "F2", "H3", "C16", "Q4"}) {
    const auto inst = catalogue_instance(name);
    const auto ball = ball_of(inst.spec, std::min(inst.horizon, 4));
    const double delta = ball.degree;
    for (std::uint64_t s = 1; s <= 30; ++s) {
      RandomFieldOptions o;
      o.support_size = std::min<std::size_t>(ball.interior_count(), 1 + s % 10);
      o.seed = s;
      const auto f = random_exact_field(ball, o);
      const auto grad = gradient_modulus(ball, f);
      for (int p = 2; p <= 4; ++p) {
        ExactField abs_p(f.size()), signed_p(f.size()), weighted(f.size());
        for (VertexId v = 0; v < f.size(); ++v) {
          Rational a = abs(f[v]), pw = 1;
          for (int i = 0; i < p - 1; ++i) pw *= a;
          abs_p[v] = pw * a;
          signed_p[v] = f[v] * pw;
          weighted[v] = pw * grad[v];
        }
        const auto lhs = l1_norm(gradient_modulus(ball, abs_p));
        const auto mid = l1_norm(gradient_modulus(ball, signed_p));
        const auto rhs = 2 * p * l1_norm(weighted);
        ASSERT_LE(lhs, mid) << name;
        ASSERT_LE(mid, rhs) << name;
        const Exponent e(p);
        ASSERT_LE(lp_norm(grad, e), 2 * delta * lp_norm(f, e) * (1 + 1e-12));
      }
      Rational energy = 0, grad2 = 0;
      for (VertexId v = 0; v < f.size(); ++v) {
        grad2 += grad[v] * grad[v];
        for (auto u : ball.adjacency[v]) {
          if (v < u) energy += (f[v] - f[u]) * (f[v] - f[u]);
        }
      }
      ASSERT_LE(grad2, 2 * static_cast<long long>(ball.degree) * energy);
    }
  }
}

}  // namespace
}  // namespace isocert
