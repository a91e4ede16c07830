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

#include <algorithm>
#include <array>
#include <set>

#include "helpers.hpp"
#include "isocert/ball.hpp"
#include "isocert/catalogue.hpp"
#include "isocert/errors.hpp"
#include "isocert/finite_group.hpp"
#include "isocert/group.hpp"

namespace isocert {
namespace {

using testing::ball_of;

TEST(BuildBall, IntegerLineRadiusTwo) {
  const auto ball = ball_of(lattice_spec(1), 2);
  ASSERT_EQ(ball.size(), 5u);
  std::set<std::int64_t> xs;
  for (const auto& v : ball.vertices) xs.insert(v.at(0));
  EXPECT_EQ(xs, (std::set<std::int64_t>{-2, -1, 0, 1, 2}));
  EXPECT_EQ(ball.degree, 2);
  EXPECT_FALSE(ball.complete);
  EXPECT_EQ(ball.vertices[0], (Vertex{0}));
  EXPECT_EQ(ball.interior_count(), 3u);
}

TEST(BuildBall, HypercubeIsComplete) {
  const auto ball = ball_of(hypercube_spec(3), 3);
  EXPECT_EQ(ball.size(), 8u);
  EXPECT_TRUE(ball.complete);
  EXPECT_EQ(ball.degree, 3);
  EXPECT_EQ(ball.interior_count(), 8u);
}

// Reduced words of length <= R over k free generators: 1 + 2k sum (2k-1)^(j-1).
std::size_t reduced_words(int rank, int radius) {
  std::size_t total = 1, sphere = 2 * rank;
  for (int j = 1; j <= radius; ++j) {
    total += sphere;
    sphere *= 2 * rank - 1;
  }
  return total;
}

TEST(BuildBall, FreeGroupCountsReducedWords) {
  EXPECT_EQ(ball_of(free_group_spec(2), 2).size(), 17u);
  for (int rank = 1; rank <= 3; ++rank) {
    for (int r = 1; r <= 4; ++r) {
      EXPECT_EQ(ball_of(free_group_spec(rank), r).size(), reduced_words(rank, r))
          << "rank " << rank << " radius " << r;
    }
  }
}

// Heisenberg ball by exhaustive word enumeration with an independent product.
std::set<Element> heisenberg_words(int radius) {
  using H = std::array<std::int64_t, 3>;
  const H gens[] = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}};
  std::set<H> layer = {{0, 0, 0}}, all = layer;
  for (int r = 0; r < radius; ++r) {
    std::set<H> next;
    for (const auto& x : layer) {
      for (const auto& s : gens) {
        // left multiplication s * x
        next.insert({s[0] + x[0], s[1] + x[1], s[2] + x[2] + s[0] * x[1]});
      }
    }
    all.insert(next.begin(), next.end());
    layer = std::move(next);
  }
  std::set<Element> out;
  for (const auto& h : all) out.insert(Element{h[0], h[1], h[2]});
  return out;
}

TEST(BuildBall, HeisenbergMatchesWordEnumeration) {
  for (int r = 1; r <= 4; ++r) {
    const auto ball = ball_of(heisenberg_spec(), r);
    const std::set<Element> got(ball.vertices.begin(), ball.vertices.end());
    EXPECT_EQ(got, heisenberg_words(r)) << "radius " << r;
  }
}

TEST(BuildBall, RejectsBadInput) {
  EXPECT_THROW(ball_of(lattice_spec(1), 0), PreconditionError);
  BuildOptions tight;
  tight.max_vertices = 100;
  EXPECT_THROW(build_ball(Space(free_group_spec(2)), 5, tight), ResourceError);
}

TEST(Space, ValidatesGenerators) {
  GroupSpec asym = lattice_spec(1);
  asym.generators = {{1}};
  EXPECT_THROW(Space{asym}, SpecError);
  GroupSpec with_identity = lattice_spec(1);
  with_identity.generators = {{0}, {1}, {-1}};
  EXPECT_THROW(Space{with_identity}, SpecError);
  GroupSpec bad_degree = symmetric_group_spec(3);
  bad_degree.generators.push_back({1, 0});
  EXPECT_THROW(Space{bad_degree}, SpecError);
}

TEST(Space, SymmetrizeAddsInverses) {
  GroupSpec s = lattice_spec(2);
  s.generators = {{1, 0}, {0, 1}, {1, 0}};
  const auto added = symmetrize(s);
  EXPECT_EQ(added.size(), 2u);
  EXPECT_EQ(s.generators.size(), 4u);
  EXPECT_NO_THROW(Space{s});
}

TEST(ValidateBall, CleanOnCatalogue) {
  for (const auto& inst : standard_catalogue()) {
    const auto ball = ball_of(inst.spec, inst.horizon);
    const auto report = validate_ball(ball);
    EXPECT_TRUE(report.empty()) << inst.name << ": " << report.front().message;
  }
}

TEST(ValidateBall, DetectsAsymmetricEdge) {
  auto ball = ball_of(lattice_spec(1), 3);
  auto& adj = ball.adjacency[0];
  adj.erase(adj.begin());
  const auto report = validate_ball(ball);
  EXPECT_TRUE(std::any_of(report.begin(), report.end(), [](const Diagnostic& d) {
    return d.kind == DiagnosticKind::AsymmetricEdge;
  }));
}

TEST(ValidateBall, DetectsDistanceMismatch) {
  auto ball = ball_of(lattice_spec(2), 3);
  ball.dist[3] += 1;
  const auto report = validate_ball(ball);
  EXPECT_TRUE(std::any_of(report.begin(), report.end(), [](const Diagnostic& d) {
    return d.kind == DiagnosticKind::DistanceMismatch;
  }));
}

TEST(Transitivity, BallSizeProfilesConstant) {
  for (const auto& inst : standard_catalogue()) {
    if (inst.regime != Regime::Compact) continue;
    const auto ball = ball_of(inst.spec, inst.horizon);
    ASSERT_TRUE(ball.complete) << inst.name;
    const auto profiles = ball_size_profiles(ball);
    for (const auto& p : profiles) EXPECT_EQ(p, profiles.front()) << inst.name;
  }
}

TEST(Transitivity, SymmetricGroupCayley) {
  const auto ball = ball_of(symmetric_group_spec(4), 10);
  ASSERT_TRUE(ball.complete);
  EXPECT_EQ(ball.size(), 24u);
  EXPECT_EQ(ball.degree, 6);
  const auto profiles = ball_size_profiles(ball);
  for (const auto& p : profiles) EXPECT_EQ(p, profiles.front());
}

TEST(Horizon, RestrictionReproducesSmallerBall) {
  for (const auto& spec : {lattice_spec(2), free_group_spec(2), heisenberg_spec()}) {
    const auto small = ball_of(spec, 3);
    const auto big = ball_of(spec, 4);
    std::size_t count = 0;
    for (VertexId v = 0; v < big.size(); ++v) {
      if (big.dist[v] > 3) continue;
      ++count;
      const auto w = small.find(big.vertices[v]);
      ASSERT_TRUE(w.has_value());
      EXPECT_EQ(small.dist[*w], big.dist[v]);
      std::set<Vertex> a, b;
      for (auto u : small.adjacency[*w]) a.insert(small.vertices[u]);
      for (auto u : big.adjacency[v]) {
        if (big.dist[u] <= 3) b.insert(big.vertices[u]);
      }
      EXPECT_EQ(a, b);
    }
    EXPECT_EQ(count, small.size());
  }
}

TEST(Schreier, TrivialStabilizerMatchesCayley) {
  for (int n = 3; n <= 4; ++n) {
    const auto cayley = ball_of(symmetric_group_spec(n), 10);
    const auto schreier = ball_of(points_schreier_spec(n, n), 10);
    ASSERT_EQ(cayley.size(), schreier.size());
    // A permutation g corresponds to the coset image of the base tuple (0..n-1),
    // which is g itself as an image list.
    for (VertexId v = 0; v < cayley.size(); ++v) {
      const auto w = schreier.find(cayley.vertices[v]);
      ASSERT_TRUE(w.has_value());
      EXPECT_EQ(schreier.dist[*w], cayley.dist[v]);
      std::set<Vertex> a, b;
      for (auto u : cayley.adjacency[v]) a.insert(cayley.vertices[u]);
      for (auto u : schreier.adjacency[*w]) b.insert(schreier.vertices[u]);
      EXPECT_EQ(a, b);
    }
  }
}

TEST(Schreier, NaturalActionIsComplete) {
  const auto ball = ball_of(points_schreier_spec(4), 3);
  EXPECT_TRUE(ball.complete);
  EXPECT_EQ(ball.size(), 4u);
  EXPECT_EQ(ball.degree, 3);
}

TEST(FiniteGroup, TableMatchesGroupLaw) {
  const Space space(dihedral_spec(5));
  const auto g = FiniteGroup::enumerate(space);
  ASSERT_EQ(g.order(), 10u);
  for (FiniteGroup::Index a = 0; a < g.order(); ++a) {
    EXPECT_EQ(g.multiply(a, g.inverse(a)), g.identity());
    for (FiniteGroup::Index b = 0; b < g.order(); ++b) {
      EXPECT_EQ(g.element(g.multiply(a, b)),
                space.group().multiply(g.element(a), g.element(b)));
    }
  }
  EXPECT_THROW(FiniteGroup::enumerate(Space(lattice_spec(1))), PreconditionError);
}

TEST(Catalogue, NamedLookup) {
  EXPECT_EQ(catalogue_instance("C12").spec.size, 12);
  EXPECT_EQ(catalogue_instance("S4-points").spec.family, Family::Schreier);
  EXPECT_EQ(catalogue_instance("Z2").spec.size, 2);
  EXPECT_THROW(catalogue_instance("nope"), SpecError);
}

}  // namespace
}  // namespace isocert
