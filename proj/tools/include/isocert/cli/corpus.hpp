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
#include <string>
#include <vector>

#include "isocert/ball.hpp"
#include "isocert/growth.hpp"

namespace isocert::cli {

/// Second point of the default two-point weight: a neighbour of the basepoint
/// on infinite graphs (keeps every weight value certified through the
/// horizon), the first vertex at maximal distance on complete ones.
std::vector<VertexId> default_two_points(const ExploredBall& ball);

struct CorpusOptions {
  std::vector<std::string> instances;  // catalogue names; empty = standard catalogue
  std::vector<double> ps{1.0, 2.0, 3.0};
  std::vector<double> alphas{0.5, 1.0, 2.0};
  std::vector<std::string> weights{"canonical", "two-point"};
  std::size_t fields = 500;
  std::uint64_t seed = 0;
  bool links = true;
  unsigned workers = 1;
};

/// One (instance, weight, p, alpha) cell of the sweep.
struct CorpusRow {
  std::string instance;
  Regime regime = Regime::Infinite;
  std::string weight;
  double p = 1.0;
  double alpha = 1.0;
  bool admissible = true;  // false: the weight failed admissibility, no fields run
  std::size_t fields = 0;
  double constant = 0.0;
  double max_ratio = 0.0;
  std::size_t worst_field = 0;
  std::size_t ratio_failures = 0;
  std::size_t links_checked = 0;
  std::size_t link_failures = 0;
  double max_link_ratio = 0.0;  // max lhs / bound over the links
  std::string note;

  bool pass() const { return ratio_failures == 0 && link_failures == 0; }
};

/// Seeded hpw sweep. Fields are random integer fields supported on interior
/// vertices with certified weight values (zero-sum when compact); field i of
/// (instance j, weight w) depends only on (seed, j, w, i).
std::vector<CorpusRow> run_corpus(const CorpusOptions& options);

}  // namespace isocert::cli
