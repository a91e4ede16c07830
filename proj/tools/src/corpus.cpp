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

#include "isocert/cli/corpus.hpp"

#include <algorithm>

#include "isocert/calculus.hpp"
#include "isocert/catalogue.hpp"
#include "isocert/errors.hpp"
#include "isocert/parallel.hpp"
#include "isocert/random.hpp"
#include "isocert/uncertainty.hpp"

namespace isocert::cli {
namespace {

constexpr std::size_t kMaxSupport = 10;

std::vector<ExactField> corpus_fields(const ExploredBall& ball, const Weight& w, bool zero_sum,
                                      std::size_t count, std::uint64_t stream,
                                      std::uint64_t seed) {
  std::vector<VertexId> pool;
  for (auto v : ball.interior_vertices()) {
    if (w.is_exact(v)) pool.push_back(v);
  }
  std::vector<ExactField> out;
  out.reserve(count);
  for (std::size_t i = 0; out.size() < count; ++i) {
    const auto s = derive_seed(seed, stream, i);
    RandomFieldOptions o;
    o.pool = pool;
    o.support_size = 1 + s % std::min(pool.size(), kMaxSupport);
    o.seed = s;
    o.zero_sum = zero_sum;
    auto f = random_exact_field(ball, o);
    if (!f.is_zero()) out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

std::vector<VertexId> default_two_points(const ExploredBall& ball) {
  if (!ball.complete) return {0, ball.adjacency[0].front()};
  const int far = ball.max_distance();
  for (VertexId v = 0; v < ball.size(); ++v) {
    if (ball.dist[v] == far) return {0, v};
  }
  return {0};
}

std::vector<CorpusRow> run_corpus(const CorpusOptions& options) {
  std::vector<Instance> instances;
  if (options.instances.empty()) {
    instances = standard_catalogue();
  } else {
    for (const auto& name : options.instances) instances.push_back(catalogue_instance(name));
  }
  for (const auto& name : options.weights) {
    if (name != "canonical" && name != "two-point") {
      throw PreconditionError("corpus weight must be canonical or two-point, got '" + name + "'");
    }
  }

  std::vector<CorpusRow> rows;
  for (std::size_t j = 0; j < instances.size(); ++j) {
    const auto& inst = instances[j];
    const auto ball = build_ball(Space(inst.spec), inst.horizon);
    const auto table = growth_table(ball);
    const bool compact = inst.regime == Regime::Compact;
    const int rmax = compact ? *table.diameter + 1 : inst.horizon;

    for (std::size_t wi = 0; wi < options.weights.size(); ++wi) {
      const auto& wname = options.weights[wi];
      const auto w = wname == "canonical"
                         ? make_weight(ball, CanonicalWeight{0})
                         : make_weight(ball, MultipointWeight{2, default_two_points(ball)});
      const auto admissibility = weight_admissibility(ball, w, table);

      std::vector<ExactField> fields;
      std::vector<RealField> real;
      if (admissibility.ok()) {
        fields = corpus_fields(ball, w, compact, options.fields, j * 16 + wi, options.seed);
        for (const auto& f : fields) real.push_back(to_real(f));
      }

      for (double p : options.ps) {
        for (double alpha : options.alphas) {
          CorpusRow row;
          row.instance = inst.name;
          row.regime = inst.regime;
          row.weight = wname;
          row.p = p;
          row.alpha = alpha;
          const UncertaintyParams params{p, alpha, inst.regime};
          const auto trace = certified_constant(params);
          row.constant = trace.value;
          if (!admissibility.ok()) {
            const auto& v = admissibility.violations.front();
            row.admissible = false;
            row.note = "weight not admissible: |{w <= " + std::to_string(v.r) +
                       "}| = " + std::to_string(v.count) + " > Gamma = " +
                       std::to_string(v.gamma);
            rows.push_back(std::move(row));
            continue;
          }
          struct Slot {
            double ratio = 0.0;
            std::size_t links = 0;
            std::size_t link_failures = 0;
            double link_ratio = 0.0;
          };
          std::vector<Slot> slots(fields.size());
          parallel_for(fields.size(), options.workers, [&](std::size_t i) {
            auto& s = slots[i];
            s.ratio = hpw_ratio(ball, fields[i], w, table, params);
            if (!options.links) return;
            for (int r = 1; r <= rmax; ++r) {
              const auto link = additive_link_check(ball, real[i], w, trace, r);
              ++s.links;
              s.link_failures += !link.pass;
              if (link.bound > 0) s.link_ratio = std::max(s.link_ratio, link.lhs / link.bound);
            }
          });
          row.fields = fields.size();
          for (std::size_t i = 0; i < slots.size(); ++i) {
            if (slots[i].ratio > row.max_ratio) {
              row.max_ratio = slots[i].ratio;
              row.worst_field = i;
            }
            row.ratio_failures += slots[i].ratio > trace.value;
            row.links_checked += slots[i].links;
            row.link_failures += slots[i].link_failures;
            row.max_link_ratio = std::max(row.max_link_ratio, slots[i].link_ratio);
          }
          rows.push_back(std::move(row));
        }
      }
    }
  }
  return rows;
}

}  // namespace isocert::cli
