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

#include "isocert/calculus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "isocert/errors.hpp"

namespace isocert {

namespace {

template <class T>
T absolute(const T& x) {
  return x < 0 ? T(-x) : x;
}

double as_double(const Rational& x) { return to_double(x); }
double as_double(double x) { return x; }

}  // namespace

RealField to_real(const ExactField& f) {
  RealField out(f.size());
  for (VertexId v = 0; v < f.size(); ++v) out[v] = to_double(f[v]);
  return out;
}

Exponent::Exponent(double p) : value_(p) {
  if (!(p >= 1.0)) throw PreconditionError("l^p exponent must satisfy p >= 1");
  if (std::isinf(p)) infinite_ = true;
}

Exponent Exponent::infinity() {
  Exponent e;
  e.value_ = std::numeric_limits<double>::infinity();
  e.infinite_ = true;
  return e;
}

template <class T>
void require_interior_support(const ExploredBall& ball, const Field<T>& f) {
  if (f.size() != ball.size()) {
    throw PreconditionError("field has " + std::to_string(f.size()) + " entries, ball has " +
                            std::to_string(ball.size()));
  }
  if (ball.complete) return;
  for (VertexId v = 0; v < f.size(); ++v) {
    if (f[v] != 0 && !ball.is_interior(v)) {
      throw PreconditionError("field support touches non-interior vertex " + std::to_string(v));
    }
  }
}

template <class T>
Field<T> gradient_modulus(const ExploredBall& ball, const Field<T>& f) {
  require_interior_support(ball, f);
  Field<T> g(f.size());
  for (VertexId m = 0; m < f.size(); ++m) {
    T acc(0);
    for (auto n : ball.adjacency[m]) acc += absolute(T(f[m] - f[n]));
    g[m] = acc;
  }
  return g;
}

template <class T>
double lp_norm(const Field<T>& f, Exponent p) {
  if (p.is_infinite()) {
    double best = 0.0;
    for (const auto& x : f.values()) best = std::max(best, std::fabs(as_double(x)));
    return best;
  }
  if (p.value() == 1.0) {
    T acc(0);
    for (const auto& x : f.values()) acc += absolute(x);
    return as_double(acc);
  }
  // Scale by the max entry so large exponents do not overflow.
  const double scale = lp_norm(f, Exponent::infinity());
  if (scale == 0.0) return 0.0;
  double acc = 0.0;
  for (const auto& x : f.values()) acc += std::pow(std::fabs(as_double(x)) / scale, p.value());
  return scale * std::pow(acc, 1.0 / p.value());
}

Rational l1_norm(const ExactField& f) {
  Rational acc = 0;
  for (const auto& x : f.values()) acc += abs(x);
  return acc;
}

std::uint64_t edge_perimeter(const ExploredBall& ball, const std::vector<char>& member) {
  if (member.size() != ball.size()) throw PreconditionError("membership mask has the wrong size");
  std::uint64_t cut = 0;
  for (VertexId v = 0; v < member.size(); ++v) {
    if (!member[v]) continue;
    if (!ball.complete && !ball.is_interior(v)) {
      throw PreconditionError("subset touches non-interior vertex " + std::to_string(v));
    }
    for (auto u : ball.adjacency[v]) {
      if (!member[u]) ++cut;
    }
    // Neighbours outside the explored window cannot occur for interior vertices.
  }
  return 2 * cut;
}

std::uint64_t edge_perimeter(const ExploredBall& ball, std::span<const VertexId> subset) {
  std::vector<char> member(ball.size(), 0);
  for (auto v : subset) {
    if (v >= ball.size()) throw PreconditionError("subset vertex out of range");
    member[v] = 1;
  }
  return edge_perimeter(ball, member);
}

Rational coarea_residual(const ExploredBall& ball, const ExactField& f) {
  require_interior_support(ball, f);
  ExactField magnitude(f.size());
  for (VertexId v = 0; v < f.size(); ++v) magnitude[v] = abs(f[v]);

  std::vector<Rational> levels;
  for (const auto& x : magnitude.values()) {
    if (x > 0) levels.push_back(x);
  }
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  // On (t_{i-1}, t_i) the super-level set {|f| > s} equals {|f| >= t_i}.
  Rational integral = 0;
  Rational previous = 0;
  std::vector<char> member(f.size(), 0);
  for (const auto& t : levels) {
    for (VertexId v = 0; v < f.size(); ++v) member[v] = magnitude[v] >= t ? 1 : 0;
    integral += (t - previous) * Rational(edge_perimeter(ball, member));
    previous = t;
  }
  return integral - l1_norm(gradient_modulus(ball, magnitude));
}

Rational coarea_residual(const ExploredBall& ball, const ScalarField& f) {
  if (const auto* exact = std::get_if<ExactField>(&f)) return coarea_residual(ball, *exact);
  throw ModeError("the coarea identity is checked in exact arithmetic only");
}

template <class T>
T median(const ExploredBall& ball, const Field<T>& f) {
  if (!ball.complete) throw PreconditionError("the median needs a complete finite graph");
  if (f.size() != ball.size() || f.size() == 0) throw PreconditionError("field/ball size mismatch");
  std::vector<T> sorted = f.values();
  std::sort(sorted.begin(), sorted.end());
  // Smallest sorted[j] with j + 1 >= n / 2.
  const std::size_t n = sorted.size();
  return sorted[(n + 1) / 2 - 1];
}

template <class T>
MedianCounts median_counts(const Field<T>& f, const T& m0) {
  MedianCounts c;
  c.total = f.size();
  for (const auto& x : f.values()) {
    if (x > m0) ++c.above;
    if (x < m0) ++c.below;
  }
  return c;
}

Weight make_weight(const ExploredBall& ball, const WeightKind& kind) {
  int k = 1;
  std::vector<VertexId> points;
  if (const auto* c = std::get_if<CanonicalWeight>(&kind)) {
    points = {c->center};
  } else {
    const auto& m = std::get<MultipointWeight>(kind);
    if (m.k < 1) throw PreconditionError("multipoint weight needs k >= 1");
    if (m.points.empty()) throw PreconditionError("multipoint weight needs at least one point");
    k = m.k;
    points = m.points;
  }
  int slack = std::numeric_limits<int>::max();
  for (auto p : points) {
    if (p >= ball.size()) throw PreconditionError("weight point outside the explored ball");
    slack = std::min(slack, ball.horizon - ball.dist[p]);
  }

  // Every point's distances are computed by BFS inside the window. A value
  // d <= horizon - dist(point) is realised by a geodesic that stays inside.
  std::vector<int> best(ball.size(), std::numeric_limits<int>::max());
  for (auto p : points) {
    const VertexId src[] = {p};
    const auto d = ball_distances(ball, src);
    for (VertexId v = 0; v < ball.size(); ++v) {
      if (d[v] >= 0) best[v] = std::min(best[v], d[v]);
    }
  }

  Weight w;
  w.values.resize(ball.size());
  for (VertexId v = 0; v < ball.size(); ++v) {
    w.values[v] = static_cast<double>(k) * (static_cast<double>(best[v]) + 1.0);
  }
  w.exact_limit = ball.complete ? std::numeric_limits<double>::infinity()
                                : static_cast<double>(k) * (static_cast<double>(slack) + 1.0);
  return w;
}

AdmissibilityReport weight_admissibility(const ExploredBall& ball, const Weight& w,
                                         const GrowthTable& table) {
  if (w.values.size() != ball.size()) throw PreconditionError("weight/ball size mismatch");
  AdmissibilityReport rep;
  for (auto x : w.values) {
    if (!(x >= 1.0)) throw PreconditionError("weights must satisfy w >= 1");
  }
  rep.checked_up_to = ball.complete ? *table.diameter + 1 : ball.horizon;
  rep.certified_up_to = rep.checked_up_to;
  if (!ball.complete) {
    const double limit = std::floor(std::min(w.exact_limit, 1e9));
    rep.certified_up_to = std::min(rep.checked_up_to, static_cast<int>(limit));
  }
  rep.partial = !ball.complete || rep.certified_up_to < rep.checked_up_to;

  std::vector<double> sorted = w.values;
  std::sort(sorted.begin(), sorted.end());
  for (int r = 1; r <= rep.checked_up_to; ++r) {
    const auto count = static_cast<std::uint64_t>(
        std::upper_bound(sorted.begin(), sorted.end(), static_cast<double>(r)) - sorted.begin());
    const auto gamma = table.at(r);
    if (count > gamma) rep.violations.push_back({r, count, gamma});
    if (count != gamma) rep.equality_everywhere = false;
  }
  return rep;
}

template Field<Rational> gradient_modulus(const ExploredBall&, const Field<Rational>&);
template Field<double> gradient_modulus(const ExploredBall&, const Field<double>&);
template double lp_norm(const Field<Rational>&, Exponent);
template double lp_norm(const Field<double>&, Exponent);
template Rational median(const ExploredBall&, const Field<Rational>&);
template double median(const ExploredBall&, const Field<double>&);
template MedianCounts median_counts(const Field<Rational>&, const Rational&);
template MedianCounts median_counts(const Field<double>&, const double&);
template void require_interior_support(const ExploredBall&, const Field<Rational>&);
template void require_interior_support(const ExploredBall&, const Field<double>&);

}  // namespace isocert
