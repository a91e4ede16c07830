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

#include "isocert/uncertainty.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "isocert/errors.hpp"
#include "isocert/parallel.hpp"
#include "isocert/random.hpp"

namespace isocert {

namespace {

double as_double(const Rational& x) { return to_double(x); }
double as_double(double x) { return x; }

template <class T>
RealField real(const Field<T>& f) {
  RealField out(f.size());
  for (VertexId v = 0; v < f.size(); ++v) out[v] = as_double(f[v]);
  return out;
}

RealField weighted(const RealField& f, const Weight& w, double alpha) {
  RealField out(f.size());
  for (VertexId v = 0; v < f.size(); ++v) out[v] = std::pow(w[v], alpha) * f[v];
  return out;
}

template <class T>
void require_zero_sum(const Field<T>& f) {
  T sum(0);
  for (const auto& x : f.values()) sum += x;
  if constexpr (ScalarTraits<T>::exact) {
    if (sum != 0) throw PreconditionError("compact setting needs sum f = 0");
  } else {
    double mass = 0.0;
    for (double x : f.values()) mass += std::fabs(x);
    if (std::fabs(sum) > 1e-12 * std::max(1.0, mass)) {
      throw PreconditionError("compact setting needs sum f = 0 (|sum| = " +
                              std::to_string(std::fabs(sum)) + ")");
    }
  }
}

double leibniz_factor(double p) { return p == 1.0 ? 1.0 : 2.0 * p; }

}  // namespace

void UncertaintyParams::validate() const {
  if (!(p >= 1.0) || std::isinf(p)) throw PreconditionError("p must be a finite real >= 1");
  if (!(alpha > 0.0) || std::isinf(alpha)) throw PreconditionError("alpha must be a finite real > 0");
}

BalanceResult balance_constant(double alpha, double a, double b) {
  if (!(alpha > 0.0) || !(a > 0.0) || !(b > 0.0) || std::isinf(alpha) || std::isinf(a) ||
      std::isinf(b)) {
    throw PreconditionError("balance_constant needs finite alpha, a, b > 0");
  }
  const double theta = alpha / (alpha + 1.0);
  BalanceResult out;
  out.constant = std::pow(alpha, 1.0 / (alpha + 1.0)) + std::pow(alpha, -theta);
  out.argmin = std::pow(alpha * b / a, 1.0 / (alpha + 1.0));
  out.minimum = out.constant * std::pow(a, theta) * std::pow(b, 1.0 - theta);
  return out;
}

ConstantTrace certified_constant(const UncertaintyParams& params, const ChainFactors& factors) {
  params.validate();
  ConstantTrace t;
  t.params = params;
  const double p = params.p;
  t.leibniz = leibniz_factor(p);
  t.theta = params.theta();
  t.balance = balance_constant(params.alpha, 1.0, 1.0).constant;
  // ceil(r) <= 2r for r >= 1; for r < 1 the weight term alone dominates.
  t.ceiling = factors.ceiling;

  if (params.setting == Regime::Infinite) {
    t.weak_isoperimetric = factors.weak_isoperimetric_infinite;
    t.decoupled = factors.decoupling_infinite * t.weak_isoperimetric;
    t.faris = t.decoupled;
    t.additive_gradient = t.faris * t.leibniz / p;
    t.additive_weight = 1.0;
  } else {
    t.weak_isoperimetric = factors.weak_isoperimetric_compact;
    // Case split on rho <= 4e versus large sets.
    t.decoupled = factors.decoupling_compact * t.weak_isoperimetric;
    t.faris = t.decoupled;
    // (d0 + 1) <= 2 d0 and ||f||_1 <= 2 sum |f - m0| for zero-mean f.
    t.poincare = p == 1.0 ? 4.0 * t.faris : 2.0 * t.faris * (t.leibniz + 2.0) / p;
    t.three_term = t.leibniz * t.faris;
    // r <= d0 / 8: reabsorb the half term; larger r: Poincare with d0 < 8r.
    t.additive_gradient = std::max(2.0 * t.three_term / p, 8.0 * t.poincare);
    t.additive_weight = 2.0;
  }
  t.value = t.balance * std::pow(t.ceiling * t.additive_gradient, t.theta) *
            std::pow(t.additive_weight, 1.0 - t.theta);
  return t;
}

template <class T>
double hpw_ratio(const ExploredBall& ball, const Field<T>& f, const Weight& w,
                 const GrowthTable& table, const UncertaintyParams& params) {
  params.validate();
  require_interior_support(ball, f);
  if (f.is_zero()) throw PreconditionError("hpw_ratio is undefined for f = 0");
  if (params.setting == Regime::Compact) {
    if (!ball.complete) throw PreconditionError("compact setting needs a complete graph");
    require_zero_sum(f);
  } else if (ball.complete) {
    throw PreconditionError("the infinite setting does not apply to a finite graph");
  }
  const auto report = weight_admissibility(ball, w, table);
  if (!report.ok()) {
    const auto& v = report.violations.front();
    throw PreconditionError("weight is not admissible at r = " + std::to_string(v.r) + " (" +
                            std::to_string(v.count) + " > " + std::to_string(v.gamma) + ")");
  }
  for (auto v : f.support()) {
    if (!w.is_exact(v)) {
      throw PreconditionError("weight value at vertex " + std::to_string(v) +
                              " is not certified by the explored window");
    }
  }
  const Exponent p(params.p);
  const double theta = params.theta();
  const auto fr = real(f);
  const double num = lp_norm(fr, p);
  const double grad = lp_norm(real(gradient_modulus(ball, f)), p);
  const double wf = lp_norm(weighted(fr, w, params.alpha), p);
  return num / (std::pow(params.p, theta) * std::pow(grad, theta) * std::pow(wf, 1.0 - theta));
}

double hpw_ratio(const ExploredBall& ball, const ScalarField& f, const Weight& w,
                 const GrowthTable& table, const UncertaintyParams& params) {
  return std::visit([&](const auto& g) { return hpw_ratio(ball, g, w, table, params); }, f);
}

namespace {
constexpr double kRelTol = 1e-12;
}

BoundCheck<double> additive_link_check(const ExploredBall& ball, const RealField& f,
                                       const Weight& w, const ConstantTrace& trace, int r) {
  if (r < 1) throw PreconditionError("additive link needs an integer r >= 1");
  require_interior_support(ball, f);
  const Exponent p(trace.params.p);
  BoundCheck<double> out;
  out.lhs = lp_norm(f, p);
  out.bound = trace.additive_gradient * trace.params.p * r *
                  lp_norm(gradient_modulus(ball, f), p) +
              trace.additive_weight * std::pow(static_cast<double>(r), -trace.params.alpha) *
                  lp_norm(weighted(f, w, trace.params.alpha), p);
  out.pass = out.lhs <= out.bound * (1.0 + kRelTol);
  return out;
}

BoundCheck<double> three_term_check(const ExploredBall& ball, const RealField& f,
                                    const Weight& w, const GrowthTable& table,
                                    const ConstantTrace& trace, int r) {
  if (trace.params.setting != Regime::Compact) {
    throw PreconditionError("the three-term bound is a compact-setting statement");
  }
  if (!ball.complete) throw PreconditionError("three-term bound needs a complete graph");
  if (r < 1 || 8 * r > *table.diameter) {
    throw PreconditionError("three-term bound needs 1 <= r <= floor(d0 / 8)");
  }
  const double p = trace.params.p;
  const Exponent e(p);
  const double norm = lp_norm(f, e);
  const double tail = std::pow(norm, p - 1.0);
  BoundCheck<double> out;
  out.lhs = std::pow(norm, p);
  out.bound = trace.three_term * r * lp_norm(gradient_modulus(ball, f), e) * tail + out.lhs / 2.0 +
              std::pow(static_cast<double>(r), -trace.params.alpha) *
                  lp_norm(weighted(f, w, trace.params.alpha), e) * tail;
  out.pass = out.lhs <= out.bound * (1.0 + kRelTol);
  return out;
}

template <class T>
BoundCheck<T> faris_check(const ExploredBall& ball, const Field<T>& f,
                          std::span<const VertexId> e, int r, const T& constant,
                          const GrowthTable& table, Regime setting) {
  require_interior_support(ball, f);
  std::vector<char> in_e(ball.size(), 0);
  std::uint64_t size = 0;
  for (auto v : e) {
    if (v >= ball.size()) throw PreconditionError("E has a vertex outside the ball");
    if (!in_e[v]) ++size;
    in_e[v] = 1;
  }
  if (r < 1) throw PreconditionError("radius must be >= 1");
  if (size > table.at(r)) {
    throw PreconditionError("|E| = " + std::to_string(size) + " exceeds Gamma(" +
                            std::to_string(r) + ") = " + std::to_string(table.at(r)));
  }
  T shift(0);
  if (setting == Regime::Compact) shift = median(ball, f);
  BoundCheck<T> out;
  out.lhs = T(0);
  for (VertexId v = 0; v < ball.size(); ++v) {
    if (!in_e[v]) continue;
    const T d = f[v] - shift;
    out.lhs += d < 0 ? T(-d) : d;
  }
  const auto gradient = gradient_modulus(ball, f);
  T grad(0);
  for (const auto& x : gradient.values()) grad += x;
  out.bound = constant * T(r) * grad;
  if constexpr (ScalarTraits<T>::exact) {
    out.pass = out.lhs <= out.bound;
  } else {
    out.pass = out.lhs <= out.bound * (1.0 + kRelTol);
  }
  return out;
}

BoundCheck<Rational> markov_check(const ExploredBall& ball, const ExactField& f) {
  const Rational m0 = median(ball, f);
  BoundCheck<Rational> out;
  out.lhs = abs(m0);
  out.bound = 2 * l1_norm(f) / static_cast<long long>(f.size());
  out.pass = out.lhs <= out.bound;
  return out;
}

template <class T>
double poincare_ratio(const ExploredBall& ball, const Field<T>& f, const GrowthTable& table,
                      double p) {
  if (!ball.complete) throw PreconditionError("Poincare ratio needs a complete graph");
  require_zero_sum(f);
  const Exponent e(p);
  const auto fr = real(f);
  const double num = lp_norm(fr, e);
  if (num == 0.0) return 0.0;
  const double grad = lp_norm(real(gradient_modulus(ball, f)), e);
  return num / (p * static_cast<double>(*table.diameter) * grad);
}

double dm_ratio(const ExploredBall& ball, const RealField& f, const Weight& w) {
  double s2 = 0.0, w2 = 0.0, g2 = 0.0;
  for (VertexId v = 0; v < f.size(); ++v) {
    s2 += f[v] * f[v];
    w2 += w[v] * w[v] * f[v] * f[v];
    double g = 0.0;
    for (auto n : ball.adjacency[v]) g += std::fabs(f[v] - f[n]);
    g2 += g * g;
  }
  if (g2 == 0.0 || w2 == 0.0) return 0.0;
  return s2 / (std::sqrt(g2) * std::sqrt(w2));
}

namespace {

double sign(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

// Ascent direction of log R; ties contribute 0.
void log_ratio_gradient(const ExploredBall& ball, const RealField& f, const Weight& w,
                        std::vector<double>& out) {
  const std::size_t n = f.size();
  std::vector<double> g(n, 0.0);
  double s2 = 0.0, w2 = 0.0, g2 = 0.0;
  for (VertexId v = 0; v < n; ++v) {
    s2 += f[v] * f[v];
    w2 += w[v] * w[v] * f[v] * f[v];
    for (auto u : ball.adjacency[v]) g[v] += std::fabs(f[v] - f[u]);
    g2 += g[v] * g[v];
  }
  out.assign(n, 0.0);
  for (VertexId v = 0; v < n; ++v) {
    double cross = 0.0;
    for (auto u : ball.adjacency[v]) cross += sign(f[v] - f[u]) * (g[v] + g[u]);
    out[v] = 2.0 * f[v] / s2 - cross / g2 - w[v] * w[v] * f[v] / w2;
  }
}

void project(RealField& f, const std::vector<char>& variable, bool zero_mean) {
  for (VertexId v = 0; v < f.size(); ++v) {
    if (!variable[v]) f[v] = 0.0;
  }
  if (!zero_mean) return;
  double mean = 0.0;
  for (double x : f.values()) mean += x;
  mean /= static_cast<double>(f.size());
  for (VertexId v = 0; v < f.size(); ++v) f[v] -= mean;
}

void normalize(RealField& f) {
  double s = 0.0;
  for (double x : f.values()) s += x * x;
  s = std::sqrt(s);
  if (s == 0.0) return;
  for (VertexId v = 0; v < f.size(); ++v) f[v] /= s;
}

DmEstimate ascend(const ExploredBall& ball, const Weight& w, const std::vector<char>& variable,
                  bool zero_mean, RealField f, unsigned steps) {
  project(f, variable, zero_mean);
  normalize(f);
  DmEstimate est;
  est.ratio = dm_ratio(ball, f, w);
  est.witness = f;
  est.history.push_back(est.ratio);

  double eta = 0.5;
  std::vector<double> grad;
  for (unsigned step = 0; step < steps; ++step) {
    log_ratio_gradient(ball, est.witness, w, grad);
    RealField dir(std::move(grad));
    project(dir, variable, zero_mean);
    double norm = 0.0;
    for (double x : dir.values()) norm += x * x;
    norm = std::sqrt(norm);
    if (!(norm > 0.0)) break;

    bool accepted = false;
    for (int tries = 0; tries < 40 && !accepted; ++tries) {
      RealField cand = est.witness;
      for (VertexId v = 0; v < cand.size(); ++v) cand[v] += eta * dir[v] / norm;
      project(cand, variable, zero_mean);
      normalize(cand);
      const double value = dm_ratio(ball, cand, w);
      if (value > est.ratio) {
        est.ratio = value;
        est.witness = std::move(cand);
        est.history.push_back(value);
        eta *= 1.5;
        accepted = true;
      } else {
        eta *= 0.5;
      }
    }
    if (!accepted) break;
    grad = std::vector<double>();
  }
  return est;
}

}  // namespace

DmEstimate dm_estimate(const ExploredBall& ball, const Weight& w, Regime setting,
                       const DmOptions& options) {
  if (w.values.size() != ball.size()) throw PreconditionError("weight/ball size mismatch");
  const bool compact = setting == Regime::Compact;
  if (compact && !ball.complete) throw PreconditionError("compact setting needs a complete graph");
  if (!compact && ball.complete) {
    throw PreconditionError("the infinite setting does not apply to a finite graph");
  }
  std::vector<char> variable(ball.size(), 0);
  std::size_t dims = 0;
  for (VertexId v = 0; v < ball.size(); ++v) {
    variable[v] = compact || ball.is_interior(v);
    dims += variable[v];
  }
  if (compact ? dims < 2 : dims < 1) throw PreconditionError("the search space is zero-dimensional");

  const unsigned restarts = std::max(1u, options.restarts);
  std::vector<DmEstimate> results(restarts);
  parallel_for(restarts, options.workers, [&](std::size_t i) {
    RealField start(ball.size());
    if (i == 0) {
      start[0] = 1.0;
    } else {
      Rng rng(derive_seed(options.seed, i));
      for (VertexId v = 0; v < ball.size(); ++v) {
        if (variable[v]) start[v] = rng.normal();
      }
    }
    results[i] = ascend(ball, w, variable, compact, std::move(start), options.steps);
    results[i].restart = static_cast<unsigned>(i);
  });
  std::size_t best = 0;
  for (std::size_t i = 1; i < results.size(); ++i) {
    if (results[i].ratio > results[best].ratio) best = i;
  }
  auto out = std::move(results[best]);
  out.ratio = dm_ratio(ball, out.witness, w);
  return out;
}

ConstantsReport constants_relation_report(const ExploredBall& ball, const GrowthTable& table,
                                          Regime convention, const ConstantsOptions& options) {
  ConstantsReport rep;
  rep.convention = convention;
  const auto candidates = profile_candidates(ball, convention);
  std::size_t kmax = std::min(options.kmax, candidates.size());
  if (convention == Regime::Compact) kmax = std::min(kmax, ball.size() / 2);
  if (kmax == 0) throw PreconditionError("no admissible subset sizes");

  IsoProfile profile;
  if (subset_count(candidates.size(), kmax) <= options.work_cap) {
    profile = exact_profile(ball, kmax, convention, {options.work_cap, options.dm.workers});
  } else {
    std::vector<std::size_t> ks(kmax);
    std::iota(ks.begin(), ks.end(), std::size_t{1});
    AnnealingOptions a;
    a.budget = options.anneal_budget;
    a.seed = options.dm.seed;
    a.workers = options.dm.workers;
    profile = heuristic_profile(ball, ks, convention, a);
  }
  rep.c = isoperimetric_constant(profile, table, convention);
  const auto w = make_weight(ball, CanonicalWeight{0});
  rep.d = dm_estimate(ball, w, convention, options.dm);
  const double c = to_double(rep.c.value);
  rep.ratio = rep.d.ratio / (c * c);
  return rep;
}

template double hpw_ratio(const ExploredBall&, const Field<Rational>&, const Weight&,
                          const GrowthTable&, const UncertaintyParams&);
template double hpw_ratio(const ExploredBall&, const Field<double>&, const Weight&,
                          const GrowthTable&, const UncertaintyParams&);
template BoundCheck<Rational> faris_check(const ExploredBall&, const Field<Rational>&,
                                          std::span<const VertexId>, int, const Rational&,
                                          const GrowthTable&, Regime);
template BoundCheck<double> faris_check(const ExploredBall&, const Field<double>&,
                                        std::span<const VertexId>, int, const double&,
                                        const GrowthTable&, Regime);
template double poincare_ratio(const ExploredBall&, const Field<Rational>&, const GrowthTable&,
                               double);
template double poincare_ratio(const ExploredBall&, const Field<double>&, const GrowthTable&,
                               double);

}  // namespace isocert
