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
#include <optional>
#include <span>
#include <vector>

#include "isocert/ball.hpp"
#include "isocert/calculus.hpp"
#include "isocert/field.hpp"
#include "isocert/growth.hpp"
#include "isocert/isoperimetry.hpp"
#include "isocert/rational.hpp"

namespace isocert {

struct UncertaintyParams {
  double p = 1.0;      // finite, >= 1
  double alpha = 1.0;  // > 0
  Regime setting = Regime::Infinite;

  /// Throws PreconditionError for p < 1, p infinite or alpha <= 0.
  void validate() const;
  /// alpha / (alpha + 1), the exponent on the gradient term.
  double theta() const { return alpha / (alpha + 1.0); }
};

struct BalanceResult {
  double minimum = 0.0;   // min_{r > 0} (a r + b r^-alpha)
  double argmin = 0.0;    // (alpha b / a)^(1 / (alpha + 1))
  double constant = 0.0;  // alpha^(1/(alpha+1)) + alpha^(-alpha/(alpha+1))
};

BalanceResult balance_constant(double alpha, double a, double b);

/// Every factor of the certified constant, in composition order.
struct ConstantTrace {
  UncertaintyParams params;
  double weak_isoperimetric = 0.0;  // |E| <= C r ||dE|| (min{|E|,|E^c|} form when compact)
  double decoupled = 0.0;           // |A n E| <= C r_E ||dA||
  double faris = 0.0;               // sum_E |f| <= C r ||grad f||_1 (|f - m0| when compact)
  double leibniz = 0.0;             // ||grad |f|^p||_1 <= L ||grad f||_p ||f||_p^(p-1)
  double poincare = 0.0;            // compact: ||f||_p <= C p d0 ||grad f||_p; 0 otherwise
  double three_term = 0.0;          // compact: C p in the r <= d0/8 three-term bound; 0 otherwise
  double additive_gradient = 0.0;   // G in ||f||_p <= G p r ||grad f||_p + W r^-a ||w^a f||_p
  double additive_weight = 0.0;     // W
  double ceiling = 0.0;             // integer radii to real radii
  double balance = 0.0;             // balance_constant(alpha).constant
  double theta = 0.0;
  double value = 0.0;
};

/// Base factors the chain is composed from; the defaults are the proven ones.
struct ChainFactors {
  double weak_isoperimetric_infinite = 2.0;
  double weak_isoperimetric_compact = 1.0;
  double decoupling_infinite = 2.0;  // decoupled = decoupling * weak_isoperimetric
  double decoupling_compact = 8.0;
  double ceiling = 2.0;
};

/// Admissible constant C(p, alpha, setting) for
/// ||f||_p <= C p^theta ||grad f||_p^theta ||w^alpha f||_p^(1-theta),
/// composed from the factors in the trace. Graph-independent.
ConstantTrace certified_constant(const UncertaintyParams& params,
                                 const ChainFactors& factors = {});

/// ||f||_p / (p^theta ||grad f||_p^theta ||w^alpha f||_p^(1-theta)).
/// Checks interior support, weight admissibility and exactness on the
/// support, and the zero-sum condition in the compact setting.
template <class T>
double hpw_ratio(const ExploredBall& ball, const Field<T>& f, const Weight& w,
                 const GrowthTable& table, const UncertaintyParams& params);
double hpw_ratio(const ExploredBall& ball, const ScalarField& f, const Weight& w,
                 const GrowthTable& table, const UncertaintyParams& params);

/// ||f||_p <= G p r ||grad f||_p + W r^-alpha ||w^alpha f||_p at integer r.
BoundCheck<double> additive_link_check(const ExploredBall& ball, const RealField& f,
                                       const Weight& w, const ConstantTrace& trace, int r);

/// Compact: ||f||_p^p <= Cp r ||grad f||_p ||f||_p^(p-1) + ||f||_p^p / 2
///   + r^-alpha ||w^alpha f||_p ||f||_p^(p-1), for r <= floor(d0 / 8).
BoundCheck<double> three_term_check(const ExploredBall& ball, const RealField& f,
                                    const Weight& w, const GrowthTable& table,
                                    const ConstantTrace& trace, int r);

/// Infinite: sum_E |f| <= C r ||grad f||_1. Compact: sum_E |f - m0| <= C r ||grad f||_1.
/// Throws PreconditionError when |E| > Gamma(r).
template <class T>
BoundCheck<T> faris_check(const ExploredBall& ball, const Field<T>& f,
                          std::span<const VertexId> e, int r, const T& constant,
                          const GrowthTable& table, Regime setting);

/// |m0| <= 2 (1/|V|) sum |f|, exactly.
BoundCheck<Rational> markov_check(const ExploredBall& ball, const ExactField& f);

/// ||f||_p / (p d0 ||grad f||_p) on a complete graph; requires sum f = 0.
/// A zero field gives 0.
template <class T>
double poincare_ratio(const ExploredBall& ball, const Field<T>& f, const GrowthTable& table,
                      double p);

/// ||f||_2^2 / (||grad f||_2 ||w f||_2), evaluated from scratch.
double dm_ratio(const ExploredBall& ball, const RealField& f, const Weight& w);

struct DmOptions {
  unsigned restarts = 8;
  unsigned steps = 200;
  std::uint64_t seed = 0;
  unsigned workers = 1;
};

struct DmEstimate {
  double ratio = 0.0;  // lower bound on D_M
  RealField witness;
  unsigned restart = 0;
  std::vector<double> history;  // accepted iterates of the winning restart
};

/// Multi-start subgradient ascent on log R(f). Restart 0 starts from the
/// basepoint delta, the others from seeded normal fields. Compact runs keep
/// every iterate at zero mean.
DmEstimate dm_estimate(const ExploredBall& ball, const Weight& w, Regime setting,
                       const DmOptions& options = {});

struct ConstantsOptions {
  std::size_t kmax = 5;
  std::uint64_t work_cap = 100'000'000;
  std::uint64_t anneal_budget = 50'000;
  DmOptions dm;
};

struct ConstantsReport {
  Regime convention = Regime::Infinite;
  IsoConstantEstimate c;
  DmEstimate d;
  double ratio = 0.0;  // D / C^2
};

/// C_M estimate (exact profile when within the work cap, annealing otherwise),
/// D_M lower bound with the canonical weight, and D / C^2.
ConstantsReport constants_relation_report(const ExploredBall& ball, const GrowthTable& table,
                                          Regime convention, const ConstantsOptions& options = {});

}  // namespace isocert
