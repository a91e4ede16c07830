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

#include "isocert/random.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "isocert/errors.hpp"

namespace isocert {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t substream) {
  std::uint64_t s = master;
  std::uint64_t h = splitmix64(s);
  s = h ^ (stream * 0xd1b54a32d192ed03ULL);
  h = splitmix64(s);
  s = h ^ (substream * 0x8cb92ba72f3d8dd7ULL);
  return splitmix64(s);
}

namespace {
constexpr std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
}  // namespace

Rng::Rng(std::uint64_t seed) {
  std::uint64_t s = seed;
  for (auto& word : s_) word = splitmix64(s);
}

Rng::result_type Rng::operator()() {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

std::uint64_t Rng::below(std::uint64_t n) {
  // Rejection sampling on the top of the range keeps the draw unbiased.
  const std::uint64_t limit = max() - max() % n;
  std::uint64_t x;
  do {
    x = (*this)();
  } while (x >= limit);
  return x % n;
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(below(span));
}

double Rng::uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

double Rng::normal() {
  if (spare_) {
    const double v = *spare_;
    spare_.reset();
    return v;
  }
  double u1;
  do {
    u1 = uniform();
  } while (u1 <= 0.0);
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  return radius * std::cos(angle);
}

namespace {

std::vector<VertexId> random_support(const ExploredBall& ball, const RandomFieldOptions& o,
                                     Rng& rng) {
  auto pool = o.pool.empty() ? ball.interior_vertices() : o.pool;
  for (auto v : o.pool) {
    if (v >= ball.size() || !ball.is_interior(v)) {
      throw PreconditionError("support pool contains a non-interior vertex");
    }
  }
  if (o.support_size > pool.size()) {
    throw PreconditionError("support size " + std::to_string(o.support_size) + " exceeds the " +
                            std::to_string(pool.size()) + " candidate vertices");
  }
  if (o.zero_sum && !ball.complete) {
    throw PreconditionError("zero-sum projection needs a complete graph");
  }
  // Partial Fisher-Yates.
  for (std::size_t i = 0; i < o.support_size; ++i) {
    const auto j = i + rng.below(pool.size() - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(o.support_size);
  return pool;
}

}  // namespace

ExactField random_exact_field(const ExploredBall& ball, const RandomFieldOptions& o) {
  if (o.lo > o.hi) throw PreconditionError("value range is empty");
  Rng rng(o.seed);
  const auto support = random_support(ball, o, rng);
  ExactField f(ball.size());
  for (auto v : support) f[v] = Rational(rng.between(o.lo, o.hi));
  if (o.zero_sum) {
    Rational mean = 0;
    for (const auto& x : f.values()) mean += x;
    mean /= static_cast<long long>(f.size());
    for (VertexId v = 0; v < f.size(); ++v) f[v] -= mean;
  }
  return f;
}

RealField random_real_field(const ExploredBall& ball, const RandomFieldOptions& o) {
  Rng rng(o.seed);
  const auto support = random_support(ball, o, rng);
  RealField f(ball.size());
  for (auto v : support) f[v] = rng.normal();
  if (o.zero_sum) {
    double mean = 0.0;
    for (double x : f.values()) mean += x;
    mean /= static_cast<double>(f.size());
    for (VertexId v = 0; v < f.size(); ++v) f[v] -= mean;
  }
  return f;
}

ScalarField random_field(const ExploredBall& ball, const RandomFieldOptions& options) {
  if (options.mode == FieldMode::Exact) return random_exact_field(ball, options);
  return random_real_field(ball, options);
}

}  // namespace isocert
