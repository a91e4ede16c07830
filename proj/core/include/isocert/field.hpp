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
#include <limits>
#include <variant>
#include <vector>

#include "isocert/ball.hpp"
#include "isocert/rational.hpp"

namespace isocert {

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr double epsilon = 0.0;
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static constexpr double epsilon = 1e-12;
};

/// Finitely supported vertex data on an explored ball, stored densely.
/// Rational fields are the exact mode, double fields the floating mode.
template <class T>
class Field {
 public:
  using value_type = T;

  Field() = default;
  explicit Field(std::size_t n) : values_(n, T(0)) {}
  explicit Field(std::vector<T> values) : values_(std::move(values)) {}

  std::size_t size() const { return values_.size(); }
  T& operator[](VertexId v) { return values_[v]; }
  const T& operator[](VertexId v) const { return values_[v]; }
  const std::vector<T>& values() const { return values_; }

  std::vector<VertexId> support() const {
    std::vector<VertexId> s;
    for (VertexId v = 0; v < values_.size(); ++v) {
      if (values_[v] != 0) s.push_back(v);
    }
    return s;
  }
  bool is_zero() const {
    for (const auto& x : values_) {
      if (x != 0) return false;
    }
    return true;
  }

  friend bool operator==(const Field&, const Field&) = default;

 private:
  std::vector<T> values_;
};

using ExactField = Field<Rational>;
using RealField = Field<double>;
using ScalarField = std::variant<ExactField, RealField>;

RealField to_real(const ExactField& f);

/// Vertex weight w >= 1 on an explored ball.
///
/// Values computed from distances inside a finite window may overestimate the
/// true graph distance far from the basepoint; `exact_limit` is the largest
/// value below which every value is certified (and every vertex of the full
/// graph with weight <= exact_limit lies in the ball).
struct Weight {
  std::vector<double> values;
  double exact_limit = std::numeric_limits<double>::infinity();

  double operator[](VertexId v) const { return values[v]; }
  bool is_exact(VertexId v) const { return values[v] <= exact_limit; }
};

}  // namespace isocert
