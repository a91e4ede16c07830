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

#include "isocert/cli/field_io.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "isocert/errors.hpp"

namespace isocert::cli {
namespace {

std::size_t index_of(const Json& entry, std::size_t size, std::size_t i) {
  if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer()) {
    throw SpecError("entry " + std::to_string(i) + ": expected [vertex-index, value]");
  }
  const auto v = entry[0].get<long long>();
  if (v < 0 || static_cast<std::size_t>(v) >= size) {
    throw SpecError("entry " + std::to_string(i) + ": vertex index " + std::to_string(v) +
                    " outside the ball (" + std::to_string(size) + " vertices)");
  }
  return static_cast<std::size_t>(v);
}

}  // namespace

ScalarField field_from_json(const Json& pairs, std::size_t size) {
  if (!pairs.is_array()) throw SpecError("field: expected an array of pairs");
  bool floating = false;
  for (const auto& e : pairs) floating |= e.is_array() && e.size() == 2 && e[1].is_number_float();
  std::vector<char> seen(size, 0);
  ExactField exact(size);
  RealField real(size);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto v = index_of(pairs[i], size, i);
    if (seen[v]) throw SpecError("field: vertex " + std::to_string(v) + " listed twice");
    seen[v] = 1;
    const auto& x = pairs[i][1];
    Rational q;
    if (x.is_string()) {
      q = parse_rational(x.get<std::string>());
    } else if (x.is_number_integer()) {
      q = Rational(x.get<long long>());
    } else if (x.is_number_float()) {
      const double d = x.get<double>();
      if (!std::isfinite(d)) throw SpecError("field: non-finite value");
      real[v] = d;
      continue;
    } else {
      throw SpecError("entry " + std::to_string(i) + ": value must be a number or \"p/q\"");
    }
    if (floating) {
      real[v] = to_double(q);
    } else {
      exact[v] = q;
    }
  }
  if (floating) return real;
  return exact;
}

Weight weight_from_json(const Json& pairs, std::size_t size) {
  if (!pairs.is_array()) throw SpecError("weight: expected an array of pairs");
  Weight w;
  w.values.assign(size, 0.0);
  std::vector<char> seen(size, 0);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto v = index_of(pairs[i], size, i);
    const auto& x = pairs[i][1];
    double d = 0.0;
    if (x.is_string()) {
      d = to_double(parse_rational(x.get<std::string>()));
    } else if (x.is_number()) {
      d = x.get<double>();
    } else {
      throw SpecError("weight entry " + std::to_string(i) + ": value must be numeric");
    }
    if (!(d >= 1.0) || !std::isfinite(d)) {
      throw SpecError("weight entry " + std::to_string(i) + ": values must be finite and >= 1");
    }
    w.values[v] = d;
    seen[v] = 1;
  }
  for (std::size_t v = 0; v < size; ++v) {
    if (!seen[v]) throw SpecError("weight: vertex " + std::to_string(v) + " has no value");
  }
  return w;
}

Json field_to_json(const ExactField& f) {
  Json out = Json::array();
  for (VertexId v = 0; v < f.size(); ++v) {
    if (f[v] != 0) out.push_back(Json::array({v, to_string(f[v])}));
  }
  return out;
}

Json field_to_json(const RealField& f) {
  Json out = Json::array();
  for (VertexId v = 0; v < f.size(); ++v) {
    if (f[v] != 0) out.push_back(Json::array({v, f[v]}));
  }
  return out;
}

Json field_to_json(const ScalarField& f) {
  return std::visit([](const auto& g) { return field_to_json(g); }, f);
}

}  // namespace isocert::cli
