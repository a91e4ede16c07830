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

#include "isocert/cli/spec_io.hpp"
#include "isocert/field.hpp"
#include "isocert/rational.hpp"

namespace isocert::cli {

/// Fields are lists of [vertex-index, value] pairs over the ball's vertex
/// indices; unlisted vertices are zero. String values ("p/q") and integers
/// are exact; any JSON float switches the whole field to floating mode.
ScalarField field_from_json(const Json& pairs, std::size_t size);
/// Weights list every vertex: [[index, value], ...] with value >= 1.
Weight weight_from_json(const Json& pairs, std::size_t size);

/// Non-zero entries in ascending vertex order.
Json field_to_json(const ExactField& f);
Json field_to_json(const RealField& f);
Json field_to_json(const ScalarField& f);

}  // namespace isocert::cli
