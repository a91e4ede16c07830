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
#include <unordered_map>
#include <vector>

#include "isocert/group.hpp"

namespace isocert {

/// Explicit element list and multiplication table of a finite group,
/// obtained by closing the generating set under left multiplication.
class FiniteGroup {
 public:
  using Index = std::uint32_t;

  /// Throws PreconditionError for infinite groups and ResourceError when the
  /// order exceeds `max_order`.
  static FiniteGroup enumerate(const Space& space, std::size_t max_order = 2048);

  std::size_t order() const { return elements_.size(); }
  const Element& element(Index i) const { return elements_[i]; }
  const std::vector<Element>& elements() const { return elements_; }
  Index identity() const { return 0; }

  /// Throws PreconditionError when `e` is not in the group.
  Index index_of(const Element& e) const;
  Index multiply(Index a, Index b) const { return table_[std::size_t(a) * order() + b]; }
  Index inverse(Index a) const { return inverse_[a]; }

 private:
  std::vector<Element> elements_;
  std::unordered_map<Element, Index, ElementHash> index_;
  std::vector<Index> table_;
  std::vector<Index> inverse_;
};

}  // namespace isocert
