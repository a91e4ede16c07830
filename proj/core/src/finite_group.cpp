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

#include "isocert/finite_group.hpp"

#include <deque>
#include <string>

#include "isocert/errors.hpp"

namespace isocert {

FiniteGroup FiniteGroup::enumerate(const Space& space, std::size_t max_order) {
  if (!space.is_finite()) throw PreconditionError("group enumeration needs a finite group");
  const Group& group = space.group();

  FiniteGroup fg;
  fg.elements_.push_back(group.identity());
  fg.index_[fg.elements_.front()] = 0;
  std::deque<Index> queue{0};
  while (!queue.empty()) {
    const Index cur = queue.front();
    queue.pop_front();
    for (const auto& s : space.generators()) {
      Element next = group.multiply(s, fg.elements_[cur]);
      if (fg.index_.count(next)) continue;
      if (fg.elements_.size() >= max_order) {
        throw ResourceError("group order exceeds the enumeration cap of " +
                            std::to_string(max_order));
      }
      const auto id = static_cast<Index>(fg.elements_.size());
      fg.index_.emplace(next, id);
      fg.elements_.push_back(std::move(next));
      queue.push_back(id);
    }
  }

  const std::size_t n = fg.elements_.size();
  fg.table_.resize(n * n);
  fg.inverse_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      fg.table_[a * n + b] = fg.index_.at(group.multiply(fg.elements_[a], fg.elements_[b]));
    }
    fg.inverse_[a] = fg.index_.at(group.inverse(fg.elements_[a]));
  }
  return fg;
}

FiniteGroup::Index FiniteGroup::index_of(const Element& e) const {
  const auto it = index_.find(e);
  if (it == index_.end()) {
    throw PreconditionError("element " + format_element(e) + " is not in the group");
  }
  return it->second;
}

}  // namespace isocert
