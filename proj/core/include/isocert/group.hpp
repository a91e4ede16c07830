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
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace isocert {

/// Canonical encoding of a group element or a vertex of a homogeneous space.
///
/// Every family in the catalogue encodes its elements as an integer tuple
/// whose equality coincides with equality in the group:
///   integer-lattice      coordinates (x_1, ..., x_d)
///   free-group           freely reduced word, letters +-1..+-k
///   discrete-heisenberg  (a, b, c), product (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab')
///   cyclic               (k) with 0 <= k < n
///   dihedral             (k, f): rotation^k * reflection^f
///   hypercube            bit tuple of length n
///   permutation-group    image list p with p[i] the image of point i
///   schreier             image of the base tuple under the coset
using Element = std::vector<std::int64_t>;
using Vertex = Element;

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept;
};

enum class Family {
  IntegerLattice,
  FreeGroup,
  DiscreteHeisenberg,
  Cyclic,
  Dihedral,
  Hypercube,
  PermutationGroup,
  Schreier,
};

std::string_view family_name(Family family);
std::optional<Family> family_from_name(std::string_view name);

/// Declarative description of a group family, generating set and action.
struct GroupSpec {
  Family family = Family::IntegerLattice;
  /// Lattice dimension, free-group rank, n for cyclic / dihedral / hypercube,
  /// or the degree of a permutation group (also for schreier).
  int size = 1;
  /// Empty means "family default" (see default_generators).
  std::vector<Element> generators;
  /// Schreier only: the ordered tuple of points whose orbit forms the vertex set.
  /// The coset of the point-wise stabilizer is identified with the image tuple.
  std::vector<std::int64_t> base_points;
  /// Vertex used as the origin; identity (or the base tuple) when unset.
  std::optional<Vertex> basepoint;
};

/// Abstract group with exact element arithmetic.
class Group {
 public:
  virtual ~Group() = default;

  virtual Element identity() const = 0;
  virtual Element multiply(const Element& a, const Element& b) const = 0;
  virtual Element inverse(const Element& a) const = 0;
  virtual bool is_finite() const = 0;
  /// Throws SpecError when `e` is not a canonical encoding for this group.
  virtual void check_element(const Element& e) const = 0;
};

std::unique_ptr<Group> make_group(Family family, int size);

/// Generators used when a spec leaves the generating set empty.
/// Permutation and schreier specs have no default and return an empty list.
std::vector<Element> default_generators(Family family, int size);

/// Adds every missing inverse to `spec.generators` (after filling in the
/// family default when the list is empty) and drops exact duplicates.
/// Returns the generators that had to be added.
std::vector<Element> symmetrize(GroupSpec& spec);

/// A group together with its left action on a vertex set: the regular action
/// (Cayley graph) or the point-wise action on tuples (Schreier coset graph).
///
/// Adjacency is v ~ s.v for s in the generating set, with loops dropped.
class Space {
 public:
  /// Validates the spec: well-formed generators, non-empty, symmetric,
  /// identity excluded. Throws SpecError otherwise.
  explicit Space(GroupSpec spec);

  const GroupSpec& spec() const { return spec_; }
  const Group& group() const { return *group_; }
  const std::vector<Element>& generators() const { return spec_.generators; }
  bool is_finite() const { return group_->is_finite(); }
  bool is_schreier() const { return spec_.family == Family::Schreier; }

  const Vertex& basepoint() const { return basepoint_; }
  Vertex act(const Element& g, const Vertex& v) const;

 private:
  GroupSpec spec_;
  std::shared_ptr<const Group> group_;
  Vertex basepoint_;
};

std::string format_element(const Element& e);

}  // namespace isocert
