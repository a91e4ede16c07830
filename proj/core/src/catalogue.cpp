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

#include "isocert/catalogue.hpp"

#include <charconv>
#include <string>

#include "isocert/errors.hpp"

namespace isocert {

namespace {

GroupSpec family_spec(Family family, int size) {
  GroupSpec s;
  s.family = family;
  s.size = size;
  s.generators = default_generators(family, size);
  return s;
}

std::vector<Element> transpositions(int n) {
  std::vector<Element> gens;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Element p(n);
      for (int k = 0; k < n; ++k) p[k] = k;
      std::swap(p[i], p[j]);
      gens.push_back(std::move(p));
    }
  }
  return gens;
}

}  // namespace

GroupSpec lattice_spec(int dimension) { return family_spec(Family::IntegerLattice, dimension); }
GroupSpec free_group_spec(int rank) { return family_spec(Family::FreeGroup, rank); }
GroupSpec heisenberg_spec() { return family_spec(Family::DiscreteHeisenberg, 3); }
GroupSpec cyclic_spec(int n) { return family_spec(Family::Cyclic, n); }
GroupSpec dihedral_spec(int n) { return family_spec(Family::Dihedral, n); }
GroupSpec hypercube_spec(int n) { return family_spec(Family::Hypercube, n); }

GroupSpec symmetric_group_spec(int n) {
  if (n < 2) throw SpecError("symmetric group needs n >= 2");
  GroupSpec s;
  s.family = Family::PermutationGroup;
  s.size = n;
  s.generators = transpositions(n);
  return s;
}

GroupSpec points_schreier_spec(int n, int points) {
  if (n < 2) throw SpecError("symmetric group needs n >= 2");
  if (points < 1 || points > n) throw SpecError("number of base points must be in 1..n");
  GroupSpec s;
  s.family = Family::Schreier;
  s.size = n;
  s.generators = transpositions(n);
  for (int i = 0; i < points; ++i) s.base_points.push_back(i);
  return s;
}

std::vector<Instance> standard_catalogue() {
  return {
      {"Z", lattice_spec(1), 12, Regime::Infinite},
      {"Z2", lattice_spec(2), 6, Regime::Infinite},
      {"Z3", lattice_spec(3), 4, Regime::Infinite},
      {"F2", free_group_spec(2), 4, Regime::Infinite},
      {"H3", heisenberg_spec(), 4, Regime::Infinite},
      {"C8", cyclic_spec(8), 8, Regime::Compact},
      {"C16", cyclic_spec(16), 16, Regime::Compact},
      {"Q3", hypercube_spec(3), 3, Regime::Compact},
      {"Q4", hypercube_spec(4), 4, Regime::Compact},
      {"D6", dihedral_spec(6), 8, Regime::Compact},
      {"D8", dihedral_spec(8), 8, Regime::Compact},
      {"S3-points", points_schreier_spec(3), 2, Regime::Compact},
      {"S4-points", points_schreier_spec(4), 2, Regime::Compact},
  };
}

namespace {

bool parse_suffix(std::string_view text, std::string_view prefix, int& out) {
  if (text.size() <= prefix.size() || text.substr(0, prefix.size()) != prefix) return false;
  const auto digits = text.substr(prefix.size());
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), out);
  return ec == std::errc() && ptr == digits.data() + digits.size() && out > 0;
}

}  // namespace

Instance catalogue_instance(std::string_view name) {
  for (auto& inst : standard_catalogue()) {
    if (inst.name == name) return inst;
  }
  const std::string label(name);
  int n = 0;
  if (name.ends_with("-points")) {
    const auto head = name.substr(0, name.size() - 7);
    if (parse_suffix(head, "S", n)) return {label, points_schreier_spec(n), 2, Regime::Compact};
  }
  if (parse_suffix(name, "Z", n)) return {label, lattice_spec(n), 4, Regime::Infinite};
  if (parse_suffix(name, "F", n)) return {label, free_group_spec(n), 3, Regime::Infinite};
  if (parse_suffix(name, "C", n)) return {label, cyclic_spec(n), n, Regime::Compact};
  if (parse_suffix(name, "D", n)) return {label, dihedral_spec(n), n + 1, Regime::Compact};
  if (parse_suffix(name, "Q", n)) return {label, hypercube_spec(n), n, Regime::Compact};
  throw SpecError("unknown catalogue instance '" + label + "'");
}

}  // namespace isocert
