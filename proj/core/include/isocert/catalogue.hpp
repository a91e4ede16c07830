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

#include <string>
#include <string_view>
#include <vector>

#include "isocert/group.hpp"
#include "isocert/growth.hpp"

namespace isocert {

GroupSpec lattice_spec(int dimension);
GroupSpec free_group_spec(int rank);
GroupSpec heisenberg_spec();
GroupSpec cyclic_spec(int n);
GroupSpec dihedral_spec(int n);
GroupSpec hypercube_spec(int n);
/// S_n as permutations of {0..n-1}, generated by all transpositions.
GroupSpec symmetric_group_spec(int n);
/// S_n (all transpositions) acting on ordered tuples of `points` distinct
/// points; points = 1 is the natural action, points = n the regular one.
GroupSpec points_schreier_spec(int n, int points = 1);

/// A named test graph with the horizon and regime it is explored under.
struct Instance {
  std::string name;
  GroupSpec spec;
  int horizon = 1;
  Regime regime = Regime::Infinite;
};

/// Z, Z2, Z3, F2, H3 (infinite) and C_n, Q_n, D_n, S3/S4 on points (compact).
std::vector<Instance> standard_catalogue();

/// Looks up a catalogue name, also accepting the parametric forms
/// Z<d>, F<k>, C<n>, D<n>, Q<n>, S<n>-points. Throws SpecError otherwise.
Instance catalogue_instance(std::string_view name);

}  // namespace isocert
