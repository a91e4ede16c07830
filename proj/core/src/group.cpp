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

#include "isocert/group.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>
#include <utility>

#include "isocert/errors.hpp"

namespace isocert {

std::size_t ElementHash::operator()(const Element& e) const noexcept {
  // FNV-1a over the 64-bit words, finished with a splitmix step.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (auto x : e) {
    h ^= static_cast<std::uint64_t>(x);
    h *= 0x100000001b3ULL;
  }
  h ^= h >> 30;
  h *= 0xbf58476d1ce4e5b9ULL;
  h ^= h >> 27;
  return static_cast<std::size_t>(h);
}

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 8> kFamilyNames{{
    {Family::IntegerLattice, "integer-lattice"},
    {Family::FreeGroup, "free-group"},
    {Family::DiscreteHeisenberg, "discrete-heisenberg"},
    {Family::Cyclic, "cyclic"},
    {Family::Dihedral, "dihedral"},
    {Family::Hypercube, "hypercube"},
    {Family::PermutationGroup, "permutation-group"},
    {Family::Schreier, "schreier"},
}};

std::int64_t mod(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

void require_length(const Element& e, std::size_t n, std::string_view what) {
  if (e.size() != n) {
    throw SpecError(std::string(what) + " element " + format_element(e) + " must have length " +
                    std::to_string(n));
  }
}

class LatticeGroup final : public Group {
 public:
  explicit LatticeGroup(int dim) : dim_(dim) {}
  Element identity() const override { return Element(dim_, 0); }
  Element multiply(const Element& a, const Element& b) const override {
    Element c(dim_);
    for (int i = 0; i < dim_; ++i) c[i] = a[i] + b[i];
    return c;
  }
  Element inverse(const Element& a) const override {
    Element c(a);
    for (auto& x : c) x = -x;
    return c;
  }
  bool is_finite() const override { return false; }
  void check_element(const Element& e) const override {
    require_length(e, dim_, "integer-lattice");
  }

 private:
  int dim_;
};

class FreeGroup final : public Group {
 public:
  explicit FreeGroup(int rank) : rank_(rank) {}
  Element identity() const override { return {}; }
  Element multiply(const Element& a, const Element& b) const override {
    Element c(a);
    for (auto letter : b) {
      if (!c.empty() && c.back() == -letter) {
        c.pop_back();
      } else {
        c.push_back(letter);
      }
    }
    return c;
  }
  Element inverse(const Element& a) const override {
    Element c(a.rbegin(), a.rend());
    for (auto& x : c) x = -x;
    return c;
  }
  bool is_finite() const override { return false; }
  void check_element(const Element& e) const override {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0 || e[i] > rank_ || e[i] < -rank_) {
        throw SpecError("free-group letter " + std::to_string(e[i]) + " outside +-1..+-" +
                        std::to_string(rank_));
      }
      if (i > 0 && e[i] == -e[i - 1]) {
        throw SpecError("free-group word " + format_element(e) + " is not reduced");
      }
    }
  }

 private:
  int rank_;
};

class HeisenbergGroup final : public Group {
 public:
  Element identity() const override { return {0, 0, 0}; }
  Element multiply(const Element& a, const Element& b) const override {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2] + a[0] * b[1]};
  }
  Element inverse(const Element& a) const override {
    return {-a[0], -a[1], -a[2] + a[0] * a[1]};
  }
  bool is_finite() const override { return false; }
  void check_element(const Element& e) const override {
    require_length(e, 3, "discrete-heisenberg");
  }
};

class CyclicGroup final : public Group {
 public:
  explicit CyclicGroup(int n) : n_(n) {}
  Element identity() const override { return {0}; }
  Element multiply(const Element& a, const Element& b) const override {
    return {mod(a[0] + b[0], n_)};
  }
  Element inverse(const Element& a) const override { return {mod(-a[0], n_)}; }
  bool is_finite() const override { return true; }
  void check_element(const Element& e) const override {
    require_length(e, 1, "cyclic");
    if (e[0] < 0 || e[0] >= n_) {
      throw SpecError("cyclic element " + format_element(e) + " outside [0, n)");
    }
  }

 private:
  int n_;
};

class DihedralGroup final : public Group {
 public:
  explicit DihedralGroup(int n) : n_(n) {}
  Element identity() const override { return {0, 0}; }
  Element multiply(const Element& a, const Element& b) const override {
    const std::int64_t k = a[1] == 0 ? a[0] + b[0] : a[0] - b[0];
    return {mod(k, n_), a[1] ^ b[1]};
  }
  Element inverse(const Element& a) const override {
    if (a[1] == 1) return a;
    return {mod(-a[0], n_), 0};
  }
  bool is_finite() const override { return true; }
  void check_element(const Element& e) const override {
    require_length(e, 2, "dihedral");
    if (e[0] < 0 || e[0] >= n_ || (e[1] != 0 && e[1] != 1)) {
      throw SpecError("dihedral element " + format_element(e) + " is not canonical");
    }
  }

 private:
  int n_;
};

class HypercubeGroup final : public Group {
 public:
  explicit HypercubeGroup(int n) : n_(n) {}
  Element identity() const override { return Element(n_, 0); }
  Element multiply(const Element& a, const Element& b) const override {
    Element c(n_);
    for (int i = 0; i < n_; ++i) c[i] = a[i] ^ b[i];
    return c;
  }
  Element inverse(const Element& a) const override { return a; }
  bool is_finite() const override { return true; }
  void check_element(const Element& e) const override {
    require_length(e, n_, "hypercube");
    for (auto x : e) {
      if (x != 0 && x != 1) throw SpecError("hypercube element " + format_element(e) + " is not a bit tuple");
    }
  }

 private:
  int n_;
};

class PermutationGroup final : public Group {
 public:
  explicit PermutationGroup(int degree) : degree_(degree) {}
  Element identity() const override {
    Element id(degree_);
    for (int i = 0; i < degree_; ++i) id[i] = i;
    return id;
  }
  // (a * b)(i) = a(b(i)): b acts first.
  Element multiply(const Element& a, const Element& b) const override {
    Element c(degree_);
    for (int i = 0; i < degree_; ++i) c[i] = a[b[i]];
    return c;
  }
  Element inverse(const Element& a) const override {
    Element c(degree_);
    for (int i = 0; i < degree_; ++i) c[a[i]] = i;
    return c;
  }
  bool is_finite() const override { return true; }
  void check_element(const Element& e) const override {
    require_length(e, degree_, "permutation");
    std::vector<char> seen(degree_, 0);
    for (auto x : e) {
      if (x < 0 || x >= degree_ || seen[x]) {
        throw SpecError("permutation " + format_element(e) + " is not a bijection of 0.." +
                        std::to_string(degree_ - 1));
      }
      seen[x] = 1;
    }
  }

 private:
  int degree_;
};

Element unit_vector(int dim, int i, std::int64_t sign) {
  Element e(dim, 0);
  e[i] = sign;
  return e;
}

}  // namespace

std::string_view family_name(Family family) {
  for (const auto& [f, name] : kFamilyNames) {
    if (f == family) return name;
  }
  return "unknown";
}

std::optional<Family> family_from_name(std::string_view name) {
  for (const auto& [f, n] : kFamilyNames) {
    if (n == name) return f;
  }
  return std::nullopt;
}

std::unique_ptr<Group> make_group(Family family, int size) {
  switch (family) {
    case Family::IntegerLattice:
      if (size < 1) throw SpecError("integer-lattice dimension must be >= 1");
      return std::make_unique<LatticeGroup>(size);
    case Family::FreeGroup:
      if (size < 1) throw SpecError("free-group rank must be >= 1");
      return std::make_unique<FreeGroup>(size);
    case Family::DiscreteHeisenberg:
      return std::make_unique<HeisenbergGroup>();
    case Family::Cyclic:
      if (size < 2) throw SpecError("cyclic group order must be >= 2");
      return std::make_unique<CyclicGroup>(size);
    case Family::Dihedral:
      if (size < 2) throw SpecError("dihedral parameter n must be >= 2");
      return std::make_unique<DihedralGroup>(size);
    case Family::Hypercube:
      if (size < 1 || size > 30) throw SpecError("hypercube dimension must be in 1..30");
      return std::make_unique<HypercubeGroup>(size);
    case Family::PermutationGroup:
    case Family::Schreier:
      if (size < 1) throw SpecError("permutation degree must be >= 1");
      return std::make_unique<PermutationGroup>(size);
  }
  throw SpecError("unknown group family");
}

std::vector<Element> default_generators(Family family, int size) {
  std::vector<Element> gens;
  switch (family) {
    case Family::IntegerLattice:
    case Family::Hypercube:
      for (int i = 0; i < size; ++i) {
        gens.push_back(unit_vector(size, i, 1));
        if (family == Family::IntegerLattice) gens.push_back(unit_vector(size, i, -1));
      }
      break;
    case Family::FreeGroup:
      for (int i = 1; i <= size; ++i) {
        gens.push_back({i});
        gens.push_back({-i});
      }
      break;
    case Family::DiscreteHeisenberg:
      gens = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}};
      break;
    case Family::Cyclic:
      gens = {{1}, {size - 1}};
      break;
    case Family::Dihedral:
      gens = {{1, 0}, {size - 1, 0}, {0, 1}};
      break;
    case Family::PermutationGroup:
    case Family::Schreier:
      break;
  }
  return gens;
}

std::vector<Element> symmetrize(GroupSpec& spec) {
  if (spec.generators.empty()) spec.generators = default_generators(spec.family, spec.size);
  const auto group = make_group(spec.family, spec.size);
  for (const auto& g : spec.generators) group->check_element(g);

  std::vector<Element> unique;
  std::set<Element> seen;
  for (const auto& g : spec.generators) {
    if (seen.insert(g).second) unique.push_back(g);
  }
  std::vector<Element> added;
  const std::size_t original = unique.size();
  for (std::size_t i = 0; i < original; ++i) {
    Element inv = group->inverse(unique[i]);
    if (seen.insert(inv).second) {
      unique.push_back(inv);
      added.push_back(std::move(inv));
    }
  }
  spec.generators = std::move(unique);
  return added;
}

Space::Space(GroupSpec spec) : spec_(std::move(spec)) {
  if (spec_.generators.empty()) spec_.generators = default_generators(spec_.family, spec_.size);
  group_ = make_group(spec_.family, spec_.size);
  if (spec_.generators.empty()) throw SpecError("generating set is empty");

  const Element id = group_->identity();
  std::set<Element> gens;
  for (const auto& g : spec_.generators) {
    group_->check_element(g);
    if (g == id) throw SpecError("generating set contains the identity");
    gens.insert(g);
  }
  for (const auto& g : gens) {
    if (!gens.count(group_->inverse(g))) {
      throw SpecError("generating set is not symmetric: inverse of " + format_element(g) +
                      " missing");
    }
  }
  spec_.generators.assign(gens.begin(), gens.end());

  if (spec_.family == Family::Schreier) {
    if (spec_.base_points.empty()) throw SpecError("schreier spec needs at least one base point");
    std::set<std::int64_t> distinct;
    for (auto p : spec_.base_points) {
      if (p < 0 || p >= spec_.size) {
        throw SpecError("schreier base point " + std::to_string(p) + " outside 0.." +
                        std::to_string(spec_.size - 1));
      }
      if (!distinct.insert(p).second) throw SpecError("schreier base points must be distinct");
    }
    basepoint_ = spec_.base_points;
  } else {
    if (!spec_.base_points.empty()) throw SpecError("base points are only meaningful for schreier");
    basepoint_ = id;
  }

  if (spec_.basepoint) {
    if (spec_.family == Family::Schreier) {
      const auto& v = *spec_.basepoint;
      if (v.size() != basepoint_.size()) throw SpecError("basepoint has the wrong tuple length");
      for (auto p : v) {
        if (p < 0 || p >= spec_.size) throw SpecError("basepoint entry outside the point set");
      }
    } else {
      group_->check_element(*spec_.basepoint);
    }
    basepoint_ = *spec_.basepoint;
  }
}

Vertex Space::act(const Element& g, const Vertex& v) const {
  if (spec_.family != Family::Schreier) return group_->multiply(g, v);
  Vertex image(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) image[i] = g[v[i]];
  return image;
}

std::string format_element(const Element& e) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) os << ',';
    os << e[i];
  }
  os << ')';
  return os.str();
}

}  // namespace isocert
