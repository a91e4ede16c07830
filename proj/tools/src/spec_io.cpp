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

#include "isocert/cli/spec_io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "isocert/errors.hpp"

namespace isocert::cli {
namespace {

void reject_unknown(const Json& object, const std::set<std::string>& allowed,
                    const std::string& where) {
  for (const auto& [key, value] : object.items()) {
    if (!allowed.count(key)) throw SpecError(where + ": unknown field '" + key + "'");
  }
}

std::int64_t integer(const Json& value, const std::string& field) {
  if (!value.is_number_integer()) throw SpecError(field + ": expected an integer");
  return value.get<std::int64_t>();
}

Element element(const Json& value, const std::string& field) {
  if (!value.is_array()) throw SpecError(field + ": expected an array of integers");
  Element e;
  for (std::size_t i = 0; i < value.size(); ++i) {
    e.push_back(integer(value[i], field + "[" + std::to_string(i) + "]"));
  }
  return e;
}

// Which params key carries GroupSpec::size for each family.
const char* size_key(Family family) {
  switch (family) {
    case Family::IntegerLattice: return "dimension";
    case Family::FreeGroup: return "rank";
    case Family::DiscreteHeisenberg: return nullptr;
    case Family::Cyclic:
    case Family::Dihedral:
    case Family::Hypercube: return "n";
    case Family::PermutationGroup:
    case Family::Schreier: return "degree";
  }
  return nullptr;
}

}  // namespace

std::string digest(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char out[17];
  std::snprintf(out, sizeof out, "%016llx", static_cast<unsigned long long>(h));
  return out;
}

Json spec_to_json(const GroupSpec& spec, int horizon) {
  Json doc;
  doc["family"] = std::string(family_name(spec.family));
  Json params = Json::object();
  if (const char* key = size_key(spec.family)) params[key] = spec.size;
  if (spec.family == Family::Schreier) params["base"] = spec.base_points;
  doc["params"] = params;
  doc["generators"] = spec.generators;
  doc["horizon"] = horizon;
  if (spec.basepoint) doc["basepoint"] = *spec.basepoint;
  return doc;
}

LoadedSpec parse_spec(const Json& doc) {
  if (!doc.is_object()) throw SpecError("spec: expected a JSON object");
  reject_unknown(doc, {"family", "params", "generators", "horizon", "basepoint"}, "spec");

  if (!doc.contains("family") || !doc["family"].is_string()) {
    throw SpecError("family: required string");
  }
  const auto name = doc["family"].get<std::string>();
  const auto family = family_from_name(name);
  if (!family) throw SpecError("family: unknown family '" + name + "'");

  GroupSpec spec;
  spec.family = *family;
  const Json params = doc.value("params", Json::object());
  if (!params.is_object()) throw SpecError("params: expected an object");
  const char* key = size_key(*family);
  std::set<std::string> allowed;
  if (key) allowed.insert(key);
  if (*family == Family::Schreier) allowed.insert("base");
  reject_unknown(params, allowed, "params");
  if (key) {
    if (!params.contains(key)) throw SpecError(std::string("params.") + key + ": required");
    const auto v = integer(params[key], std::string("params.") + key);
    if (v < 1 || v > 1'000'000) throw SpecError(std::string("params.") + key + ": out of range");
    spec.size = static_cast<int>(v);
  } else {
    spec.size = 3;
  }
  if (*family == Family::Schreier) {
    if (!params.contains("base")) throw SpecError("params.base: required for schreier");
    spec.base_points = element(params["base"], "params.base");
  }

  if (doc.contains("generators")) {
    const auto& gens = doc["generators"];
    if (!gens.is_array()) throw SpecError("generators: expected an array");
    for (std::size_t i = 0; i < gens.size(); ++i) {
      spec.generators.push_back(element(gens[i], "generators[" + std::to_string(i) + "]"));
    }
  }
  if (!doc.contains("horizon")) throw SpecError("horizon: required");
  const auto horizon = integer(doc["horizon"], "horizon");
  if (horizon < 1 || horizon > 100'000) throw SpecError("horizon: must be in [1, 100000]");
  if (doc.contains("basepoint")) spec.basepoint = element(doc["basepoint"], "basepoint");

  LoadedSpec out;
  const auto added = symmetrize(spec);
  if (!added.empty()) {
    std::string list;
    for (const auto& g : added) list += (list.empty() ? "" : ", ") + format_element(g);
    out.warnings.push_back("generating set was not symmetric; added inverses " + list);
  }
  Space validated(spec);  // throws SpecError on bad generators or basepoint
  out.spec = validated.spec();
  out.horizon = static_cast<int>(horizon);
  out.canonical = spec_to_json(out.spec, out.horizon);
  out.digest = digest(out.canonical.dump());
  return out;
}

LoadedSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open spec file '" + path + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SpecError("spec file '" + path + "': " + e.what());
  }
  return parse_spec(doc);
}

}  // namespace isocert::cli
