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
#include <vector>

#include "json.hpp"

#include "isocert/group.hpp"

namespace isocert::cli {

using Json = nlohmann::ordered_json;

/// A validated graph spec file. `canonical` is the resolved spec (generators
/// symmetrized, defaults filled in) and is what the digest is taken over, so
/// equivalent files share a digest.
struct LoadedSpec {
  GroupSpec spec;
  int horizon = 0;
  std::vector<std::string> warnings;
  Json canonical;
  std::string digest;
};

/// Validates a spec document. Throws SpecError naming the offending field.
LoadedSpec parse_spec(const Json& document);
/// Reads and parses a spec file; a missing or unreadable file is a SpecError.
LoadedSpec load_spec(const std::string& path);
/// Spec document for an in-memory spec (catalogue instances).
Json spec_to_json(const GroupSpec& spec, int horizon);

/// 64-bit FNV-1a as 16 hex digits. Identifies inputs; not a security hash.
std::string digest(const std::string& bytes);

}  // namespace isocert::cli
