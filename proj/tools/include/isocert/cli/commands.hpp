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

#include <optional>
#include <string>
#include <vector>

#include "isocert/cli/report.hpp"
#include "isocert/cli/spec_io.hpp"

namespace isocert::cli {

inline constexpr const char* kToolVersion = "0.3.0";

/// A fully resolved command: every flag value is present in `params`, so the
/// invocation alone determines the output.
struct Invocation {
  std::string command;  // e.g. "growth", "isoperimetry exact", "verify hpw"
  Json params = Json::object();
  std::optional<LoadedSpec> spec;  // unused by "corpus"
};

/// Every command accepted by run_command, in help order.
const std::vector<std::string>& command_names();
/// Flag defaults for a command; keys are the flag names with '_' for '-'.
Json default_params(const std::string& command);
/// Whether the command reads a graph spec.
bool needs_spec(const std::string& command);

/// Fills in missing params from the defaults and rejects unknown ones.
Json resolve_params(const std::string& command, const Json& given);

/// Runs one command. Usage and resource problems throw isocert::Error.
Report run_command(const Invocation& invocation);

/// Spec for a catalogue instance, optionally with a different horizon.
LoadedSpec catalogue_spec(const std::string& name, std::optional<int> horizon = {});

struct RunManifest {
  std::string tool_version = kToolVersion;
  std::string command;
  Json params = Json::object();
  Json spec;  // canonical spec document, null for spec-free commands
  std::string spec_digest;
  std::vector<std::uint64_t> seeds;
  std::string timestamp;      // UTC, informational only
  std::string output_digest;  // digest of the JSON report
};

RunManifest make_manifest(const Invocation& invocation, const Report& report);
Json manifest_to_json(const RunManifest& manifest);
RunManifest manifest_from_json(const Json& document);
RunManifest read_manifest(const std::string& path);
void write_manifest(const RunManifest& manifest, const std::string& path);

struct ReplayResult {
  Report report;
  std::string output_digest;
  bool identical = false;
};

/// Re-runs a manifest, optionally with another worker count, and compares the
/// output digest. Throws SpecError when the embedded spec does not match its digest.
ReplayResult replay(const RunManifest& manifest, std::optional<unsigned> workers = {});

}  // namespace isocert::cli
