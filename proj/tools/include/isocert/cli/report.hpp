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

#include "isocert/cli/spec_io.hpp"

namespace isocert::cli {

enum class Format { Json, Csv };

Format format_from_name(std::string_view name);

/// Flat view of a report for CSV output. Headers are fixed per command.
struct Table {
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;
};

/// Result of one command. `document` carries everything (JSON output);
/// `table` the per-row view. `pass` is false when any check failed.
struct Report {
  Json document = Json::object();
  Table table;
  bool pass = true;
};

std::string render(const Report& report, Format format);
/// Writes to `path`, or stdout for "-". Throws Error on an unwritable path.
void emit_report(const Report& report, Format format, const std::string& path);

/// CSV cell text for a sorted index list: space separated.
std::string join_indices(const Json& list);

}  // namespace isocert::cli
