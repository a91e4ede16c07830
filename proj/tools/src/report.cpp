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

#include "isocert/cli/report.hpp"

#include <fstream>
#include <iostream>

#include "isocert/errors.hpp"

namespace isocert::cli {
namespace {

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void csv_line(std::string& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += csv_cell(cells[i]);
  }
  out += '\n';
}

}  // namespace

Format format_from_name(std::string_view name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw PreconditionError("unknown report format '" + std::string(name) + "'");
}

std::string render(const Report& report, Format format) {
  if (format == Format::Json) return report.document.dump(2) + "\n";
  std::string out;
  csv_line(out, report.table.headers);
  for (const auto& row : report.table.rows) csv_line(out, row);
  return out;
}

void emit_report(const Report& report, Format format, const std::string& path) {
  const auto text = render(report, format);
  if (path == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write report to '" + path + "'");
  out << text;
  if (!out.flush()) throw Error("cannot write report to '" + path + "'");
}

std::string join_indices(const Json& list) {
  std::string out;
  for (const auto& x : list) {
    if (!out.empty()) out += ' ';
    out += x.dump();
  }
  return out;
}

}  // namespace isocert::cli
