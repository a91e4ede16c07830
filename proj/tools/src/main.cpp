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

// isocert: command-line front end. Every subcommand maps one-to-one onto a
// library operation; flags are generated from the command's parameter defaults.

#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "isocert/cli/commands.hpp"
#include "isocert/errors.hpp"

namespace {

using isocert::cli::Json;

std::string flag_name(const std::string& key) {
  std::string out = key;
  for (auto& c : out) {
    if (c == '_') c = '-';
  }
  return out;
}

Json scalar_like(const Json& prototype, const std::string& text) {
  try {
    if (prototype.is_string()) return text;
    if (prototype.is_number_float()) return std::stod(text);
    if (prototype.is_number_integer()) {
      if (!text.empty() && text[0] == '-') return std::stoll(text);
      return std::stoull(text);
    }
  } catch (const std::exception&) {
    throw isocert::PreconditionError("cannot parse '" + text + "' as a number");
  }
  // Unknown element type (empty default list): numbers when they look numeric.
  try {
    std::size_t used = 0;
    const long long v = std::stoll(text, &used);
    if (used == text.size()) return v;
    const double d = std::stod(text, &used);
    if (used == text.size()) return d;
  } catch (const std::exception&) {
  }
  return text;
}

Json convert(const Json& prototype, const std::string& text) {
  if (!prototype.is_array()) return scalar_like(prototype, text);
  if (!text.empty() && text.front() == '[') {
    try {
      return Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw isocert::PreconditionError("cannot parse '" + text + "' as JSON: " + e.what());
    }
  }
  Json out = Json::array();
  const Json element = prototype.empty() ? Json(nullptr) : prototype.front();
  std::size_t start = 0;
  while (start <= text.size() && !text.empty()) {
    const auto comma = text.find(',', start);
    const auto token = text.substr(start, comma == std::string::npos ? std::string::npos
                                                                     : comma - start);
    out.push_back(scalar_like(element, token));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

const std::map<std::string, std::string> kDescriptions = {
    {"build", "Explore the ball and validate its invariants"},
    {"growth", "Growth table, super-additivity and the quarter-volume diagnostic"},
    {"isoperimetry", "Isoperimetric profiles"},
    {"exact", "Exhaustive minimum perimeter for k = 1..kmax"},
    {"heuristic", "Annealed upper bounds on the profile"},
    {"constants", "C_M and D_M estimates, D / C^2 and the certified constant trace"},
    {"verify", "Check one inequality on given or seeded fields"},
    {"coarea", "Coarea identity, exact"},
    {"hpw", "Uncertainty ratio against the certified constant, plus additive links"},
    {"faris", "Faris-type bound on sets no larger than a ball"},
    {"poincare", "Poincare, median and Markov checks on a finite graph"},
    {"double-counting", "Translate-averaging lemma on a finite group"},
    {"translation", "Translation gradient bound over group elements"},
    {"corpus", "Seeded uncertainty sweep over catalogue instances"},
};

std::string describe(const std::string& name) {
  const auto it = kDescriptions.find(name);
  return it == kDescriptions.end() ? "" : it->second;
}

struct CommandOptions {
  std::string command;
  CLI::App* app = nullptr;
  std::map<std::string, std::string> text;
  std::map<std::string, bool> flags;
  std::map<std::string, CLI::Option*> options;
};

struct Output {
  std::string spec_path;
  std::string instance;
  std::optional<int> horizon;
  std::string format = "json";
  std::string out = "-";
  std::string manifest;
};

void add_command(CLI::App& parent, const std::string& name, CommandOptions& c, Output& io) {
  const auto defaults = isocert::cli::default_params(c.command);
  c.app = parent.add_subcommand(name, describe(name));
  if (isocert::cli::needs_spec(c.command)) {
    c.app->add_option("--spec", io.spec_path, "Graph spec JSON file");
    c.app->add_option("--instance", io.instance, "Catalogue instance instead of a spec file");
    c.app->add_option("--horizon", io.horizon, "Override the horizon of --instance");
  }
  c.app->add_option("--format", io.format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  c.app->add_option("--out", io.out, "Report path ('-' for stdout)")->capture_default_str();
  c.app->add_option("--manifest", io.manifest, "Write a run manifest to this path");
  for (const auto& [key, value] : defaults.items()) {
    const auto flag = "--" + flag_name(key);
    if (value.is_boolean()) {
      c.flags[key] = value.get<bool>();
      c.options[key] =
          c.app->add_flag(flag + ",!--no-" + flag_name(key), c.flags[key])
              ->description("default " + value.dump());
    } else {
      c.options[key] = c.app->add_option(flag, c.text[key])->description("default " +
                                                                         value.dump());
    }
  }
}

Json given_params(const CommandOptions& c) {
  const auto defaults = isocert::cli::default_params(c.command);
  Json out = Json::object();
  for (const auto& [key, option] : c.options) {
    if (option->count() == 0) continue;
    const auto& proto = defaults[key];
    out[key] = proto.is_boolean() ? Json(c.flags.at(key)) : convert(proto, c.text.at(key));
  }
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"isocert: isoperimetry and uncertainty checks on Cayley and Schreier graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", isocert::cli::kToolVersion);
  Output io;

  std::vector<std::unique_ptr<CommandOptions>> commands;
  std::map<std::string, CLI::App*> groups;
  for (const auto& name : isocert::cli::command_names()) {
    auto c = std::make_unique<CommandOptions>();
    c->command = name;
    const auto space = name.find(' ');
    if (space == std::string::npos) {
      add_command(app, name, *c, io);
    } else {
      const auto group = name.substr(0, space);
      if (!groups.count(group)) {
        groups[group] = app.add_subcommand(group, describe(group));
        groups[group]->require_subcommand(1);
      }
      add_command(*groups[group], name.substr(space + 1), *c, io);
    }
    commands.push_back(std::move(c));
  }

  std::string manifest_path;
  std::optional<unsigned> replay_workers;
  auto* replay_cmd = app.add_subcommand("replay", "Re-run a manifest and compare outputs");
  replay_cmd->add_option("manifest", manifest_path)->required();
  replay_cmd->add_option("--workers", replay_workers, "Override the recorded worker count");
  replay_cmd->add_option("--format", io.format)->check(CLI::IsMember({"json", "csv"}));
  replay_cmd->add_option("--out", io.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const auto format = isocert::cli::format_from_name(io.format);
    if (replay_cmd->parsed()) {
      const auto manifest = isocert::cli::read_manifest(manifest_path);
      const auto result = isocert::cli::replay(manifest, replay_workers);
      isocert::cli::emit_report(result.report, format, io.out);
      std::cerr << "replay: output digest " << result.output_digest
                << (result.identical ? " matches" : " differs from " + manifest.output_digest)
                << "\n";
      return result.identical && result.report.pass ? 0 : 1;
    }
    for (const auto& c : commands) {
      if (!c->app->parsed()) continue;
      isocert::cli::Invocation inv;
      inv.command = c->command;
      inv.params = given_params(*c);
      if (isocert::cli::needs_spec(c->command)) {
        if (io.spec_path.empty() == io.instance.empty()) {
          throw isocert::PreconditionError("give exactly one of --spec and --instance");
        }
        if (!io.spec_path.empty() && io.horizon) {
          throw isocert::PreconditionError("--horizon only applies to --instance");
        }
        inv.spec = io.spec_path.empty() ? isocert::cli::catalogue_spec(io.instance, io.horizon)
                                        : isocert::cli::load_spec(io.spec_path);
        for (const auto& w : inv.spec->warnings) std::cerr << "warning: " << w << "\n";
      }
      const auto report = isocert::cli::run_command(inv);
      isocert::cli::emit_report(report, format, io.out);
      if (!io.manifest.empty()) {
        isocert::cli::write_manifest(isocert::cli::make_manifest(inv, report), io.manifest);
      }
      return report.pass ? 0 : 1;
    }
  } catch (const isocert::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
