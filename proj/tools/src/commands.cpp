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

#include "isocert/cli/commands.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <ctime>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <variant>

#include "isocert/calculus.hpp"
#include "isocert/catalogue.hpp"
#include "isocert/cli/corpus.hpp"
#include "isocert/cli/field_io.hpp"
#include "isocert/errors.hpp"
#include "isocert/finite_group.hpp"
#include "isocert/growth.hpp"
#include "isocert/isoperimetry.hpp"
#include "isocert/parallel.hpp"
#include "isocert/random.hpp"
#include "isocert/uncertainty.hpp"

namespace isocert::cli {
namespace {

// ---- parameters -------------------------------------------------------------

Json field_source_defaults() {
  return {{"field", ""}, {"count", 100}, {"support", 0}, {"lo", -5},
          {"hi", 5},     {"seed", 0},    {"mode", "exact"}};
}

Json merge(Json a, const Json& b) {
  for (const auto& [k, v] : b.items()) a[k] = v;
  return a;
}

const std::map<std::string, Json>& defaults_table() {
  static const std::map<std::string, Json> table = [] {
    const Json base = {{"max_vertices", 5'000'000}, {"workers", 1}};
    std::map<std::string, Json> t;
    t["build"] = merge(base, {{"vertices", false}});
    t["growth"] = merge(base, {{"regime", "auto"}});
    t["isoperimetry exact"] =
        merge(base, {{"kmax", 5}, {"regime", "auto"}, {"work_cap", 100'000'000}});
    t["isoperimetry heuristic"] =
        merge(base, {{"kmax", 5}, {"ks", Json::array()}, {"regime", "auto"},
                     {"budget", 50'000}, {"seed", 0}, {"restarts", 1}});
    t["constants"] =
        merge(base, {{"kmax", 5}, {"regime", "auto"}, {"work_cap", 100'000'000},
                     {"anneal_budget", 50'000}, {"restarts", 8}, {"steps", 200},
                     {"seed", 0}, {"p", 1.0}, {"alpha", 1.0}});
    t["verify coarea"] = merge(base, field_source_defaults());
    t["verify hpw"] = merge(merge(base, field_source_defaults()),
                            {{"regime", "auto"}, {"p", 1.0}, {"alpha", 1.0},
                             {"weight", "canonical"}, {"center", 0},
                             {"points", Json::array()}, {"k", 0}, {"weight_file", ""},
                             {"links", true}});
    t["verify faris"] = merge(merge(base, field_source_defaults()),
                              {{"regime", "auto"}, {"radius", 0}, {"set", Json::array()},
                               {"constant", ""}});
    t["verify poincare"] = merge(merge(base, field_source_defaults()), {{"p", 1.0}});
    t["verify double-counting"] =
        merge(base, {{"a", Json::array()}, {"b", Json::array()}, {"exhaustive", false},
                     {"max_order", 10}});
    t["verify translation"] =
        merge(merge(base, field_source_defaults()), {{"x", Json::array()}});
    t["corpus"] = {{"instances", Json::array()},
                   {"p", Json::array({1.0, 2.0, 3.0})},
                   {"alpha", Json::array({0.5, 1.0, 2.0})},
                   {"weights", Json::array({"canonical", "two-point"})},
                   {"fields", 500},
                   {"seed", 0},
                   {"links", true},
                   {"workers", 1}};
    return t;
  }();
  return table;
}

template <class T>
T get(const Json& params, const char* key) {
  return params.at(key).get<T>();
}

unsigned workers_of(const Json& params) {
  const auto w = get<long long>(params, "workers");
  if (w < 1 || w > 256) throw PreconditionError("--workers must be in [1, 256]");
  return static_cast<unsigned>(w);
}

std::string cell(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }
std::string cell(double x) { return Json(x).dump(); }
std::string cell(bool b) { return b ? "true" : "false"; }

// ---- common pieces ------------------------------------------------------------

struct Context {
  const Invocation& inv;
  const Json& params;
  Space space;
  ExploredBall ball;
  GrowthTable table;

  explicit Context(const Invocation& i)
      : inv(i),
        params(i.params),
        space(i.spec->spec),
        ball(build_ball(space, i.spec->horizon,
                        {static_cast<std::size_t>(get<long long>(i.params, "max_vertices"))})),
        table(growth_table(ball)) {}

  Regime regime() const {
    const auto name = params.contains("regime") ? get<std::string>(params, "regime") : "auto";
    if (name == "auto") return ball.complete ? Regime::Compact : Regime::Infinite;
    if (name == "infinite") return Regime::Infinite;
    if (name == "compact") return Regime::Compact;
    throw PreconditionError("--regime must be auto, infinite or compact");
  }
};

Json header(const Invocation& inv) {
  Json doc;
  doc["command"] = inv.command;
  doc["tool_version"] = kToolVersion;
  doc["spec_digest"] = inv.spec ? Json(inv.spec->digest) : Json(nullptr);
  doc["params"] = inv.params;
  return doc;
}

Json witness_json(const std::vector<VertexId>& w) { return Json(w); }

Json trace_json(const ConstantTrace& t) {
  return {{"p", t.params.p},
          {"alpha", t.params.alpha},
          {"setting", std::string(regime_name(t.params.setting))},
          {"weak_isoperimetric", t.weak_isoperimetric},
          {"decoupled", t.decoupled},
          {"faris", t.faris},
          {"leibniz", t.leibniz},
          {"poincare", t.poincare},
          {"three_term", t.three_term},
          {"additive_gradient", t.additive_gradient},
          {"additive_weight", t.additive_weight},
          {"ceiling", t.ceiling},
          {"balance", t.balance},
          {"theta", t.theta},
          {"value", t.value}};
}

// One input field with its provenance.
struct InputField {
  ScalarField field;
  std::optional<std::uint64_t> seed;  // absent for file input
  std::string digest;
};

std::vector<InputField> input_fields(const Context& ctx, bool zero_sum,
                                     const std::vector<VertexId>& pool = {}) {
  const auto& p = ctx.params;
  std::vector<InputField> out;
  const auto path = get<std::string>(p, "field");
  if (!path.empty()) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot open field file '" + path + "'");
    Json doc;
    try {
      doc = Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw SpecError("field file '" + path + "': " + e.what());
    }
    auto f = field_from_json(doc, ctx.ball.size());
    out.push_back({f, std::nullopt, digest(field_to_json(f).dump())});
    return out;
  }
  const auto mode_name = get<std::string>(p, "mode");
  if (mode_name != "exact" && mode_name != "floating") {
    throw PreconditionError("--mode must be exact or floating");
  }
  const auto count = get<long long>(p, "count");
  if (count < 0) throw PreconditionError("--count must be >= 0");
  const auto support = get<long long>(p, "support");
  const auto candidates = pool.empty() ? ctx.ball.interior_count() : pool.size();
  if (candidates == 0) throw PreconditionError("no vertex can carry field values");
  const auto master = get<std::uint64_t>(p, "seed");
  for (long long i = 0; static_cast<long long>(out.size()) < count; ++i) {
    const auto s = derive_seed(master, static_cast<std::uint64_t>(i));
    RandomFieldOptions o;
    o.pool = pool;
    o.support_size = support > 0 ? static_cast<std::size_t>(support)
                                 : 1 + s % std::min<std::size_t>(candidates, 8);
    o.lo = get<long long>(p, "lo");
    o.hi = get<long long>(p, "hi");
    o.mode = mode_name == "exact" ? FieldMode::Exact : FieldMode::Floating;
    o.seed = s;
    o.zero_sum = zero_sum;
    auto f = random_field(ctx.ball, o);
    const bool zero = std::visit([](const auto& g) { return g.is_zero(); }, f);
    if (zero) {
      if (i > 100 * (count + 1)) throw PreconditionError("random fields keep vanishing");
      continue;
    }
    const auto d = digest(field_to_json(f).dump());
    out.push_back({std::move(f), s, d});
  }
  return out;
}

Json seed_json(const InputField& f) { return f.seed ? Json(*f.seed) : Json(nullptr); }

const ExactField& require_exact(const InputField& f, const char* what) {
  if (!std::holds_alternative<ExactField>(f.field)) {
    throw ModeError(std::string(what) + " is an exact identity; floating fields are not accepted");
  }
  return std::get<ExactField>(f.field);
}

RealField real_of(const ScalarField& f) {
  if (const auto* e = std::get_if<ExactField>(&f)) return to_real(*e);
  return std::get<RealField>(f);
}

Element parse_element(const Json& j, const char* what) {
  if (!j.is_array()) throw SpecError(std::string(what) + ": expected an element array");
  Element e;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw SpecError(std::string(what) + ": expected integers");
    e.push_back(x.get<std::int64_t>());
  }
  return e;
}

// ---- commands -------------------------------------------------------------------

Report cmd_build(const Invocation& inv) {
  Context ctx(inv);
  const auto& ball = ctx.ball;
  Report r;
  r.document = header(inv);
  const auto diagnostics = validate_ball(ball);
  Json diag = Json::array();
  for (const auto& d : diagnostics) {
    diag.push_back({{"kind", std::string(diagnostic_name(d.kind))},
                    {"vertex", d.vertex},
                    {"message", d.message}});
  }
  r.document["vertices"] = ball.size();
  r.document["interior"] = ball.interior_count();
  r.document["complete"] = ball.complete;
  r.document["degree"] = ball.degree;
  r.document["horizon"] = ball.horizon;
  r.document["max_distance"] = ball.max_distance();
  r.document["generators"] = ctx.space.generators();
  r.document["diagnostics"] = diag;
  r.table.headers = {"index", "vertex", "distance", "interior"};
  Json list = Json::array();
  for (VertexId v = 0; v < ball.size(); ++v) {
    r.table.rows.push_back({std::to_string(v), format_element(ball.vertices[v]),
                            std::to_string(ball.dist[v]), cell(ball.is_interior(v))});
    if (get<bool>(inv.params, "vertices")) {
      list.push_back({{"index", v},
                      {"vertex", ball.vertices[v]},
                      {"distance", ball.dist[v]},
                      {"interior", ball.is_interior(v)}});
    }
  }
  if (get<bool>(inv.params, "vertices")) r.document["vertex_list"] = list;
  r.pass = diagnostics.empty();
  r.document["pass"] = r.pass;
  return r;
}

Report cmd_growth(const Invocation& inv) {
  Context ctx(inv);
  const auto& t = ctx.table;
  const auto regime = ctx.regime();
  Report r;
  r.document = header(inv);
  r.document["horizon"] = t.horizon;
  r.document["degree"] = t.degree;
  r.document["complete"] = t.complete;
  r.document["diameter"] = t.diameter ? Json(*t.diameter) : Json(nullptr);
  r.document["total"] = t.total ? Json(*t.total) : Json(nullptr);
  r.document["closed_ball"] = t.closed_ball;
  r.document["gamma"] = t.gamma;
  const auto violations = superadditivity_report(t, regime);
  Json v = Json::array();
  for (const auto& x : violations) {
    v.push_back({{"r", x.r}, {"s", x.s}, {"lhs", x.lhs}, {"rhs", x.rhs}});
  }
  r.document["superadditivity"] = {{"regime", std::string(regime_name(regime))},
                                   {"violations", v}};
  if (t.complete) {
    const auto q = quarter_volume_diagnostic(t);
    r.document["quarter_volume"] = {{"radius", q.radius},
                                    {"applicable", q.applicable},
                                    {"gamma", q.gamma},
                                    {"total", q.total},
                                    {"holds", q.holds}};
  }
  r.table.headers = {"r", "gamma"};
  for (std::size_t i = 0; i < t.gamma.size(); ++i) {
    r.table.rows.push_back({std::to_string(i + 1), std::to_string(t.gamma[i])});
  }
  r.pass = violations.empty();
  r.document["pass"] = r.pass;
  return r;
}

Json estimate_json(const IsoConstantEstimate& c) {
  return {{"value", to_string(c.value)}, {"value_double", to_double(c.value)},
          {"k", c.k},                    {"radius", c.radius},
          {"perimeter", c.perimeter},    {"witness", witness_json(c.witness)},
          {"exact", c.exact},            {"convention", std::string(regime_name(c.convention))}};
}

Report profile_report(const Invocation& inv, const Context& ctx, const IsoProfile& profile) {
  Report r;
  r.document = header(inv);
  r.document["convention"] = std::string(regime_name(profile.convention));
  Json entries = Json::array();
  r.table.headers = {"k", "perimeter", "exact", "witness"};
  for (const auto& e : profile.entries) {
    entries.push_back({{"k", e.k},
                       {"perimeter", e.perimeter},
                       {"exact", e.exact},
                       {"witness", witness_json(e.witness)}});
    r.table.rows.push_back({std::to_string(e.k), std::to_string(e.perimeter), cell(e.exact),
                            join_indices(witness_json(e.witness))});
  }
  r.document["profile"] = entries;
  try {
    r.document["constant"] = estimate_json(isoperimetric_constant(profile, ctx.table,
                                                                  profile.convention));
  } catch (const PreconditionError& e) {
    r.document["constant"] = nullptr;
    r.document["constant_note"] = e.what();
  }
  r.document["pass"] = true;
  return r;
}

Report cmd_iso_exact(const Invocation& inv) {
  Context ctx(inv);
  EnumerationOptions o;
  o.work_cap = get<std::uint64_t>(inv.params, "work_cap");
  o.workers = workers_of(inv.params);
  const auto profile = exact_profile(ctx.ball, get<std::size_t>(inv.params, "kmax"),
                                     ctx.regime(), o);
  return profile_report(inv, ctx, profile);
}

Report cmd_iso_heuristic(const Invocation& inv) {
  Context ctx(inv);
  const auto regime = ctx.regime();
  auto ks = get<std::vector<std::size_t>>(inv.params, "ks");
  if (ks.empty()) {
    auto kmax = get<std::size_t>(inv.params, "kmax");
    if (regime == Regime::Compact) kmax = std::min(kmax, ctx.ball.size() / 2);
    for (std::size_t k = 1; k <= kmax; ++k) ks.push_back(k);
  }
  AnnealingOptions o;
  o.budget = get<std::uint64_t>(inv.params, "budget");
  o.seed = get<std::uint64_t>(inv.params, "seed");
  o.restarts = get<unsigned>(inv.params, "restarts");
  o.workers = workers_of(inv.params);
  return profile_report(inv, ctx, heuristic_profile(ctx.ball, ks, regime, o));
}

Report cmd_constants(const Invocation& inv) {
  Context ctx(inv);
  const auto regime = ctx.regime();
  const auto& p = inv.params;
  ConstantsOptions o;
  o.kmax = get<std::size_t>(p, "kmax");
  o.work_cap = get<std::uint64_t>(p, "work_cap");
  o.anneal_budget = get<std::uint64_t>(p, "anneal_budget");
  o.dm.restarts = get<unsigned>(p, "restarts");
  o.dm.steps = get<unsigned>(p, "steps");
  o.dm.seed = get<std::uint64_t>(p, "seed");
  o.dm.workers = workers_of(p);
  const auto rep = constants_relation_report(ctx.ball, ctx.table, regime, o);
  UncertaintyParams up{get<double>(p, "p"), get<double>(p, "alpha"), regime};
  up.validate();

  Report r;
  r.document = header(inv);
  r.document["convention"] = std::string(regime_name(rep.convention));
  r.document["c"] = estimate_json(rep.c);
  r.document["d"] = {{"ratio", rep.d.ratio},
                     {"restart", rep.d.restart},
                     {"witness", field_to_json(rep.d.witness)},
                     {"history", rep.d.history}};
  r.document["ratio"] = rep.ratio;
  r.document["certified"] = trace_json(certified_constant(up));
  r.document["pass"] = true;
  r.table.headers = {"convention", "c", "c_exact", "c_k", "c_witness", "d", "ratio"};
  r.table.rows.push_back({std::string(regime_name(rep.convention)), to_string(rep.c.value),
                          cell(rep.c.exact), std::to_string(rep.c.k),
                          join_indices(witness_json(rep.c.witness)), cell(rep.d.ratio),
                          cell(rep.ratio)});
  return r;
}

// Runs `check` per field on the worker pool; each call returns the row JSON and
// the CSV cells. Results land in per-field slots, so order is fixed.
struct Row {
  Json json;
  std::vector<std::string> cells;
  bool pass = true;
};

Report field_checks(const Invocation& inv, const std::vector<InputField>& fields,
                    std::vector<std::string> headers,
                    const std::function<std::vector<Row>(const InputField&, std::size_t)>& check) {
  std::vector<std::vector<Row>> slots(fields.size());
  parallel_for(fields.size(), workers_of(inv.params),
               [&](std::size_t i) { slots[i] = check(fields[i], i); });
  Report r;
  r.document = header(inv);
  r.table.headers = std::move(headers);
  Json checks = Json::array();
  std::size_t failures = 0, total = 0;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    for (auto& row : slots[i]) {
      ++total;
      if (!row.pass) {
        ++failures;
        row.json["field_values"] = field_to_json(fields[i].field);
      }
      checks.push_back(std::move(row.json));
      r.table.rows.push_back(std::move(row.cells));
    }
  }
  r.pass = failures == 0;
  r.document["checks"] = checks;
  r.document["summary"] = {{"checks", total}, {"failures", failures}, {"pass", r.pass}};
  r.document["pass"] = r.pass;
  return r;
}

Report cmd_verify_coarea(const Invocation& inv) {
  Context ctx(inv);
  const auto fields = input_fields(ctx, false);
  for (const auto& f : fields) require_exact(f, "coarea");
  return field_checks(
      inv, fields, {"field", "seed", "inputs_digest", "gradient_l1", "residual", "pass"},
      [&](const InputField& in, std::size_t i) {
        const auto& f = std::get<ExactField>(in.field);
        ExactField a(f.size());
        for (VertexId v = 0; v < f.size(); ++v) a[v] = abs(f[v]);
        const auto grad = l1_norm(gradient_modulus(ctx.ball, a));
        const auto residual = coarea_residual(ctx.ball, f);
        Row row;
        row.pass = residual == 0;
        row.json = {{"field", i},
                    {"seed", seed_json(in)},
                    {"inputs_digest", in.digest},
                    {"lhs", to_string(grad + residual)},
                    {"bound", to_string(grad)},
                    {"residual", to_string(residual)},
                    {"pass", row.pass}};
        row.cells = {std::to_string(i), cell(seed_json(in)), in.digest, to_string(grad),
                     to_string(residual), cell(row.pass)};
        return std::vector<Row>{row};
      });
}

Weight weight_for(const Context& ctx) {
  const auto& p = ctx.params;
  const auto kind = get<std::string>(p, "weight");
  if (kind == "canonical") {
    const auto c = get<long long>(p, "center");
    if (c < 0 || static_cast<std::size_t>(c) >= ctx.ball.size()) {
      throw PreconditionError("--center is not a vertex index of the ball");
    }
    return make_weight(ctx.ball, CanonicalWeight{static_cast<VertexId>(c)});
  }
  if (kind == "multipoint") {
    auto points = get<std::vector<VertexId>>(p, "points");
    if (points.empty()) points = default_two_points(ctx.ball);
    for (auto v : points) {
      if (v >= ctx.ball.size()) throw PreconditionError("--points has an index outside the ball");
    }
    auto k = get<int>(p, "k");
    if (k == 0) k = static_cast<int>(points.size());
    return make_weight(ctx.ball, MultipointWeight{k, points});
  }
  if (kind == "file") {
    const auto path = get<std::string>(p, "weight_file");
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot open weight file '" + path + "'");
    return weight_from_json(Json::parse(in), ctx.ball.size());
  }
  throw PreconditionError("--weight must be canonical, multipoint or file");
}

Report cmd_verify_hpw(const Invocation& inv) {
  Context ctx(inv);
  const auto regime = ctx.regime();
  UncertaintyParams up{get<double>(inv.params, "p"), get<double>(inv.params, "alpha"), regime};
  up.validate();
  const auto trace = certified_constant(up);
  const auto w = weight_for(ctx);
  const auto adm = weight_admissibility(ctx.ball, w, ctx.table);
  if (!adm.ok()) {
    const auto& v = adm.violations.front();
    throw PreconditionError("weight is not admissible: |{w <= " + std::to_string(v.r) +
                            "}| = " + std::to_string(v.count) + " > Gamma(" +
                            std::to_string(v.r) + ") = " + std::to_string(v.gamma));
  }
  std::vector<VertexId> pool;
  for (auto v : ctx.ball.interior_vertices()) {
    if (w.is_exact(v)) pool.push_back(v);
  }
  const auto fields = input_fields(ctx, regime == Regime::Compact, pool);
  const bool links = get<bool>(inv.params, "links");
  const int rmax = regime == Regime::Compact ? *ctx.table.diameter + 1 : ctx.ball.horizon;
  auto report = field_checks(
      inv, fields,
      {"field", "seed", "inputs_digest", "ratio", "constant", "links_checked", "link_failures",
       "pass"},
      [&](const InputField& in, std::size_t i) {
        Row row;
        const double ratio = hpw_ratio(ctx.ball, in.field, w, ctx.table, up);
        std::size_t checked = 0, failed = 0;
        Json link_rows = Json::array();
        if (links) {
          const auto real = real_of(in.field);
          for (int rr = 1; rr <= rmax; ++rr) {
            const auto link = additive_link_check(ctx.ball, real, w, trace, rr);
            ++checked;
            failed += !link.pass;
            link_rows.push_back(
                {{"r", rr}, {"lhs", link.lhs}, {"bound", link.bound}, {"pass", link.pass}});
          }
        }
        row.pass = ratio <= trace.value && failed == 0;
        row.json = {{"field", i},         {"seed", seed_json(in)}, {"inputs_digest", in.digest},
                    {"lhs", ratio},       {"bound", trace.value},  {"links", link_rows},
                    {"pass", row.pass}};
        row.cells = {std::to_string(i),       cell(seed_json(in)),    in.digest,
                     cell(ratio),             cell(trace.value),      std::to_string(checked),
                     std::to_string(failed),  cell(row.pass)};
        return std::vector<Row>{row};
      });
  report.document["constant_trace"] = trace_json(trace);
  report.document["admissibility"] = {{"checked_up_to", adm.checked_up_to},
                                      {"certified_up_to", adm.certified_up_to},
                                      {"partial", adm.partial},
                                      {"equality_everywhere", adm.equality_everywhere}};
  return report;
}

Report cmd_verify_faris(const Invocation& inv) {
  Context ctx(inv);
  const auto regime = ctx.regime();
  const auto& p = inv.params;
  const auto text = get<std::string>(p, "constant");
  const Rational constant =
      text.empty() ? Rational(static_cast<long long>(
                         certified_constant({1.0, 1.0, regime}).faris))
                   : parse_rational(text);
  const auto radius = get<int>(p, "radius");
  const auto set = get<std::vector<VertexId>>(p, "set");
  if (!set.empty() && radius < 1) throw PreconditionError("--set needs an explicit --radius");
  for (auto v : set) {
    if (v >= ctx.ball.size()) throw PreconditionError("--set has an index outside the ball");
  }
  std::vector<int> radii;
  if (radius > 0) {
    radii.push_back(radius);
  } else {
    const int rmax = regime == Regime::Compact ? *ctx.table.diameter + 1 : ctx.ball.horizon;
    for (int r = 1; r <= rmax; ++r) radii.push_back(r);
  }
  const auto fields = input_fields(ctx, false);
  auto report = field_checks(
      inv, fields, {"field", "seed", "inputs_digest", "radius", "lhs", "bound", "pass"},
      [&](const InputField& in, std::size_t i) {
        std::vector<Row> rows;
        for (int r : radii) {
          std::vector<VertexId> e = set;
          if (e.empty()) {
            for (VertexId v = 0; v < ctx.ball.size(); ++v) {
              if (ctx.ball.dist[v] < r) e.push_back(v);
            }
          }
          Row row;
          Json lhs, bound;
          if (const auto* f = std::get_if<ExactField>(&in.field)) {
            const auto c = faris_check(ctx.ball, *f, e, r, constant, ctx.table, regime);
            row.pass = c.pass;
            lhs = to_string(c.lhs);
            bound = to_string(c.bound);
          } else {
            const auto c = faris_check(ctx.ball, std::get<RealField>(in.field), e, r,
                                       to_double(constant), ctx.table, regime);
            row.pass = c.pass;
            lhs = c.lhs;
            bound = c.bound;
          }
          row.json = {{"field", i},  {"seed", seed_json(in)}, {"inputs_digest", in.digest},
                      {"radius", r}, {"lhs", lhs},            {"bound", bound},
                      {"pass", row.pass}};
          row.cells = {std::to_string(i), cell(seed_json(in)), in.digest, std::to_string(r),
                       cell(lhs),         cell(bound),         cell(row.pass)};
          rows.push_back(std::move(row));
        }
        return rows;
      });
  report.document["constant"] = to_string(constant);
  return report;
}

Report cmd_verify_poincare(const Invocation& inv) {
  Context ctx(inv);
  if (!ctx.ball.complete) throw PreconditionError("poincare needs a complete finite graph");
  const double p = get<double>(inv.params, "p");
  const auto trace = certified_constant({p, 1.0, Regime::Compact});
  const auto fields = input_fields(ctx, true);
  auto report = field_checks(
      inv, fields,
      {"field", "seed", "inputs_digest", "ratio", "constant", "median_ok", "markov_ok", "pass"},
      [&](const InputField& in, std::size_t i) {
        Row row;
        const double ratio = std::visit(
            [&](const auto& f) { return poincare_ratio(ctx.ball, f, ctx.table, p); }, in.field);
        const bool median_ok = std::visit(
            [&](const auto& f) { return median_counts(f, median(ctx.ball, f)).holds(); },
            in.field);
        Json markov = nullptr;
        bool markov_ok = true;
        if (const auto* f = std::get_if<ExactField>(&in.field)) {
          const auto m = markov_check(ctx.ball, *f);
          markov_ok = m.pass;
          markov = {{"lhs", to_string(m.lhs)}, {"bound", to_string(m.bound)}, {"pass", m.pass}};
        }
        row.pass = ratio <= trace.poincare && median_ok && markov_ok;
        row.json = {{"field", i},          {"seed", seed_json(in)},
                    {"inputs_digest", in.digest},
                    {"lhs", ratio},        {"bound", trace.poincare},
                    {"median_ok", median_ok}, {"markov", markov},
                    {"pass", row.pass}};
        row.cells = {std::to_string(i), cell(seed_json(in)), in.digest,   cell(ratio),
                     cell(trace.poincare), cell(median_ok),  cell(markov_ok), cell(row.pass)};
        return std::vector<Row>{row};
      });
  report.document["constant_trace"] = trace_json(trace);
  return report;
}

Report cmd_verify_double_counting(const Invocation& inv) {
  Context ctx(inv);
  const auto group = FiniteGroup::enumerate(ctx.space);
  const auto n = group.order();
  Report r;
  r.document = header(inv);
  r.table.headers = {"a", "b", "average", "threshold", "pass"};
  auto row_of = [&](const std::vector<FiniteGroup::Index>& a,
                    const std::vector<FiniteGroup::Index>& b, const DoubleCountingCheck& c) {
    Json ja = Json::array(), jb = Json::array();
    for (auto x : a) ja.push_back(group.element(x));
    for (auto x : b) jb.push_back(group.element(x));
    r.table.rows.push_back({ja.dump(), jb.dump(), to_string(c.average), to_string(c.threshold),
                            cell(c.pass)});
    return Json{{"a", ja},
                {"b", jb},
                {"lhs", to_string(c.average)},
                {"bound", to_string(c.threshold)},
                {"pass", c.pass}};
  };
  Json checks = Json::array();
  std::uint64_t pairs = 0, failures = 0;
  if (get<bool>(inv.params, "exhaustive")) {
    const auto max_order = get<std::size_t>(inv.params, "max_order");
    if (n > max_order || n > 20) {
      throw ResourceError("exhaustive double counting over a group of order " +
                          std::to_string(n) + " exceeds --max-order");
    }
    std::vector<FiniteGroup::Index> a, b;
    for (std::uint64_t ma = 1; ma < (std::uint64_t{1} << n); ++ma) {
      a.clear();
      for (std::size_t i = 0; i < n; ++i) {
        if (ma >> i & 1) a.push_back(static_cast<FiniteGroup::Index>(i));
      }
      for (std::uint64_t mb = 1; mb < (std::uint64_t{1} << n); ++mb) {
        if (static_cast<std::size_t>(std::popcount(mb)) < 2 * a.size()) continue;
        b.clear();
        for (std::size_t i = 0; i < n; ++i) {
          if (mb >> i & 1) b.push_back(static_cast<FiniteGroup::Index>(i));
        }
        const auto c = double_counting_check(group, a, b);
        ++pairs;
        if (!c.pass) {
          ++failures;
          checks.push_back(row_of(a, b, c));
        }
      }
    }
  } else {
    std::vector<FiniteGroup::Index> a, b;
    for (const auto& e : inv.params.at("a")) a.push_back(group.index_of(parse_element(e, "--a")));
    for (const auto& e : inv.params.at("b")) b.push_back(group.index_of(parse_element(e, "--b")));
    const auto c = double_counting_check(group, a, b);
    ++pairs;
    failures += !c.pass;
    checks.push_back(row_of(a, b, c));
  }
  r.pass = failures == 0;
  r.document["group_order"] = n;
  r.document["checks"] = checks;
  r.document["summary"] = {{"checks", pairs}, {"failures", failures}, {"pass", r.pass}};
  r.document["pass"] = r.pass;
  return r;
}

Report cmd_verify_translation(const Invocation& inv) {
  Context ctx(inv);
  const auto group = FiniteGroup::enumerate(ctx.space);
  std::vector<Element> xs;
  if (inv.params.at("x").empty()) {
    xs = group.elements();
  } else {
    xs.push_back(parse_element(inv.params.at("x"), "--x"));
  }
  const auto fields = input_fields(ctx, false);
  for (const auto& f : fields) require_exact(f, "translation");
  return field_checks(
      inv, fields, {"field", "seed", "inputs_digest", "x", "distance", "lhs", "bound", "pass"},
      [&](const InputField& in, std::size_t i) {
        const auto& f = std::get<ExactField>(in.field);
        std::vector<Row> rows;
        for (const auto& x : xs) {
          const auto c = translation_gradient_check(ctx.space, ctx.ball, group, f, x);
          Row row;
          row.pass = c.pass;
          row.json = {{"field", i},
                      {"seed", seed_json(in)},
                      {"inputs_digest", in.digest},
                      {"x", x},
                      {"distance", c.distance},
                      {"stabilizer", c.stabilizer},
                      {"lhs", to_string(c.lhs)},
                      {"bound", to_string(c.bound)},
                      {"pass", c.pass}};
          row.cells = {std::to_string(i),        cell(seed_json(in)), in.digest,
                       format_element(x),        std::to_string(c.distance),
                       to_string(c.lhs),         to_string(c.bound), cell(c.pass)};
          rows.push_back(std::move(row));
        }
        return rows;
      });
}

Report cmd_corpus(const Invocation& inv) {
  const auto& p = inv.params;
  CorpusOptions o;
  o.instances = get<std::vector<std::string>>(p, "instances");
  o.ps = get<std::vector<double>>(p, "p");
  o.alphas = get<std::vector<double>>(p, "alpha");
  o.weights = get<std::vector<std::string>>(p, "weights");
  o.fields = get<std::size_t>(p, "fields");
  o.seed = get<std::uint64_t>(p, "seed");
  o.links = get<bool>(p, "links");
  o.workers = workers_of(p);
  for (double x : o.ps) UncertaintyParams{x, 1.0}.validate();
  for (double a : o.alphas) UncertaintyParams{1.0, a}.validate();
  const auto rows = run_corpus(o);

  Report r;
  r.document = header(inv);
  r.table.headers = {"instance",     "regime",         "weight",        "p",
                     "alpha",        "admissible",     "fields",        "constant",
                     "max_ratio",    "ratio_failures", "links_checked", "link_failures",
                     "max_link_ratio", "note"};
  Json list = Json::array();
  for (const auto& row : rows) {
    r.pass = r.pass && row.pass();
    list.push_back({{"instance", row.instance},
                    {"regime", std::string(regime_name(row.regime))},
                    {"weight", row.weight},
                    {"p", row.p},
                    {"alpha", row.alpha},
                    {"admissible", row.admissible},
                    {"fields", row.fields},
                    {"constant", row.constant},
                    {"max_ratio", row.max_ratio},
                    {"worst_field", row.worst_field},
                    {"ratio_failures", row.ratio_failures},
                    {"links_checked", row.links_checked},
                    {"link_failures", row.link_failures},
                    {"max_link_ratio", row.max_link_ratio},
                    {"note", row.note},
                    {"pass", row.pass()}});
    r.table.rows.push_back({row.instance, std::string(regime_name(row.regime)), row.weight,
                            cell(row.p), cell(row.alpha), cell(row.admissible),
                            std::to_string(row.fields), cell(row.constant), cell(row.max_ratio),
                            std::to_string(row.ratio_failures),
                            std::to_string(row.links_checked),
                            std::to_string(row.link_failures), cell(row.max_link_ratio),
                            row.note});
  }
  r.document["rows"] = list;
  r.document["pass"] = r.pass;
  return r;
}

using Handler = Report (*)(const Invocation&);

const std::vector<std::pair<std::string, Handler>>& handlers() {
  static const std::vector<std::pair<std::string, Handler>> list = {
      {"build", cmd_build},
      {"growth", cmd_growth},
      {"isoperimetry exact", cmd_iso_exact},
      {"isoperimetry heuristic", cmd_iso_heuristic},
      {"constants", cmd_constants},
      {"verify coarea", cmd_verify_coarea},
      {"verify hpw", cmd_verify_hpw},
      {"verify faris", cmd_verify_faris},
      {"verify poincare", cmd_verify_poincare},
      {"verify double-counting", cmd_verify_double_counting},
      {"verify translation", cmd_verify_translation},
      {"corpus", cmd_corpus},
  };
  return list;
}

std::string utc_now() {
  const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : handlers()) out.push_back(name);
    return out;
  }();
  return names;
}

Json default_params(const std::string& command) {
  const auto& t = defaults_table();
  const auto it = t.find(command);
  if (it == t.end()) throw PreconditionError("unknown command '" + command + "'");
  return it->second;
}

bool needs_spec(const std::string& command) { return command != "corpus"; }

Json resolve_params(const std::string& command, const Json& given) {
  auto params = default_params(command);
  if (!given.is_object()) throw PreconditionError("params must be a JSON object");
  for (const auto& [key, value] : given.items()) {
    if (!params.contains(key)) {
      throw PreconditionError("command '" + command + "' has no parameter '" + key + "'");
    }
    params[key] = value;
  }
  return params;
}

Report run_command(const Invocation& invocation) {
  for (const auto& [name, fn] : handlers()) {
    if (name != invocation.command) continue;
    if (needs_spec(name) && !invocation.spec) {
      throw PreconditionError("command '" + name + "' needs a graph spec");
    }
    Invocation resolved = invocation;
    resolved.params = resolve_params(name, invocation.params);
    try {
      return fn(resolved);
    } catch (const Json::exception& e) {
      // Wrongly typed parameter values surface here.
      throw PreconditionError(std::string("bad parameter value: ") + e.what());
    }
  }
  throw PreconditionError("unknown command '" + invocation.command + "'");
}

LoadedSpec catalogue_spec(const std::string& name, std::optional<int> horizon) {
  const auto inst = catalogue_instance(name);
  return parse_spec(spec_to_json(inst.spec, horizon.value_or(inst.horizon)));
}

RunManifest make_manifest(const Invocation& invocation, const Report& report) {
  RunManifest m;
  m.command = invocation.command;
  m.params = resolve_params(invocation.command, invocation.params);
  if (invocation.spec) {
    m.spec = invocation.spec->canonical;
    m.spec_digest = invocation.spec->digest;
  }
  if (m.params.contains("seed")) m.seeds.push_back(m.params["seed"].get<std::uint64_t>());
  m.timestamp = utc_now();
  m.output_digest = digest(render(report, Format::Json));
  return m;
}

Json manifest_to_json(const RunManifest& m) {
  return {{"tool", "isocert"},
          {"tool_version", m.tool_version},
          {"command", m.command},
          {"params", m.params},
          {"spec", m.spec},
          {"spec_digest", m.spec_digest},
          {"seeds", m.seeds},
          {"timestamp", m.timestamp},
          {"output_digest", m.output_digest}};
}

RunManifest manifest_from_json(const Json& doc) {
  if (!doc.is_object() || doc.value("tool", "") != "isocert") {
    throw SpecError("manifest: not an isocert run manifest");
  }
  RunManifest m;
  try {
    m.tool_version = doc.at("tool_version").get<std::string>();
    m.command = doc.at("command").get<std::string>();
    m.params = doc.at("params");
    m.spec = doc.at("spec");
    m.spec_digest = doc.at("spec_digest").get<std::string>();
    m.seeds = doc.at("seeds").get<std::vector<std::uint64_t>>();
    m.timestamp = doc.at("timestamp").get<std::string>();
    m.output_digest = doc.at("output_digest").get<std::string>();
  } catch (const Json::exception& e) {
    throw SpecError(std::string("manifest: ") + e.what());
  }
  return m;
}

RunManifest read_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open manifest '" + path + "'");
  try {
    return manifest_from_json(Json::parse(in));
  } catch (const Json::parse_error& e) {
    throw SpecError("manifest '" + path + "': " + e.what());
  }
}

void write_manifest(const RunManifest& manifest, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write manifest to '" + path + "'");
  out << manifest_to_json(manifest).dump(2) << "\n";
  if (!out.flush()) throw Error("cannot write manifest to '" + path + "'");
}

ReplayResult replay(const RunManifest& manifest, std::optional<unsigned> workers) {
  Invocation inv;
  inv.command = manifest.command;
  inv.params = manifest.params;
  if (workers) inv.params["workers"] = *workers;
  if (!manifest.spec.is_null()) {
    inv.spec = parse_spec(manifest.spec);
    if (inv.spec->digest != manifest.spec_digest) {
      throw SpecError("manifest spec does not match its digest " + manifest.spec_digest);
    }
  }
  ReplayResult out;
  out.report = run_command(inv);
  // The worker count is echoed in the params block; compare the rest.
  auto normalized = out.report;
  normalized.document["params"]["workers"] = manifest.params.value("workers", 1);
  out.output_digest = digest(render(normalized, Format::Json));
  out.identical = out.output_digest == manifest.output_digest;
  return out;
}

}  // namespace isocert::cli
