// Copyright 2026 The sylvtypes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sylvtypes/errors.hpp"
#include "sylvtypes/model_formulas.hpp"
#include "sylvtypes/model_spec.hpp"
#include "sylvtypes/monte_carlo.hpp"
#include "sylvtypes/quadrature.hpp"
#include "sylvtypes/verification.hpp"

namespace sylvtypes::cli {
namespace {

using Json = nlohmann::ordered_json;
using Cell = std::variant<std::string, double, long long, bool>;

constexpr const char* kSchemaVersion = "1";

enum class Format { json, csv };

struct Table {
  std::string kind;
  Json meta = Json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string csv_cell(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::string>) {
          if (v.find_first_of(",\"\n") == std::string::npos) return v;
          std::string quoted = "\"";
          for (char c : v) {
            if (c == '"') quoted += '"';
            quoted += c;
          }
          return quoted + "\"";
        } else if constexpr (std::is_same_v<T, double>) {
          return fmt::format("{:.17g}", v);
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else {
          return std::to_string(v);
        }
      },
      cell);
}

Json json_cell(const Cell& cell) {
  return std::visit([](const auto& v) { return Json(v); }, cell);
}

void render(const Table& table, Format format, std::ostream& os) {
  if (format == Format::csv) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
      os << (i ? "," : "") << table.columns[i];
    }
    os << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
      os << '\n';
    }
    return;
  }
  Json doc = Json::object();
  doc["schema"] = "sylvtypes." + table.kind + "/" + kSchemaVersion;
  for (const auto& [key, value] : table.meta.items()) doc[key] = value;
  Json rows = Json::array();
  for (const auto& row : table.rows) {
    Json obj = Json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[table.columns[i]] = json_cell(row[i]);
    rows.push_back(std::move(obj));
  }
  doc["rows"] = std::move(rows);
  os << doc.dump(2) << '\n';
}

// Settings shared by the subcommands; filled by CLI11.
struct Settings {
  std::string model;
  int d = 3;
  std::optional<double> beta;
  std::string increments = "gaussian";
  int n = 4;
  std::optional<int> k;
  double samples = 1e5;
  std::uint64_t seed = 1;
  double tol = 0.0;
  std::string format = "csv";
  std::string out;
  int workers = 1;
  std::string suite = "all";
  std::vector<double> ts{1.0};
  int d_min = 10;
  int d_step = 10;
  double z = mc::kZ99;
  bool uniform = false;
  double clt_tolerance = formulas::CltConfig{}.tolerance;
};

Format parse_format(const std::string& name) {
  return name == "json" ? Format::json : Format::csv;
}

ModelSpec build_spec(const Settings& s) {
  const auto kind = parse_model_kind(s.model);
  if (!kind) throw DomainError("unknown model '" + s.model + "'");
  ModelSpec spec = ModelSpec::of(*kind, s.d);
  if (*kind == ModelKind::beta) spec.beta = s.beta.value_or(0.0);
  if (*kind == ModelKind::beta_prime) {
    if (!s.beta) throw DomainError("beta-prime model needs --beta");
    spec.beta = *s.beta;
  }
  const auto law = parse_increment_law(s.increments);
  if (!law) throw DomainError("unknown increment law '" + s.increments + "'");
  spec.increments = *law;
  validate(spec);
  return spec;
}

long sample_count(double samples) {
  if (!(samples >= 1.0) || samples > 1e12 || samples != std::floor(samples)) {
    throw DomainError("--samples must be a positive integer");
  }
  return static_cast<long>(samples);
}

Json model_meta(const ModelSpec& spec) {
  Json meta = Json::object();
  meta["model"] = to_string(spec.kind);
  meta["d"] = spec.d;
  if (spec.kind == ModelKind::beta || spec.kind == ModelKind::beta_prime) meta["beta"] = spec.beta;
  meta["setting"] = types::to_string(setting_of(spec.kind));
  return meta;
}

Table cmd_compute(const Settings& s) {
  const ModelSpec spec = build_spec(s);
  Table table;
  table.kind = "compute";
  table.meta = model_meta(spec);
  table.columns = {"m", "probability", "eta", "facets"};
  const bool exact = is_exact(spec.kind);
  table.meta["exact"] = exact;
  auto add_row = [&](int m, Cell probability) {
    table.rows.push_back({static_cast<long long>(m), std::move(probability),
                          static_cast<long long>(types::eta(spec.d, m)),
                          static_cast<long long>(types::facet_count(spec.d, m))});
  };
  if (exact) {
    const auto dist = formulas::exact_type_probs(spec);
    for (int m = dist.first(); m <= dist.last(); ++m) add_row(m, to_string(dist.at(m)));
  } else {
    const double tol = s.tol > 0.0 ? s.tol : formulas::default_tolerance(spec.d);
    table.meta["tolerance"] = tol;
    const auto dist = formulas::type_probs(spec, tol);
    for (int m = dist.first(); m <= dist.last(); ++m) add_row(m, dist.at(m));
  }
  return table;
}

Table cmd_youden(const Settings& s) {
  if (s.n < 2) throw DomainError("--n must be at least 2");
  Table table;
  table.kind = "youden";
  const double tol = s.tol > 0.0 ? s.tol : 1e-11;
  table.meta["n"] = s.n;
  table.meta["tolerance"] = tol;
  table.columns = {"k", "probability"};
  const int lo = s.k.value_or(0);
  const int hi = s.k.value_or(s.n);
  if (lo < 0 || hi > s.n) throw DomainError("--k must lie in [0, n]");
  for (int k = lo; k <= hi; ++k) {
    table.rows.push_back({static_cast<long long>(k), formulas::youden(s.n, k, tol)});
  }
  return table;
}

Table cmd_mc(const Settings& s, bool& healthy) {
  const ModelSpec spec = build_spec(s);
  mc::McOptions options;
  options.samples = sample_count(s.samples);
  options.seed = s.seed;
  options.workers = s.workers;
  options.z = s.z;
  const auto report = mc::estimate(spec, options);
  const auto target = formulas::type_probs(spec, s.tol);
  healthy = report.healthy;

  Table table;
  table.kind = "mc";
  table.meta = model_meta(spec);
  table.meta["samples"] = report.samples;
  table.meta["seed"] = report.seed;
  table.meta["workers"] = report.workers;
  table.meta["z"] = report.z;
  table.meta["degenerate"] = report.degenerate;
  table.meta["healthy"] = report.healthy;
  table.columns = {"m", "count", "estimate", "lo", "hi", "target", "covered"};
  for (std::size_t i = 0; i < report.counts.size(); ++i) {
    const int m = report.first_type + static_cast<int>(i);
    const auto& iv = report.intervals[i];
    const double t = target.at(m);
    table.rows.push_back({static_cast<long long>(m), static_cast<long long>(report.counts[i]),
                          report.estimates[i], iv.lo, iv.hi, t, iv.contains(t)});
  }
  return table;
}

Table cmd_clt(const Settings& s) {
  const auto kind = parse_model_kind(s.model);
  if (!kind) throw DomainError("unknown model '" + s.model + "'");
  if (!is_exact(*kind)) throw DomainError("clt supports conv-rw, wendel, pos-walk, pos-bridge");
  if (s.d_min < 2 || s.d < s.d_min || s.d_step < 1) {
    throw DomainError("need 2 <= --d-min <= --d and --d-step >= 1");
  }
  std::vector<int> dims;
  for (int d = s.d_min; d <= s.d; d += s.d_step) dims.push_back(d);
  if (dims.back() != s.d) dims.push_back(s.d);
  const auto rows = formulas::clt_profile(*kind, dims, s.ts);

  Table table;
  table.kind = "clt";
  table.meta["model"] = to_string(*kind);
  table.meta["tolerance"] = s.clt_tolerance;
  bool within = true;
  for (const auto& row : rows) {
    if (row.d == s.d) within = within && row.gap < s.clt_tolerance;
  }
  table.meta["top_within_tolerance"] = within;
  table.columns = {"d", "t", "cumulative", "limit", "gap"};
  for (const auto& row : rows) {
    table.rows.push_back({static_cast<long long>(row.d), row.t, row.cumulative, row.limit, row.gap});
  }
  return table;
}

Table cmd_verify(const Settings& s, bool& passed) {
  verify::VerifyOptions options;
  options.samples = sample_count(s.samples);
  options.seed = s.seed;
  options.workers = s.workers;
  std::vector<std::string> suites;
  if (s.suite == "all") {
    suites = verify::suite_names();
  } else {
    suites = {s.suite};
  }
  Table table;
  table.kind = "verify";
  table.meta["suites"] = suites;
  table.columns = {"suite", "name", "passed", "detail"};
  passed = true;
  for (const auto& suite : suites) {
    for (const auto& check : verify::run_suite(suite, options)) {
      passed = passed && check.passed;
      table.rows.push_back({check.suite, check.name, check.passed, check.detail});
    }
  }
  table.meta["passed"] = passed;
  return table;
}

void add_model_options(CLI::App* cmd, Settings& s) {
  std::vector<std::string> models;
  for (auto kind : {ModelKind::gaussian, ModelKind::beta, ModelKind::beta_prime, ModelKind::sphere,
                    ModelKind::conv_rw, ModelKind::wendel, ModelKind::pos_walk,
                    ModelKind::pos_bridge, ModelKind::half_sphere}) {
    models.push_back(to_string(kind));
  }
  cmd->add_option("--model", s.model, "Random model")
      ->required()
      ->check(CLI::IsMember(models))
      ->envname("SYLVTYPES_MODEL");
  cmd->add_option("--d", s.d, "Dimension")->envname("SYLVTYPES_D");
  cmd->add_option("--beta", s.beta, "Shape parameter of beta and beta-prime models")
      ->envname("SYLVTYPES_BETA");
  cmd->add_option("--increments", s.increments, "Step law of walk models")
      ->check(CLI::IsMember({"gaussian", "cauchy", "uniform-cube"}))
      ->envname("SYLVTYPES_INCREMENTS");
}

void add_output_options(CLI::App* cmd, Settings& s) {
  cmd->add_option("--format", s.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->envname("SYLVTYPES_FORMAT");
  cmd->add_option("--out", s.out, "Output file (default stdout)")->envname("SYLVTYPES_OUT");
}

void add_tol_option(CLI::App* cmd, Settings& s) {
  cmd->add_option("--tol", s.tol, "Absolute quadrature tolerance (0 = default)")
      ->envname("SYLVTYPES_TOL");
}

void add_sampling_options(CLI::App* cmd, Settings& s) {
  cmd->add_option("--samples", s.samples, "Number of Monte-Carlo draws")
      ->envname("SYLVTYPES_SAMPLES");
  cmd->add_option("--seed", s.seed, "Random seed")->envname("SYLVTYPES_SEED");
  cmd->add_option("--workers", s.workers, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->envname("SYLVTYPES_WORKERS");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Combinatorial types of d+2 random points"};
  app.name("sylvtypes");
  app.set_config("--config", "", "TOML or INI file with option defaults");
  app.require_subcommand(1);
  app.fallthrough();

  auto* compute = app.add_subcommand("compute", "Type probabilities of a model");
  add_model_options(compute, s);
  add_tol_option(compute, s);
  add_output_options(compute, s);

  auto* verify_cmd = app.add_subcommand("verify", "Run a self-check suite");
  verify_cmd->add_option("--suite", s.suite, "identities, quadrature, pipeline, mc or all")
      ->check(CLI::IsMember({"all", "identities", "quadrature", "pipeline", "mc"}));
  add_sampling_options(verify_cmd, s);
  add_output_options(verify_cmd, s);

  auto* youden_cmd = app.add_subcommand("youden", "Position of the mean among Gaussian order statistics");
  youden_cmd->add_option("--n", s.n, "Sample size")->envname("SYLVTYPES_N");
  youden_cmd->add_option("--k", s.k, "Single k (default: all)")->envname("SYLVTYPES_K");
  add_tol_option(youden_cmd, s);
  add_output_options(youden_cmd, s);

  auto* mc_cmd = app.add_subcommand("mc", "Monte-Carlo estimate of the type law");
  add_model_options(mc_cmd, s);
  add_sampling_options(mc_cmd, s);
  add_tol_option(mc_cmd, s);
  mc_cmd->add_option("--z", s.z, "Interval half-width in standard deviations");
  add_output_options(mc_cmd, s);

  auto* clt_cmd = app.add_subcommand("clt", "Cumulative type probabilities against the normal limit");
  clt_cmd->add_option("--model", s.model, "conv-rw, wendel, pos-walk or pos-bridge")
      ->required()
      ->envname("SYLVTYPES_MODEL");
  clt_cmd->add_option("--d", s.d, "Largest dimension")->envname("SYLVTYPES_D");
  clt_cmd->add_option("--d-min", s.d_min, "Smallest dimension");
  clt_cmd->add_option("--d-step", s.d_step, "Dimension step");
  clt_cmd->add_option("--t", s.ts, "Threshold parameters")->expected(1, -1);
  clt_cmd->add_option("--clt-tolerance", s.clt_tolerance, "Accepted gap at the largest d");
  add_output_options(clt_cmd, s);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Table table;
    int code = kExitOk;
    if (compute->parsed()) {
      table = cmd_compute(s);
    } else if (youden_cmd->parsed()) {
      table = cmd_youden(s);
    } else if (mc_cmd->parsed()) {
      bool healthy = true;
      table = cmd_mc(s, healthy);
      if (!healthy) {
        err << "warning: degenerate-draw fraction above threshold\n";
        code = kExitCheckFailed;
      }
    } else if (clt_cmd->parsed()) {
      table = cmd_clt(s);
    } else {
      bool passed = true;
      table = cmd_verify(s, passed);
      if (!passed) code = kExitCheckFailed;
    }
    const Format format = parse_format(s.format);
    if (s.out.empty()) {
      render(table, format, out);
    } else {
      std::ofstream file(s.out, std::ios::binary);
      if (!file) {
        err << "error: cannot open " << s.out << " for writing\n";
        return kExitUsage;
      }
      render(table, format, file);
    }
    return code;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const quadrature::QuadratureError& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const InconsistentInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
}

}  // namespace sylvtypes::cli
