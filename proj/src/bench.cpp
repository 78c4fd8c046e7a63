// Copyright 2026 The Authors.
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

#include "submax/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "submax/errors.hpp"

namespace submax {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& origin, const std::string& msg) {
  throw ParseError(origin + ": " + msg);
}

void check_fields(const Json& obj, const std::string& origin,
                  const std::vector<std::string>& required,
                  const std::vector<std::string>& optional) {
  for (const std::string& key : required) {
    if (!obj.contains(key)) fail(origin, "missing field '" + key + "'");
  }
  for (const auto& [key, unused] : obj.items()) {
    bool known =
        std::find(required.begin(), required.end(), key) != required.end() ||
        std::find(optional.begin(), optional.end(), key) != optional.end();
    if (!known) fail(origin, "unknown field '" + key + "'");
  }
}

std::string get_string(const Json& obj, const std::string& origin,
                       const std::string& key) {
  const Json& v = obj.at(key);
  if (!v.is_string()) fail(origin, "field '" + key + "' must be a string");
  return v.get<std::string>();
}

double get_number(const Json& obj, const std::string& origin,
                  const std::string& key) {
  const Json& v = obj.at(key);
  if (!v.is_number()) fail(origin, "field '" + key + "' must be a number");
  return v.get<double>();
}

std::int64_t get_integer(const Json& obj, const std::string& origin,
                         const std::string& key) {
  const Json& v = obj.at(key);
  if (!v.is_number_integer()) {
    fail(origin, "field '" + key + "' must be an integer");
  }
  return v.get<std::int64_t>();
}

std::size_t get_count(const Json& obj, const std::string& origin,
                      const std::string& key) {
  std::int64_t v = get_integer(obj, origin, key);
  if (v < 0) fail(origin, "field '" + key + "' must be >= 0");
  return static_cast<std::size_t>(v);
}

bool get_bool(const Json& obj, const std::string& origin,
              const std::string& key) {
  const Json& v = obj.at(key);
  if (!v.is_boolean()) fail(origin, "field '" + key + "' must be a boolean");
  return v.get<bool>();
}

std::string mode_name(Mode mode) {
  return mode == Mode::exact ? "exact" : "sampled";
}

Mode mode_from_name(const std::string& name, const std::string& origin) {
  if (name == "exact") return Mode::exact;
  if (name == "sampled") return Mode::sampled;
  fail(origin, "unknown mode '" + name + "' (expected exact or sampled)");
}

std::string block_rule_name(BlockRule rule) {
  return rule == BlockRule::best ? "best" : "uniform";
}

BlockRule block_rule_from_name(const std::string& name,
                               const std::string& origin) {
  if (name == "best") return BlockRule::best;
  if (name == "uniform") return BlockRule::uniform;
  fail(origin, "unknown block_rule '" + name + "' (expected best or uniform)");
}

InstanceSpec parse_instance_spec(const Json& obj, const std::string& origin) {
  if (!obj.is_object()) fail(origin, "instance entry must be an object");
  InstanceSpec spec;
  if (obj.contains("path")) {
    check_fields(obj, origin, {"id", "path"}, {});
    spec.id = get_string(obj, origin, "id");
    spec.path = get_string(obj, origin, "path");
    return spec;
  }
  check_fields(obj, origin, {"id", "kind", "n"},
               {"seed", "universe", "density", "weight_scale", "clients", "p"});
  spec.id = get_string(obj, origin, "id");
  spec.kind = get_string(obj, origin, "kind");
  spec.n = static_cast<ElementId>(get_count(obj, origin, "n"));
  if (obj.contains("seed")) spec.seed = get_count(obj, origin, "seed");
  if (spec.kind == "coverage") {
    check_fields(obj, origin, {"id", "kind", "n"},
                 {"seed", "universe", "density", "weight_scale"});
    if (obj.contains("universe")) {
      spec.coverage.universe =
          static_cast<std::int32_t>(get_count(obj, origin, "universe"));
    } else {
      spec.coverage.universe = spec.n;
    }
    if (obj.contains("density")) {
      spec.coverage.density = get_number(obj, origin, "density");
    }
    if (obj.contains("weight_scale")) {
      spec.coverage.weight_scale = get_number(obj, origin, "weight_scale");
    }
  } else if (spec.kind == "facility") {
    check_fields(obj, origin, {"id", "kind", "n"}, {"seed", "clients"});
    spec.facility.clients =
        obj.contains("clients")
            ? static_cast<std::int32_t>(get_count(obj, origin, "clients"))
            : spec.n;
  } else if (spec.kind == "concave_modular") {
    check_fields(obj, origin, {"id", "kind", "n"},
                 {"seed", "p", "weight_scale"});
    if (obj.contains("p")) spec.concave.p = get_number(obj, origin, "p");
    if (obj.contains("weight_scale")) {
      spec.concave.weight_scale = get_number(obj, origin, "weight_scale");
    }
  } else {
    fail(origin, "unknown instance kind '" + spec.kind + "'");
  }
  return spec;
}

SolverSpec parse_solver_spec(const Json& obj, const std::string& origin) {
  if (!obj.is_object()) fail(origin, "solver entry must be an object");
  check_fields(obj, origin, {"id", "kind", "k"},
               {"eps", "r", "m", "delta", "mode", "block_rule", "round_cap",
                "epoch_budget", "proxy_literal_guard", "enumeration_cap",
                "v_star"});
  SolverSpec spec;
  spec.id = get_string(obj, origin, "id");
  spec.kind = solver_kind_from_name(get_string(obj, origin, "kind"));
  spec.config.k = get_count(obj, origin, "k");
  if (obj.contains("eps")) spec.config.eps = get_number(obj, origin, "eps");
  if (obj.contains("r")) spec.config.r = get_count(obj, origin, "r");
  if (obj.contains("m")) spec.config.m = get_count(obj, origin, "m");
  if (obj.contains("delta")) {
    spec.config.delta = get_number(obj, origin, "delta");
  }
  if (obj.contains("mode")) {
    spec.config.mode = mode_from_name(get_string(obj, origin, "mode"), origin);
  } else if (spec.config.m) {
    spec.config.mode = Mode::sampled;
  }
  if (obj.contains("block_rule")) {
    spec.config.block_rule =
        block_rule_from_name(get_string(obj, origin, "block_rule"), origin);
  }
  if (obj.contains("round_cap")) {
    spec.config.round_cap = get_count(obj, origin, "round_cap");
  }
  if (obj.contains("epoch_budget")) {
    spec.config.epoch_budget = get_count(obj, origin, "epoch_budget");
  }
  if (obj.contains("proxy_literal_guard")) {
    spec.config.proxy_literal_guard =
        get_bool(obj, origin, "proxy_literal_guard");
  }
  if (obj.contains("enumeration_cap")) {
    spec.config.enumeration_cap = get_count(obj, origin, "enumeration_cap");
  }
  if (obj.contains("v_star")) {
    const Json& v = obj.at("v_star");
    if (v.is_string()) {
      if (v.get<std::string>() != "opt") {
        fail(origin, "v_star must be a number or the string \"opt\"");
      }
      spec.v_star_is_opt = true;
    } else if (v.is_number()) {
      spec.v_star = v.get<double>();
    } else {
      fail(origin, "v_star must be a number or the string \"opt\"");
    }
  }
  return spec;
}

std::unique_ptr<ValueOracle> materialize(const InstanceSpec& spec) {
  if (!spec.path.empty()) return load_instance(spec.path);
  if (spec.kind == "coverage") {
    return synthesize_coverage(spec.n, spec.coverage, spec.seed);
  }
  if (spec.kind == "facility") {
    return synthesize_facility(spec.n, spec.facility, spec.seed);
  }
  if (spec.kind == "concave_modular") {
    return synthesize_concave_modular(spec.n, spec.concave, spec.seed);
  }
  throw InvalidArgumentError("instance '" + spec.id + "': unknown kind '" +
                             spec.kind + "'");
}

bool solver_uses_guess(SolverKind kind) {
  switch (kind) {
    case SolverKind::iterative_filtering:
    case SolverKind::amortized_filtering:
    case SolverKind::amortized_filtering_proxy:
      return true;
    default:
      return false;
  }
}

bool solver_uses_eps(SolverKind kind) {
  return solver_uses_guess(kind) || kind == SolverKind::amortized_filtering_full;
}

void check_run_invariants(const ValueOracle& oracle, const RunResult& res,
                          std::size_t k, const std::string& label) {
  auto violated = [&](const std::string& what) {
    throw InvariantViolation(label + ": " + what);
  };
  if (!res.ledger.consistent()) violated("ledger query totals disagree");
  if (res.solution.size() > k) violated("solution exceeds cardinality bound");
  oracle.ground().check_set(res.solution);
  if (res.ledger.round_cap() &&
      res.ledger.rounds() > *res.ledger.round_cap()) {
    violated("ledger exceeded its round cap");
  }
  if (res.truncated && res.stop_reason != StopReason::round_cap) {
    violated("truncated run must stop on the round cap");
  }
  double audit = oracle.value(res.solution);
  if (std::abs(audit - res.value) > 1e-9 * std::max(1.0, std::abs(audit))) {
    violated("reported value disagrees with a fresh oracle query");
  }
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

Json resolved_to_json(const ResolvedParams& p) {
  Json j = Json::object();
  j["k"] = p.k;
  j["eps"] = p.eps;
  j["r"] = p.r;
  j["t"] = p.t;
  j["max_blocks"] = p.max_blocks;
  j["epoch_budget"] = p.epoch_budget;
  j["m"] = p.m;
  j["mode"] = mode_name(p.mode);
  j["block_rule"] = block_rule_name(p.block_rule);
  if (p.round_cap) {
    j["round_cap"] = *p.round_cap;
  } else {
    j["round_cap"] = nullptr;
  }
  j["delta"] = p.delta;
  j["seed"] = p.seed;
  j["proxy_literal_guard"] = p.proxy_literal_guard;
  j["enumeration_cap"] = p.enumeration_cap;
  j["shrink_log_bound"] = p.shrink_log_bound;
  return j;
}

ResolvedParams resolved_from_json(const Json& j, const std::string& origin) {
  ResolvedParams p;
  p.k = get_count(j, origin, "k");
  p.eps = get_number(j, origin, "eps");
  p.r = get_count(j, origin, "r");
  p.t = get_count(j, origin, "t");
  p.max_blocks = get_count(j, origin, "max_blocks");
  p.epoch_budget = get_count(j, origin, "epoch_budget");
  p.m = get_count(j, origin, "m");
  p.mode = mode_from_name(get_string(j, origin, "mode"), origin);
  p.block_rule = block_rule_from_name(get_string(j, origin, "block_rule"), origin);
  if (!j.at("round_cap").is_null()) {
    p.round_cap = get_count(j, origin, "round_cap");
  }
  p.delta = get_number(j, origin, "delta");
  p.seed = get_count(j, origin, "seed");
  p.proxy_literal_guard = get_bool(j, origin, "proxy_literal_guard");
  p.enumeration_cap = get_count(j, origin, "enumeration_cap");
  p.shrink_log_bound = get_count(j, origin, "shrink_log_bound");
  return p;
}

}  // namespace

std::string solver_kind_name(SolverKind kind) {
  switch (kind) {
    case SolverKind::greedy:
      return "greedy";
    case SolverKind::lazy_greedy:
      return "lazy_greedy";
    case SolverKind::random_baseline:
      return "random_baseline";
    case SolverKind::iterative_filtering:
      return "iterative_filtering";
    case SolverKind::amortized_filtering:
      return "amortized_filtering";
    case SolverKind::amortized_filtering_proxy:
      return "amortized_filtering_proxy";
    case SolverKind::amortized_filtering_full:
      return "amortized_filtering_full";
  }
  throw InvalidArgumentError("solver_kind_name: unknown kind");
}

SolverKind solver_kind_from_name(const std::string& name) {
  if (name == "greedy") return SolverKind::greedy;
  if (name == "lazy_greedy") return SolverKind::lazy_greedy;
  if (name == "random_baseline") return SolverKind::random_baseline;
  if (name == "iterative_filtering") return SolverKind::iterative_filtering;
  if (name == "amortized_filtering") return SolverKind::amortized_filtering;
  if (name == "amortized_filtering_proxy") {
    return SolverKind::amortized_filtering_proxy;
  }
  if (name == "amortized_filtering_full") {
    return SolverKind::amortized_filtering_full;
  }
  throw InvalidArgumentError("unknown solver kind '" + name + "'");
}

ExperimentConfig load_experiment_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgumentError("cannot open config file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  Json root;
  try {
    root = Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    fail(path, e.what());
  }
  if (!root.is_object()) fail(path, "top level must be an object");
  check_fields(root, path, {"instances", "solvers", "seeds"},
               {"output", "format", "verify", "keep_going", "omit_wall_time"});

  ExperimentConfig config;
  const Json& instances = root.at("instances");
  if (!instances.is_array() || instances.empty()) {
    fail(path, "'instances' must be a non-empty array");
  }
  std::filesystem::path config_dir = std::filesystem::path(path).parent_path();
  for (std::size_t i = 0; i < instances.size(); ++i) {
    InstanceSpec spec = parse_instance_spec(
        instances[i], path + ": instances[" + std::to_string(i) + "]");
    // File-backed instances resolve relative to the config file, so a config
    // works no matter where the process was started.
    if (!spec.path.empty() && std::filesystem::path(spec.path).is_relative()) {
      spec.path = (config_dir / spec.path).string();
    }
    config.instances.push_back(std::move(spec));
  }
  const Json& solvers = root.at("solvers");
  if (!solvers.is_array() || solvers.empty()) {
    fail(path, "'solvers' must be a non-empty array");
  }
  for (std::size_t i = 0; i < solvers.size(); ++i) {
    config.solvers.push_back(parse_solver_spec(
        solvers[i], path + ": solvers[" + std::to_string(i) + "]"));
  }
  const Json& seeds = root.at("seeds");
  if (!seeds.is_array() || seeds.empty()) {
    fail(path, "'seeds' must be a non-empty array");
  }
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    if (!seeds[i].is_number_integer() || seeds[i].get<std::int64_t>() < 0) {
      fail(path, "'seeds' entries must be non-negative integers");
    }
    config.seeds.push_back(seeds[i].get<std::uint64_t>());
  }
  if (root.contains("output")) config.output = get_string(root, path, "output");
  if (root.contains("format")) {
    config.format = get_string(root, path, "format");
    if (config.format != "csv" && config.format != "json") {
      fail(path, "format must be csv or json");
    }
  }
  if (root.contains("verify")) {
    const Json& verify = root.at("verify");
    if (!verify.is_object()) fail(path, "'verify' must be an object");
    check_fields(verify, path + ": verify", {},
                 {"brute_force", "brute_force_cap", "exhaustive_submodularity"});
    if (verify.contains("brute_force")) {
      config.verify.brute_force = get_bool(verify, path, "brute_force");
    }
    if (verify.contains("brute_force_cap")) {
      config.verify.brute_force_cap = get_count(verify, path, "brute_force_cap");
    }
    if (verify.contains("exhaustive_submodularity")) {
      config.verify.exhaustive_submodularity =
          get_bool(verify, path, "exhaustive_submodularity");
    }
  }
  if (root.contains("keep_going")) {
    config.keep_going = get_bool(root, path, "keep_going");
  }
  if (root.contains("omit_wall_time")) {
    config.omit_wall_time = get_bool(root, path, "omit_wall_time");
  }
  return config;
}

std::vector<ReportRow> run_experiment(const ExperimentConfig& config) {
  // Duplicate ids would make rows ambiguous and the sort unstable.
  {
    std::vector<std::string> ids;
    for (const auto& spec : config.instances) ids.push_back(spec.id);
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
      throw InvalidArgumentError("duplicate instance id in experiment config");
    }
    ids.clear();
    for (const auto& spec : config.solvers) ids.push_back(spec.id);
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
      throw InvalidArgumentError("duplicate solver id in experiment config");
    }
  }

  std::vector<ReportRow> rows;
  for (const InstanceSpec& ispec : config.instances) {
    std::unique_ptr<ValueOracle> oracle = materialize(ispec);
    const ElementId n = oracle->ground().n;

    if (config.verify.exhaustive_submodularity) {
      ValidationReport report =
          validate_submodular(*oracle, ValidateMode::exhaustive);
      if (!report.ok()) {
        std::string msg = "instance '" + ispec.id +
                          "' failed the structural check: " +
                          report.violations.front().describe();
        if (!config.keep_going) throw InvariantViolation(msg);
        std::cerr << "warning: " << msg << "\n";
      }
    }

    // One brute-force pass per distinct k on this instance.
    std::map<std::size_t, double> opt_by_k;
    if (config.verify.brute_force) {
      for (const SolverSpec& sspec : config.solvers) {
        if (!opt_by_k.count(sspec.config.k)) {
          opt_by_k[sspec.config.k] =
              brute_force_opt(*oracle, sspec.config.k,
                              config.verify.brute_force_cap)
                  .second;
        }
      }
    }

    for (const SolverSpec& sspec : config.solvers) {
      double v_star = 0.0;
      if (solver_uses_guess(sspec.kind)) {
        if (sspec.v_star_is_opt) {
          if (!config.verify.brute_force) {
            throw InvalidArgumentError(
                "solver '" + sspec.id +
                "' asks for v_star = opt but verify.brute_force is off");
          }
          v_star = opt_by_k.at(sspec.config.k);
        } else if (sspec.v_star) {
          v_star = *sspec.v_star;
        } else {
          throw InvalidArgumentError("solver '" + sspec.id +
                                     "' needs a v_star guess");
        }
      }

      for (std::uint64_t seed : config.seeds) {
        SolverConfig run_cfg = sspec.config;
        run_cfg.seed = seed;
        std::string label =
            ispec.id + "/" + sspec.id + "/seed=" + std::to_string(seed);

        auto start = std::chrono::steady_clock::now();
        RunResult res;
        switch (sspec.kind) {
          case SolverKind::greedy:
            res = greedy(*oracle, run_cfg.k);
            break;
          case SolverKind::lazy_greedy:
            res = lazy_greedy(*oracle, run_cfg.k);
            break;
          case SolverKind::random_baseline:
            res = random_baseline(*oracle, run_cfg.k, seed);
            break;
          case SolverKind::iterative_filtering:
            res = iterative_filtering(*oracle, run_cfg, v_star);
            break;
          case SolverKind::amortized_filtering:
            res = amortized_filtering(*oracle, run_cfg, v_star);
            break;
          case SolverKind::amortized_filtering_proxy:
            res = amortized_filtering_proxy(*oracle, run_cfg, v_star);
            break;
          case SolverKind::amortized_filtering_full:
            res = amortized_filtering_full(*oracle, run_cfg);
            break;
        }
        auto elapsed = std::chrono::steady_clock::now() - start;

        try {
          check_run_invariants(*oracle, res, run_cfg.k, label);
        } catch (const InvariantViolation& e) {
          if (!config.keep_going) throw;
          std::cerr << "warning: " << e.what() << "\n";
        }

        ReportRow row;
        row.instance_id = ispec.id;
        row.solver_id = sspec.id;
        row.seed = seed;
        row.n = n;
        row.k = run_cfg.k;
        row.eps = solver_uses_eps(sspec.kind) ? res.resolved.eps : 0.0;
        row.m = solver_uses_eps(sspec.kind) ? res.resolved.m : 0;
        row.value = res.value;
        if (config.verify.brute_force) {
          double opt = opt_by_k.at(run_cfg.k);
          row.opt = opt;
          row.ratio = opt > 0.0 ? res.value / opt : 1.0;
          if (*row.ratio > 1.0 + 1e-9) {
            std::string msg =
                label + ": value exceeds the brute-force optimum";
            if (!config.keep_going) throw InvariantViolation(msg);
            std::cerr << "warning: " << msg << "\n";
          }
        }
        row.rounds = res.ledger.rounds();
        row.total_queries = res.ledger.total_queries();
        row.truncated = res.truncated;
        row.wall_ms =
            config.omit_wall_time
                ? 0.0
                : std::chrono::duration<double, std::milli>(elapsed).count();
        row.resolved = res.resolved;
        rows.push_back(std::move(row));
      }
    }
  }

  std::sort(rows.begin(), rows.end(),
            [](const ReportRow& a, const ReportRow& b) {
              if (a.instance_id != b.instance_id) {
                return a.instance_id < b.instance_id;
              }
              if (a.solver_id != b.solver_id) return a.solver_id < b.solver_id;
              return a.seed < b.seed;
            });
  return rows;
}

std::string report_to_csv(const std::vector<ReportRow>& rows) {
  std::string out =
      "instance,solver,seed,n,k,eps,m,value,opt,ratio,rounds,total_queries,"
      "truncated,wall_ms\n";
  for (const ReportRow& row : rows) {
    out += row.instance_id;
    out += ',';
    out += row.solver_id;
    out += ',';
    out += std::to_string(row.seed);
    out += ',';
    out += std::to_string(row.n);
    out += ',';
    out += std::to_string(row.k);
    out += ',';
    out += format_double(row.eps);
    out += ',';
    out += std::to_string(row.m);
    out += ',';
    out += format_double(row.value);
    out += ',';
    if (row.opt) out += format_double(*row.opt);
    out += ',';
    if (row.ratio) out += format_double(*row.ratio);
    out += ',';
    out += std::to_string(row.rounds);
    out += ',';
    out += std::to_string(row.total_queries);
    out += ',';
    out += row.truncated ? '1' : '0';
    out += ',';
    out += format_double(row.wall_ms);
    out += '\n';
  }
  return out;
}

std::string report_to_json(const std::vector<ReportRow>& rows) {
  Json arr = Json::array();
  for (const ReportRow& row : rows) {
    Json j = Json::object();
    j["instance"] = row.instance_id;
    j["solver"] = row.solver_id;
    j["seed"] = row.seed;
    j["n"] = row.n;
    j["k"] = row.k;
    j["eps"] = row.eps;
    j["m"] = row.m;
    j["value"] = row.value;
    if (row.opt) {
      j["opt"] = *row.opt;
    } else {
      j["opt"] = nullptr;
    }
    if (row.ratio) {
      j["ratio"] = *row.ratio;
    } else {
      j["ratio"] = nullptr;
    }
    j["rounds"] = row.rounds;
    j["total_queries"] = row.total_queries;
    j["truncated"] = row.truncated;
    j["wall_ms"] = row.wall_ms;
    j["resolved"] = resolved_to_json(row.resolved);
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

std::vector<ReportRow> report_from_json(const std::string& text) {
  const std::string origin = "report";
  Json arr;
  try {
    arr = Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(origin, e.what());
  }
  if (!arr.is_array()) fail(origin, "top level must be an array");
  std::vector<ReportRow> rows;
  for (const Json& j : arr) {
    if (!j.is_object()) fail(origin, "rows must be objects");
    ReportRow row;
    row.instance_id = get_string(j, origin, "instance");
    row.solver_id = get_string(j, origin, "solver");
    row.seed = get_count(j, origin, "seed");
    row.n = static_cast<ElementId>(get_count(j, origin, "n"));
    row.k = get_count(j, origin, "k");
    row.eps = get_number(j, origin, "eps");
    row.m = get_count(j, origin, "m");
    row.value = get_number(j, origin, "value");
    if (!j.at("opt").is_null()) row.opt = get_number(j, origin, "opt");
    if (!j.at("ratio").is_null()) row.ratio = get_number(j, origin, "ratio");
    row.rounds = get_count(j, origin, "rounds");
    row.total_queries = get_count(j, origin, "total_queries");
    row.truncated = get_bool(j, origin, "truncated");
    row.wall_ms = get_number(j, origin, "wall_ms");
    row.resolved = resolved_from_json(j.at("resolved"), origin);
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_report(const std::vector<ReportRow>& rows,
                  const ExperimentConfig& config,
                  const std::string& path_override) {
  std::string path = path_override.empty() ? config.output : path_override;
  if (path.empty()) {
    throw InvalidArgumentError("write_report: no output path configured");
  }
  std::string text =
      config.format == "json" ? report_to_json(rows) : report_to_csv(rows);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InvalidArgumentError("cannot open report file " + path);
  out << text;
  if (!out) throw InvalidArgumentError("failed writing report file " + path);
}

}  // namespace submax
