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
//
// Python bindings for the core operations: loading and synthesizing
// instances, structural validation, the solvers, and the planning helpers.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "submax/bench.hpp"
#include "submax/errors.hpp"
#include "submax/objectives.hpp"
#include "submax/sampling.hpp"
#include "submax/solvers.hpp"

namespace py = pybind11;
using namespace submax;

namespace {

// Oracle handle shared with Python. Instances are immutable once built, so a
// shared_ptr is safe to pass around freely.
struct Instance {
  std::shared_ptr<ValueOracle> oracle;

  ElementId n() const { return oracle->ground().n; }

  double value(const std::vector<ElementId>& ids) const {
    ElementSet s(ids);
    oracle->ground().check_set(s);
    return oracle->value(s);
  }
};

Instance wrap(std::unique_ptr<ValueOracle> oracle) {
  return Instance{std::shared_ptr<ValueOracle>(std::move(oracle))};
}

Mode mode_from(const std::optional<std::string>& name,
               const std::optional<std::size_t>& m) {
  if (!name) return m ? Mode::sampled : Mode::exact;
  if (*name == "exact") return Mode::exact;
  if (*name == "sampled") return Mode::sampled;
  throw InvalidArgumentError("mode must be 'exact' or 'sampled'");
}

py::dict resolved_dict(const ResolvedParams& p) {
  py::dict d;
  d["k"] = p.k;
  d["eps"] = p.eps;
  d["r"] = p.r;
  d["t"] = p.t;
  d["max_blocks"] = p.max_blocks;
  d["epoch_budget"] = p.epoch_budget;
  d["m"] = p.m;
  d["mode"] = p.mode == Mode::sampled ? "sampled" : "exact";
  if (p.round_cap) {
    d["round_cap"] = *p.round_cap;
  } else {
    d["round_cap"] = py::none();
  }
  return d;
}

const char* stop_reason_name(StopReason reason) {
  switch (reason) {
    case StopReason::completed:
      return "completed";
    case StopReason::cardinality_reached:
      return "cardinality_reached";
    case StopReason::round_cap:
      return "round_cap";
    case StopReason::guess_failed:
      return "guess_failed";
  }
  return "unknown";
}

py::dict result_dict(const RunResult& res) {
  py::dict d;
  d["value"] = res.value;
  d["solution"] = res.solution.ids();
  d["rounds"] = res.ledger.rounds();
  d["total_queries"] = res.ledger.total_queries();
  d["truncated"] = res.truncated;
  d["stop_reason"] = stop_reason_name(res.stop_reason);
  d["degraded_to_sampled"] = res.degraded_to_sampled;
  d["warning"] = res.warning;
  d["resolved"] = resolved_dict(res.resolved);
  return d;
}

py::dict solve(const Instance& inst, const std::string& solver, std::size_t k,
               double eps, std::optional<std::size_t> m,
               std::optional<std::string> mode, std::optional<std::size_t> r,
               std::optional<std::size_t> round_cap, std::uint64_t seed,
               double delta, std::optional<std::size_t> epoch_budget,
               py::object v_star) {
  SolverKind kind = solver_kind_from_name(solver);
  SolverConfig cfg;
  cfg.k = k;
  cfg.eps = eps;
  cfg.m = m;
  cfg.mode = mode_from(mode, m);
  cfg.r = r;
  cfg.round_cap = round_cap;
  cfg.seed = seed;
  cfg.delta = delta;
  cfg.epoch_budget = epoch_budget;

  double guess = 0.0;
  bool needs_guess = kind == SolverKind::iterative_filtering ||
                     kind == SolverKind::amortized_filtering ||
                     kind == SolverKind::amortized_filtering_proxy;
  if (needs_guess) {
    if (v_star.is_none()) {
      throw InvalidArgumentError("solver '" + solver +
                                 "' needs v_star: a number or 'opt'");
    }
    if (py::isinstance<py::str>(v_star)) {
      if (v_star.cast<std::string>() != "opt") {
        throw InvalidArgumentError("v_star must be a number or 'opt'");
      }
      guess = brute_force_opt(*inst.oracle, k).second;
    } else {
      guess = v_star.cast<double>();
    }
  }

  RunResult res;
  switch (kind) {
    case SolverKind::greedy:
      res = greedy(*inst.oracle, k);
      break;
    case SolverKind::lazy_greedy:
      res = lazy_greedy(*inst.oracle, k);
      break;
    case SolverKind::random_baseline:
      res = random_baseline(*inst.oracle, k, seed);
      break;
    case SolverKind::iterative_filtering:
      res = iterative_filtering(*inst.oracle, cfg, guess);
      break;
    case SolverKind::amortized_filtering:
      res = amortized_filtering(*inst.oracle, cfg, guess);
      break;
    case SolverKind::amortized_filtering_proxy:
      res = amortized_filtering_proxy(*inst.oracle, cfg, guess);
      break;
    case SolverKind::amortized_filtering_full:
      res = amortized_filtering_full(*inst.oracle, cfg);
      break;
  }
  return result_dict(res);
}

py::dict validate(const Instance& inst, const std::string& mode,
                  std::size_t trials, std::uint64_t seed) {
  ValidateMode vm;
  if (mode == "exhaustive") {
    vm = ValidateMode::exhaustive;
  } else if (mode == "sampled") {
    vm = ValidateMode::sampled;
  } else {
    throw InvalidArgumentError("mode must be 'exhaustive' or 'sampled'");
  }
  ValidationReport report = validate_submodular(*inst.oracle, vm, trials, seed);
  py::dict d;
  d["ok"] = report.ok();
  d["checks"] = report.checks;
  py::list violations;
  for (const Violation& v : report.violations) {
    violations.append(v.describe());
  }
  d["violations"] = violations;
  return d;
}

}  // namespace

PYBIND11_MODULE(_submax, m) {
  m.doc() =
      "Low-adaptivity monotone submodular maximization under a cardinality "
      "constraint";

  py::register_exception<InvalidArgumentError>(m, "InvalidArgumentError",
                                               PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Instance>(m, "Instance")
      .def_property_readonly("n", &Instance::n)
      .def("value", &Instance::value, py::arg("ids"),
           "Evaluate f on a set of element ids.")
      .def("serialize",
           [](const Instance& inst) { return serialize_instance(*inst.oracle); })
      .def("__repr__", [](const Instance& inst) {
        return "<submax.Instance n=" + std::to_string(inst.n()) + ">";
      });

  m.def(
      "load_instance",
      [](const std::string& path) { return wrap(load_instance(path)); },
      py::arg("path"));
  m.def(
      "parse_instance",
      [](const std::string& text) {
        return wrap(parse_instance(text, "<string>"));
      },
      py::arg("text"));
  m.def(
      "synthesize_coverage",
      [](ElementId n, std::int32_t universe, double density,
         double weight_scale, std::uint64_t seed) {
        return wrap(
            synthesize_coverage(n, {universe, density, weight_scale}, seed));
      },
      py::arg("n"), py::arg("universe"), py::arg("density") = 0.1,
      py::arg("weight_scale") = 0.0, py::arg("seed") = 0);
  m.def(
      "synthesize_facility",
      [](ElementId n, std::int32_t clients, std::uint64_t seed) {
        return wrap(synthesize_facility(n, {clients}, seed));
      },
      py::arg("n"), py::arg("clients"), py::arg("seed") = 0);
  m.def(
      "synthesize_concave_modular",
      [](ElementId n, double p, double weight_scale, std::uint64_t seed) {
        return wrap(synthesize_concave_modular(n, {p, weight_scale}, seed));
      },
      py::arg("n"), py::arg("p") = 0.5, py::arg("weight_scale") = 1.0,
      py::arg("seed") = 0);

  m.def("validate", &validate, py::arg("instance"),
        py::arg("mode") = "exhaustive", py::arg("trials") = 200,
        py::arg("seed") = 0,
        "Check monotonicity and diminishing returns; returns a report dict.");

  m.def("solve", &solve, py::arg("instance"), py::arg("solver"), py::arg("k"),
        py::arg("eps") = 0.2, py::arg("m") = py::none(),
        py::arg("mode") = py::none(), py::arg("r") = py::none(),
        py::arg("round_cap") = py::none(), py::arg("seed") = 0,
        py::arg("delta") = 0.05, py::arg("epoch_budget") = py::none(),
        py::arg("v_star") = py::none(),
        "Run a solver and return its result and round ledger as a dict.");

  m.def(
      "brute_force_opt",
      [](const Instance& inst, std::size_t k, std::size_t cap) {
        auto [set, value] = brute_force_opt(*inst.oracle, k, cap);
        return py::make_tuple(set.ids(), value);
      },
      py::arg("instance"), py::arg("k"), py::arg("cap") = 2000000,
      "Exhaustive optimum over k-subsets (verification only).");

  m.def("plan_sample_size", &plan_sample_size, py::arg("opt_bound"),
        py::arg("eps_abs"), py::arg("delta"));

  m.def(
      "build_opt_grid",
      [](double best_singleton, double eps, ElementId n) {
        return build_opt_grid(best_singleton, eps, n).values;
      },
      py::arg("best_singleton"), py::arg("eps"), py::arg("n"),
      "Geometric grid of optimum guesses covering [v, n·v].");
}
