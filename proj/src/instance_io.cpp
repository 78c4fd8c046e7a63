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
// Instance file IO. One JSON document per file, field order fixed on output.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "submax/errors.hpp"
#include "submax/objectives.hpp"

namespace submax {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& origin, const std::string& msg) {
  throw ParseError(origin + ": " + msg);
}

void check_fields(const Json& doc, const std::string& origin,
                  const std::vector<std::string>& required,
                  const std::vector<std::string>& optional) {
  for (const auto& name : required) {
    if (!doc.contains(name)) fail(origin, "missing field '" + name + "'");
  }
  for (const auto& item : doc.items()) {
    const std::string& key = item.key();
    bool known = std::find(required.begin(), required.end(), key) !=
                     required.end() ||
                 std::find(optional.begin(), optional.end(), key) !=
                     optional.end();
    if (!known) fail(origin, "unknown field '" + key + "'");
  }
}

std::int32_t get_count(const Json& doc, const std::string& origin,
                       const std::string& name) {
  const Json& v = doc.at(name);
  if (!v.is_number_integer()) fail(origin, "field '" + name + "' must be an integer");
  auto raw = v.get<std::int64_t>();
  if (raw < 0 || raw > std::numeric_limits<std::int32_t>::max()) {
    fail(origin, "field '" + name + "' out of range");
  }
  return static_cast<std::int32_t>(raw);
}

std::vector<double> get_doubles(const Json& v, const std::string& origin,
                                const std::string& name) {
  if (!v.is_array()) fail(origin, "field '" + name + "' must be an array");
  std::vector<double> out;
  out.reserve(v.size());
  for (const Json& x : v) {
    if (!x.is_number()) {
      fail(origin, "field '" + name + "' must contain only numbers");
    }
    out.push_back(x.get<double>());
  }
  return out;
}

std::unique_ptr<ValueOracle> parse_coverage(const Json& doc,
                                            const std::string& origin) {
  check_fields(doc, origin, {"kind", "n", "universe", "cover"}, {"weights"});
  std::int32_t n = get_count(doc, origin, "n");
  std::int32_t universe = get_count(doc, origin, "universe");
  const Json& cover_json = doc.at("cover");
  if (!cover_json.is_array()) fail(origin, "field 'cover' must be an array");
  std::vector<std::vector<std::int32_t>> cover;
  cover.reserve(cover_json.size());
  for (std::size_t i = 0; i < cover_json.size(); ++i) {
    const Json& row = cover_json[i];
    if (!row.is_array()) {
      fail(origin, "cover[" + std::to_string(i) + "] must be an array");
    }
    std::vector<std::int32_t> adj;
    adj.reserve(row.size());
    for (const Json& x : row) {
      if (!x.is_number_integer()) {
        fail(origin, "cover[" + std::to_string(i) +
                         "] must contain only integer item ids");
      }
      adj.push_back(x.get<std::int32_t>());
    }
    cover.push_back(std::move(adj));
  }
  std::vector<double> weights;
  if (doc.contains("weights")) {
    weights = get_doubles(doc.at("weights"), origin, "weights");
  }
  return std::make_unique<CoverageInstance>(n, universe, std::move(cover),
                                            std::move(weights));
}

std::unique_ptr<ValueOracle> parse_facility(const Json& doc,
                                            const std::string& origin) {
  check_fields(doc, origin, {"kind", "n", "clients", "affinity"}, {});
  std::int32_t n = get_count(doc, origin, "n");
  std::int32_t clients = get_count(doc, origin, "clients");
  std::vector<double> affinity =
      get_doubles(doc.at("affinity"), origin, "affinity");
  return std::make_unique<FacilityLocationInstance>(n, clients,
                                                    std::move(affinity));
}

std::unique_ptr<ValueOracle> parse_concave_modular(const Json& doc,
                                                   const std::string& origin) {
  check_fields(doc, origin, {"kind", "n", "weights", "p"}, {});
  std::int32_t n = get_count(doc, origin, "n");
  std::vector<double> weights =
      get_doubles(doc.at("weights"), origin, "weights");
  const Json& p_json = doc.at("p");
  if (!p_json.is_number()) fail(origin, "field 'p' must be a number");
  return std::make_unique<ConcaveModularInstance>(n, std::move(weights),
                                                  p_json.get<double>());
}

}  // namespace

std::unique_ptr<ValueOracle> parse_instance(const std::string& text,
                                            const std::string& origin) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(origin, e.what());
  }
  if (!doc.is_object()) fail(origin, "top level must be a JSON object");
  if (!doc.contains("kind")) fail(origin, "missing field 'kind'");
  const Json& kind_json = doc.at("kind");
  if (!kind_json.is_string()) fail(origin, "field 'kind' must be a string");
  std::string kind = kind_json.get<std::string>();
  try {
    if (kind == "coverage") return parse_coverage(doc, origin);
    if (kind == "facility") return parse_facility(doc, origin);
    if (kind == "concave_modular") return parse_concave_modular(doc, origin);
  } catch (const InvalidArgumentError& e) {
    // Shape was fine but a declared invariant does not hold.
    throw InvariantViolation(origin + ": " + e.what());
  }
  fail(origin, "unknown kind '" + kind + "'");
}

std::unique_ptr<ValueOracle> load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgumentError(path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str(), path);
}

std::string serialize_instance(const ValueOracle& oracle) {
  Json doc;
  if (const auto* cov = dynamic_cast<const CoverageInstance*>(&oracle)) {
    doc["kind"] = "coverage";
    doc["n"] = cov->ground().n;
    doc["universe"] = cov->universe();
    doc["cover"] = cov->cover();
    bool unit = true;
    for (double w : cov->weights()) unit = unit && w == 1.0;
    if (!unit) doc["weights"] = cov->weights();
  } else if (const auto* fac =
                 dynamic_cast<const FacilityLocationInstance*>(&oracle)) {
    doc["kind"] = "facility";
    doc["n"] = fac->ground().n;
    doc["clients"] = fac->clients();
    doc["affinity"] = fac->affinity();
  } else if (const auto* cm =
                 dynamic_cast<const ConcaveModularInstance*>(&oracle)) {
    doc["kind"] = "concave_modular";
    doc["n"] = cm->ground().n;
    doc["weights"] = cm->weights();
    doc["p"] = cm->p();
  } else {
    throw InvalidArgumentError(
        "serialize_instance: oracle is not a file-backed instance kind");
  }
  return doc.dump(2) + "\n";
}

void save_instance(const ValueOracle& oracle, const std::string& path) {
  std::string text = serialize_instance(oracle);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InvalidArgumentError(path + ": cannot open file for writing");
  out << text;
  if (!out) throw InvalidArgumentError(path + ": write failed");
}

}  // namespace submax
