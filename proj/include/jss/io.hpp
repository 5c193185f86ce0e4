// Copyright 2026 The JSS Authors
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

// Instance files and JSON renderings of results.
//
// Instance format:
//   {"journals": [{"name": "J1", "u": "5", "a": "0.2", "q": "0.2", "c": "0"}],
//    "prior_h": "17/29", "outside_option": "0"}
// Numbers are strings in decimal or fraction syntax. Plain JSON numbers are
// accepted too; floats go through their shortest decimal representation, so
// 0.2 means 1/5 and not the nearest binary double. "c", "name" and
// "outside_option" are optional.

#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "jss/conditions.hpp"
#include "jss/error.hpp"
#include "jss/model.hpp"
#include "jss/numeric.hpp"
#include "jss/solver.hpp"

namespace jss {

using Json = nlohmann::ordered_json;

namespace detail {

inline Rational rational_from_json(const Json& v, const std::string& what) {
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const InvalidInstanceError& e) {
      throw InvalidInstanceError(what + ": " + e.what());
    }
  }
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return Rational(mpz_class(std::to_string(v.get<std::uint64_t>())));
    return Rational(mpz_class(std::to_string(v.get<std::int64_t>())));
  }
  if (v.is_number_float()) return parse_rational(to_decimal_string(v.get<double>()));
  throw InvalidInstanceError(what + ": expected a number or numeric string");
}

inline const Json& require_field(const Json& obj, const char* key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) {
    throw InvalidInstanceError(where + ": missing field '" + key + "'");
  }
  return *it;
}

}  // namespace detail

template <Scalar S>
Json scalar_to_json(const S& value) {
  if constexpr (kIsExact<S>) {
    return to_fraction_string(value);
  } else {
    return value;
  }
}

// Always parsed exactly; use to_float() for floating point evaluation.
inline Instance<Rational> instance_from_json(const Json& doc) {
  if (!doc.is_object()) throw InvalidInstanceError("instance must be a JSON object");
  const Json& list = detail::require_field(doc, "journals", "instance");
  if (!list.is_array()) throw InvalidInstanceError("'journals' must be an array");
  std::vector<Journal<Rational>> journals;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const Json& entry = list[i];
    const std::string where = "journals[" + std::to_string(i) + "]";
    if (!entry.is_object()) throw InvalidInstanceError(where + " must be an object");
    Journal<Rational> j;
    if (const auto it = entry.find("name"); it != entry.end()) {
      if (!it->is_string()) throw InvalidInstanceError(where + ".name must be a string");
      j.name = it->get<std::string>();
    } else {
      j.name = "J" + std::to_string(i + 1);
    }
    j.u = detail::rational_from_json(detail::require_field(entry, "u", where), where + ".u");
    j.a = detail::rational_from_json(detail::require_field(entry, "a", where), where + ".a");
    j.q = detail::rational_from_json(detail::require_field(entry, "q", where), where + ".q");
    if (const auto it = entry.find("c"); it != entry.end()) {
      j.c = detail::rational_from_json(*it, where + ".c");
    }
    journals.push_back(std::move(j));
  }
  const Rational prior =
      detail::rational_from_json(detail::require_field(doc, "prior_h", "instance"), "prior_h");
  Rational outside = 0;
  if (const auto it = doc.find("outside_option"); it != doc.end()) {
    outside = detail::rational_from_json(*it, "outside_option");
  }
  return Instance<Rational>::create(std::move(journals), Belief<Rational>(prior),
                                    std::move(outside));
}

inline Instance<Rational> parse_instance(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInstanceError(std::string("malformed JSON: ") + e.what());
  }
  return instance_from_json(doc);
}

inline Instance<Rational> load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInstanceError("cannot open instance file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

// Journals are written in the caller's original order, so parsing the output
// reproduces the instance exactly.
template <Scalar S>
Json instance_to_json(const Instance<S>& inst) {
  Json list = Json::array();
  for (const auto& j : inst.journals_in_input_order()) {
    auto num = [](const S& v) -> Json {
      if constexpr (kIsExact<S>) {
        return to_fraction_string(v);
      } else {
        return to_decimal_string(v);
      }
    };
    list.push_back({{"name", j.name}, {"u", num(j.u)}, {"a", num(j.a)}, {"q", num(j.q)},
                    {"c", num(j.c)}});
  }
  Json doc;
  doc["journals"] = std::move(list);
  if constexpr (kIsExact<S>) {
    doc["prior_h"] = to_fraction_string(inst.prior().high());
    doc["outside_option"] = to_fraction_string(inst.outside_option());
  } else {
    doc["prior_h"] = to_decimal_string(inst.prior().high());
    doc["outside_option"] = to_decimal_string(inst.outside_option());
  }
  return doc;
}

// Journal names along an order, e.g. ["J1", "J2"].
template <Scalar S>
Json order_names(const Instance<S>& inst, const SearchOrder& order) {
  Json out = Json::array();
  for (std::size_t t = 0; t < order.size(); ++t) out.push_back(inst.journal(order[t]).name);
  return out;
}

template <Scalar S>
Json to_json(const Instance<S>& inst, const SolveResult<S>& r) {
  Json argmax = Json::array();
  for (const auto& o : r.argmax_set) argmax.push_back(o.to_string());
  Json doc;
  doc["method"] = std::string(to_string(r.method));
  doc["best_order"] = r.best_order.to_string();
  doc["best_order_names"] = order_names(inst, r.best_order);
  doc["best_value"] = scalar_to_json(r.best_value);
  doc["best_value_decimal"] = to_double(r.best_value);
  doc["argmax_set"] = std::move(argmax);
  doc["monotone_in_argmax"] = r.in_argmax(monotone_order(inst));
  doc["certified"] = r.certified;
  doc["warnings"] = r.warnings;
  return doc;
}

template <Scalar S>
Json to_json(const ConditionReport<S>& r) {
  Json doc;
  doc["name"] = r.name;
  doc["pass"] = r.pass;
  Json flags = Json::object();
  for (const auto& [k, v] : r.flags) flags[k] = v;
  doc["flags"] = std::move(flags);
  doc["margin"] = r.margin ? scalar_to_json(*r.margin) : Json(nullptr);
  Json ws = Json::array();
  for (const auto& w : r.witnesses) {
    Json values = Json::array();
    for (const auto& v : w.values) values.push_back(scalar_to_json(v));
    Json journals = Json::array();
    for (int j : w.journals) journals.push_back(j + 1);
    ws.push_back({{"description", w.description},
                  {"journals", std::move(journals)},
                  {"values", std::move(values)}});
  }
  doc["witnesses"] = std::move(ws);
  return doc;
}

inline Json to_json(const ThresholdResult& r) {
  Json doc;
  doc["kind"] = std::string(to_string(r.kind));
  doc["mu_star"] = r.kind == ThresholdKind::kThreshold ? Json(to_fraction_string(r.mu_star))
                                                       : Json(nullptr);
  doc["direction"] = std::string(to_string(r.direction));
  doc["gap_intercept"] = to_fraction_string(r.intercept);
  doc["gap_slope"] = to_fraction_string(r.slope);
  return doc;
}

}  // namespace jss
