#pragma once

// Problem description files (JSON):
//
//   {
//     "name": "my-problem",
//     "orders": {"alpha1": 1.8, "beta1": 0.8, "alpha2": 1.8, "beta2": 0.8},
//     "sing1": {"k": 2, "gamma": 1},
//     "sing2": {"k": 2, "gamma": 1},
//     "f1": "y^2 + 0.4*y*z",
//     "f2": "0.5*y^2 + y*z",
//     "boundary": {"mode": "NeumannDirichlet",
//                  "parameters": {"yp0": 0, "zp0": 0, "y1": 1, "z1": 2}}
//   }
//
// Every listed key is required except "name"; unknown keys are errors.

#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "fhaar/error.hpp"
#include "fhaar/problem.hpp"

namespace fhaar {

namespace detail {

using nlohmann::json;

inline void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& item : obj.items()) {
    if (!allowed.count(item.key())) throw ConfigError("unknown field '" + where + item.key() + "'");
  }
}

inline const json& require(const json& obj, const std::string& key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ConfigError("missing field '" + where + key + "'");
  return *it;
}

inline const json& require_object(const json& obj, const std::string& key, const std::string& where) {
  const json& v = require(obj, key, where);
  if (!v.is_object()) throw ConfigError("field '" + where + key + "' must be an object");
  return v;
}

inline double require_number(const json& obj, const std::string& key, const std::string& where) {
  const json& v = require(obj, key, where);
  if (!v.is_number()) throw ConfigError("field '" + where + key + "' must be a number");
  return v.get<double>();
}

inline std::string require_string(const json& obj, const std::string& key, const std::string& where) {
  const json& v = require(obj, key, where);
  if (!v.is_string()) throw ConfigError("field '" + where + key + "' must be a string");
  return v.get<std::string>();
}

inline RightHandSide rhs_from(const json& obj, const std::string& key) {
  const std::string src = require_string(obj, key, "");
  try {
    return RightHandSide::from_expression(src);
  } catch (const ParseError& e) {
    throw ConfigError("field '" + key + "': " + e.what());
  }
}

inline SingularTerm singular_from(const json& obj, const std::string& key) {
  const json& s = require_object(obj, key, "");
  const std::string where = key + ".";
  reject_unknown(s, {"k", "gamma"}, where);
  return {require_number(s, "k", where), require_number(s, "gamma", where)};
}

}  // namespace detail

inline ProblemSpec problem_from_json(const nlohmann::json& doc) {
  using namespace detail;
  if (!doc.is_object()) throw ConfigError("problem description must be a JSON object");
  reject_unknown(doc, {"name", "orders", "sing1", "sing2", "f1", "f2", "boundary"}, "");

  ProblemSpec spec;
  spec.name = doc.contains("name") ? require_string(doc, "name", "") : "config";

  const json& o = require_object(doc, "orders", "");
  reject_unknown(o, {"alpha1", "beta1", "alpha2", "beta2"}, "orders.");
  spec.orders = {require_number(o, "alpha1", "orders."), require_number(o, "beta1", "orders."),
                 require_number(o, "alpha2", "orders."), require_number(o, "beta2", "orders.")};
  spec.sing1 = singular_from(doc, "sing1");
  spec.sing2 = singular_from(doc, "sing2");
  spec.f1 = rhs_from(doc, "f1");
  spec.f2 = rhs_from(doc, "f2");

  const json& b = require_object(doc, "boundary", "");
  reject_unknown(b, {"mode", "parameters"}, "boundary.");
  const std::string mode = require_string(b, "mode", "boundary.");
  auto bc = boundary_for_mode(mode);
  if (!bc) throw ConfigError("unknown boundary mode '" + mode + "'");
  const json& params = require_object(b, "parameters", "boundary.");
  std::set<std::string> names;
  for (const auto& [name, value] : boundary_fields(*bc)) names.insert(name);
  reject_unknown(params, names, "boundary.parameters.");
  for (const auto& name : names) set_boundary_field(*bc, name, require_number(params, name, "boundary.parameters."));
  spec.boundary = *bc;
  return spec;
}

/// Echo of a spec in the config format. Native right-hand sides without an
/// expression form are written as null.
inline nlohmann::json problem_to_json(const ProblemSpec& spec) {
  using nlohmann::json;
  json params = json::object();
  for (const auto& [name, value] : boundary_fields(spec.boundary)) params[name] = value;
  auto rhs = [](const RightHandSide& f) { return f.expression.empty() ? json(nullptr) : json(f.expression); };
  return json{
      {"name", spec.name},
      {"orders",
       {{"alpha1", spec.orders.alpha1}, {"beta1", spec.orders.beta1}, {"alpha2", spec.orders.alpha2}, {"beta2", spec.orders.beta2}}},
      {"sing1", {{"k", spec.sing1.k}, {"gamma", spec.sing1.gamma_exp}}},
      {"sing2", {{"k", spec.sing2.k}, {"gamma", spec.sing2.gamma_exp}}},
      {"f1", rhs(spec.f1)},
      {"f2", rhs(spec.f2)},
      {"boundary", {{"mode", std::string(mode_name(spec.boundary))}, {"parameters", params}}},
  };
}

inline ProblemSpec parse_problem_config(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  return problem_from_json(doc);
}

inline ProblemSpec load_problem_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file '" + path + "': file not found or unreadable");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_problem_config(ss.str());
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

}  // namespace fhaar
