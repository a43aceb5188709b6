#pragma once

#include <string>

#include <json.hpp>

#include "icost/costing.hpp"
#include "icost/error.hpp"
#include "icost/harness.hpp"
#include "icost/learners.hpp"
#include "icost/metrics.hpp"

// JSON plumbing shared by model and report serialization. nlohmann objects
// keep keys sorted, so dumps are byte-stable for equal content.

namespace icost::detail {

using nlohmann::json;

template <typename T>
T get_as(const json& j, const char* key) {
  try {
    return j.at(key).template get<T>();
  } catch (const json::exception& e) {
    fail(errc::bad_params, std::string("bad or missing field '") + key + "': " + e.what());
  }
}

template <typename T>
T get_or(const json& j, const char* key, T fallback) {
  if (!j.contains(key) || j.at(key).is_null()) return fallback;
  return get_as<T>(j, key);
}

inline void reject_unknown(const json& j, std::initializer_list<const char*> allowed,
                           const char* where) {
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* k : allowed)
      if (item.key() == k) known = true;
    if (!known)
      fail(errc::bad_params, std::string("unknown field '") + item.key() + "' in " + where);
  }
}

inline json learner_to_json(const LearnerConfig& c) {
  return json{{"kind", learner_name(c.kind)},
              {"l2", c.l2},
              {"max_iter", c.max_iter},
              {"tol", c.tol},
              {"lambda", c.lambda},
              {"epochs", c.epochs},
              {"min_samples_split", c.min_samples_split},
              {"max_depth", c.max_depth},
              {"n_trees", c.n_trees}};
}

inline LearnerConfig learner_from_json(const json& j) {
  reject_unknown(j, {"kind", "l2", "max_iter", "tol", "lambda", "epochs", "min_samples_split",
                     "max_depth", "n_trees"},
                 "learner");
  LearnerConfig c;
  c.kind = parse_learner(get_or<std::string>(j, "kind", learner_name(c.kind)));
  c.l2 = get_or(j, "l2", c.l2);
  c.max_iter = get_or(j, "max_iter", c.max_iter);
  c.tol = get_or(j, "tol", c.tol);
  c.lambda = get_or(j, "lambda", c.lambda);
  c.epochs = get_or(j, "epochs", c.epochs);
  c.min_samples_split = get_or(j, "min_samples_split", c.min_samples_split);
  c.max_depth = get_or(j, "max_depth", c.max_depth);
  c.n_trees = get_or(j, "n_trees", c.n_trees);
  return c;
}

inline json cost_to_json(const CostSpec& c) {
  json j{{"algorithm", cost_mode_name(c.mode)},
         {"type", cost_scheme_name(c.scheme)},
         {"n_neighbors", c.n_neighbors},
         {"linked_majority_weight", c.linked_majority_weight}};
  if (c.has_scalar)
    j["cost_factor"] = c.scalar;
  else if (!c.list.empty())
    j["cost_factor"] = c.list;
  else if (!c.named.empty())
    j["cost_factor"] = c.named;
  else
    j["cost_factor"] = nullptr;
  return j;
}

inline CostSpec cost_from_json(const json& j) {
  reject_unknown(j, {"algorithm", "type", "n_neighbors", "linked_majority_weight", "cost_factor"},
                 "cost");
  CostSpec c;
  c.mode = parse_cost_mode(get_or<std::string>(j, "algorithm", cost_mode_name(c.mode)));
  c.scheme = parse_cost_scheme(get_or<std::string>(j, "type", cost_scheme_name(c.scheme)));
  c.n_neighbors = get_or(j, "n_neighbors", c.n_neighbors);
  c.linked_majority_weight = get_or(j, "linked_majority_weight", c.linked_majority_weight);
  if (j.contains("cost_factor") && !j.at("cost_factor").is_null()) {
    const json& v = j.at("cost_factor");
    if (v.is_number()) {
      c.has_scalar = true;
      c.scalar = v.get<double>();
    } else if (v.is_array()) {
      c.list = v.get<std::vector<double>>();
    } else if (v.is_object()) {
      c.named = v.get<std::map<std::string, double>>();
    } else {
      fail(errc::bad_params, "cost_factor must be a number, array, or object");
    }
  }
  return c;
}

inline json metrics_to_json(const FoldMetrics& m) {
  json j;
  auto values = m.values();
  const auto& names = FoldMetrics::names();
  for (std::size_t i = 0; i < values.size(); ++i) j[names[i]] = values[i];
  return j;
}

inline json grid_to_json(const GridSpec& g) {
  json j = json::object();
  for (const GridAxis& axis : g.axes) {
    json values = json::array();
    for (const GridValue& v : axis.values) values.push_back(v.text());
    j[axis.name] = values;
  }
  return j;
}

inline GridSpec grid_from_json(const json& j, CostMode mode) {
  std::vector<std::string> names;
  switch (mode) {
    case CostMode::original: names = {"cost"}; break;
    case CostMode::neighborhood: names = {"pure", "safe", "border"}; break;
    case CostMode::mst: names = {"linked", "normal"}; break;
  }
  for (const auto& item : j.items()) {
    bool known = false;
    for (const auto& n : names)
      if (item.key() == n) known = true;
    if (!known)
      fail(errc::bad_params, "unknown grid axis '" + item.key() + "' for this algorithm");
  }
  GridSpec g;
  for (const auto& name : names) {
    if (!j.contains(name)) fail(errc::bad_params, "grid is missing axis '" + name + "'");
    GridAxis axis;
    axis.name = name;
    for (const json& v : j.at(name)) {
      if (v.is_number())
        axis.values.push_back({v.get<double>(), false});
      else if (v.is_string())
        axis.values.push_back(parse_grid_value(v.get<std::string>()));
      else
        fail(errc::bad_params, "grid values must be numbers or strings like '0.5*IR'");
    }
    if (axis.values.empty()) fail(errc::bad_params, "grid axis '" + name + "' has no candidates");
    g.axes.push_back(std::move(axis));
  }
  return g;
}

inline json parse_document(const std::string& text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(errc::bad_params, std::string("malformed JSON in ") + what);
  return j;
}

}  // namespace icost::detail
