#include "randers/config.hpp"

#include <json.hpp>

#include "randers/error.hpp"
#include "randers/sampling.hpp"

namespace randers {

namespace {

using nlohmann::json;

double get_number(const json& j, const char* what) {
  if (!j.is_number()) throw ConfigError(std::string(what) + " must be a number");
  return j.get<double>();
}

Vec get_vector(const json& j, int n, const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw ConfigError(std::string(what) + " must be an array of " + std::to_string(n) +
                      " numbers");
  Vec v;
  v.reserve(static_cast<size_t>(n));
  for (const auto& x : j) v.push_back(get_number(x, what));
  return v;
}

constexpr uint64_t kPointSalt = 0x706f696e74ULL;  // decorrelates point sampling from the criterion

}  // namespace

RunConfig RunConfig::from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");

  RunConfig cfg;
  cfg.source = "config";

  if (!j.contains("dimension") || !j["dimension"].is_number_integer())
    throw ConfigError("config needs an integer \"dimension\"");
  cfg.dimension = j["dimension"].get<int>();
  if (cfg.dimension < 2 || cfg.dimension > 8)
    throw ConfigError("dimension must be between 2 and 8");
  const int n = cfg.dimension;

  if (!j.contains("metric") || !j["metric"].is_array() ||
      static_cast<int>(j["metric"].size()) != n)
    throw ConfigError("config needs a \"metric\" array of " + std::to_string(n) + " rows");
  for (const auto& row : j["metric"]) {
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw ConfigError("each metric row must have " + std::to_string(n) + " entries");
    std::vector<std::string> r;
    for (const auto& e : row) {
      if (!e.is_string()) throw ConfigError("metric entries must be expression strings");
      r.push_back(e.get<std::string>());
    }
    cfg.metric_rows.push_back(std::move(r));
  }

  if (!j.contains("beta") || !j["beta"].is_array() ||
      static_cast<int>(j["beta"].size()) != n)
    throw ConfigError("config needs a \"beta\" array of " + std::to_string(n) +
                      " expression strings");
  for (const auto& e : j["beta"]) {
    if (!e.is_string()) throw ConfigError("beta entries must be expression strings");
    cfg.beta_components.push_back(e.get<std::string>());
  }

  if (!j.contains("domain") || !j["domain"].is_object())
    throw ConfigError("config needs a \"domain\" object with \"min\" and \"max\"");
  DomainBox box;
  box.min = get_vector(j["domain"].value("min", json::array()), n, "domain.min");
  box.max = get_vector(j["domain"].value("max", json::array()), n, "domain.max");

  if (j.contains("samples")) {
    if (!j["samples"].is_number_integer() || j["samples"].get<int>() < 2)
      throw ConfigError("\"samples\" must be an integer >= 2");
    cfg.samples = j["samples"].get<int>();
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_integer()) throw ConfigError("\"seed\" must be an integer");
    cfg.seed = j["seed"].get<uint64_t>();
  }

  if (j.contains("tolerances")) {
    const auto& t = j["tolerances"];
    if (!t.is_object()) throw ConfigError("\"tolerances\" must be an object");
    if (t.contains("length")) cfg.tol.length = get_number(t["length"], "tolerances.length");
    if (t.contains("algebraic"))
      cfg.tol.algebraic = get_number(t["algebraic"], "tolerances.algebraic");
    if (t.contains("ode")) cfg.tol.ode = get_number(t["ode"], "tolerances.ode");
    if (!(cfg.tol.length > 0.0) || !(cfg.tol.algebraic > 0.0) || !(cfg.tol.ode > 0.0))
      throw ConfigError("tolerances must be positive");
  }

  if (j.contains("points")) {
    const auto& p = j["points"];
    if (p.is_string()) {
      const std::string s = p.get<std::string>();
      if (s.rfind("random:", 0) != 0)
        throw ConfigError("\"points\" string must have the form \"random:N\"");
      try {
        cfg.random_points = std::stoi(s.substr(7));
      } catch (...) {
        throw ConfigError("\"points\" string must have the form \"random:N\"");
      }
      if (cfg.random_points < 1) throw ConfigError("random point count must be positive");
    } else if (p.is_array()) {
      for (const auto& pt : p) cfg.points.push_back(get_vector(pt, n, "points entry"));
    } else {
      throw ConfigError("\"points\" must be an array of points or \"random:N\"");
    }
  }

  if (j.contains("curves")) {
    if (!j["curves"].is_array()) throw ConfigError("\"curves\" must be an array");
    for (const auto& c : j["curves"]) {
      if (!c.is_object()) throw ConfigError("each curve must be an object");
      CurveConfig cc;
      if (!c.contains("components") || !c["components"].is_array() ||
          static_cast<int>(c["components"].size()) != n)
        throw ConfigError("curve needs " + std::to_string(n) + " component expressions");
      for (const auto& e : c["components"]) {
        if (!e.is_string()) throw ConfigError("curve components must be expression strings");
        cc.components.push_back(e.get<std::string>());
      }
      cc.t0 = get_number(c.value("t0", json(0.0)), "curve t0");
      cc.t1 = get_number(c.value("t1", json(1.0)), "curve t1");
      if (!(cc.t0 < cc.t1)) throw ConfigError("curve needs t0 < t1");
      if (c.contains("v0")) cc.v0 = get_vector(c["v0"], n, "curve v0");
      if (c.contains("steps")) {
        if (!c["steps"].is_number_integer() || c["steps"].get<int>() < 1)
          throw ConfigError("curve steps must be a positive integer");
        cc.steps = c["steps"].get<int>();
      }
      for (const auto& s : cc.components)
        cc.curve.components.push_back(Expression::parse(s, 0, /*allow_param=*/true));
      cc.curve.t0 = cc.t0;
      cc.curve.t1 = cc.t1;
      cfg.curves.push_back(std::move(cc));
    }
  }

  cfg.field = FieldSpec::from_strings(n, cfg.metric_rows, cfg.beta_components, box);

  // early dimension check on explicit points
  for (const auto& pt : cfg.points)
    if (!cfg.field->domain().contains(pt))
      throw ConfigError("evaluation point lies outside the domain box");

  return cfg;
}

RunConfig RunConfig::from_example(const std::string& name) {
  RunConfig cfg = from_json_text(example_config_json(name));
  cfg.source = name;
  return cfg;
}

const FieldSpec& RunConfig::spec() const {
  if (!field) throw ConfigError("config has no parsed field");
  return *field;
}

std::vector<Vec> RunConfig::resolve_points() const {
  std::vector<Vec> pts = points;
  if (random_points > 0) {
    SplitMix64 rng(seed ^ kPointSalt);
    for (int i = 0; i < random_points; ++i)
      pts.push_back(random_point(spec().domain(), rng));
  }
  return pts;
}

}  // namespace randers
