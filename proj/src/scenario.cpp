#include "proxcurve/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace proxcurve {

namespace {

using json = nlohmann::json;

[[noreturn]] void schema_error(const std::string& path, const std::string& msg) {
  throw std::invalid_argument("scenario config: " + path + ": " + msg);
}

double number_at(const json& j, const std::string& key, const std::string& path) {
  if (!j.contains(key)) schema_error(path + "." + key, "missing");
  if (!j.at(key).is_number()) schema_error(path + "." + key, "expected a number");
  return j.at(key).get<double>();
}

double number_or(const json& j, const std::string& key, double fallback, const std::string& path) {
  return j.contains(key) ? number_at(j, key, path) : fallback;
}

Vector vector_at(const json& j, const std::string& key, const std::string& path, int dim) {
  if (!j.contains(key)) schema_error(path + "." + key, "missing");
  const json& a = j.at(key);
  if (!a.is_array() || static_cast<int>(a.size()) != dim) {
    schema_error(path + "." + key, "expected an array of " + std::to_string(dim) + " numbers");
  }
  Vector v(dim);
  for (int i = 0; i < dim; ++i) {
    if (!a[i].is_number()) schema_error(path + "." + key, "non-numeric coordinate");
    v[i] = a[i].get<double>();
  }
  return v;
}

}  // namespace

ModulusModel parse_modulus(const json& j, double p) {
  if (j.is_null()) return ModulusModel::lp_default(p);
  const std::string kind = j.value("kind", std::string("default"));
  if (kind == "default") return ModulusModel::lp_default(p);
  if (kind == "exact_hilbert") {
    if (p != 2.0) schema_error("space.modulus.kind", "exact_hilbert requires p = 2");
    return ModulusModel::hilbert();
  }
  if (kind == "power") {
    return ModulusModel::power(number_at(j, "s", "space.modulus"),
                               number_at(j, "c_sm", "space.modulus"));
  }
  if (kind == "numeric_table") {
    if (!j.contains("taus") || !j.contains("rhos")) schema_error("space.modulus", "table needs taus and rhos");
    return ModulusModel::table(j.at("taus").get<std::vector<double>>(),
                               j.at("rhos").get<std::vector<double>>(),
                               number_at(j, "s", "space.modulus"),
                               number_at(j, "c_sm", "space.modulus"));
  }
  schema_error("space.modulus.kind", "unknown kind '" + kind + "'");
}

Space parse_space(const json& j) {
  if (!j.is_object()) schema_error("space", "expected an object");
  if (j.value("family", std::string("lp")) != "lp") schema_error("space.family", "only 'lp' is supported");
  const double p = number_at(j, "p", "space");
  if (!j.contains("dim") || !j.at("dim").is_number_integer()) schema_error("space.dim", "expected an integer");
  const int dim = j.at("dim").get<int>();
  return Space(p, dim, parse_modulus(j.contains("modulus") ? j.at("modulus") : json(), p));
}

ProximalSet parse_set(const json& j, int dim) {
  if (!j.is_object() || !j.contains("kind")) schema_error("set", "expected an object with 'kind'");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "ball_complement" || kind == "sphere") {
    const Vector center = j.contains("center") ? vector_at(j, "center", "set", dim) : Vector::Zero(dim);
    const double radius = number_or(j, "radius", 1.0, "set");
    const double reach = number_or(j, "R", radius, "set");
    return kind == "sphere" ? ProximalSet::sphere(center, radius, reach)
                            : ProximalSet::ball_complement(center, radius, reach);
  }
  if (kind == "parametric_curve_2d") {
    if (dim != 2) schema_error("set.kind", "parametric_curve_2d needs a 2-D space");
    const std::string curve = j.value("curve", std::string("parabola"));
    if (curve != "parabola") schema_error("set.curve", "unknown curve '" + curve + "'");
    double t0 = -1.0;
    double t1 = 1.0;
    if (j.contains("interval")) {
      const auto iv = j.at("interval").get<std::vector<double>>();
      if (iv.size() != 2) schema_error("set.interval", "expected [t_min, t_max]");
      t0 = iv[0];
      t1 = iv[1];
    }
    return ProximalSet::parabola(number_at(j, "alpha", "set"), t0, t1, number_or(j, "R", 0.0, "set"));
  }
  schema_error("set.kind", "unknown kind '" + kind + "'");
}

bool Scenario::enabled(const std::string& check) const {
  auto it = checks.find(check);
  return it == checks.end() || it->second;
}

Scenario parse_scenario(const json& j) {
  if (!j.is_object()) schema_error("$", "expected an object");
  if (!j.contains("space")) schema_error("space", "missing");
  if (!j.contains("set")) schema_error("set", "missing");
  Space space = parse_space(j.at("space"));
  ProximalSet set = parse_set(j.at("set"), space.dim());
  Vector x0 = vector_at(j, "x0", "$", space.dim());
  Vector x1;
  if (j.contains("x1")) {
    x1 = vector_at(j, "x1", "$", space.dim());
  } else if (j.contains("chord")) {
    x1 = set.point_at_distance(space, x0, number_at(j, "chord", "$"));
  } else {
    schema_error("x1", "either 'x1' or 'chord' is required");
  }

  Scenario sc{.name = j.value("name", std::string("scenario")),
              .space = std::move(space),
              .set = std::move(set),
              .x0 = std::move(x0),
              .x1 = std::move(x1)};
  if (j.contains("builder")) {
    const json& b = j.at("builder");
    sc.build.max_depth = b.value("max_depth", sc.build.max_depth);
    sc.build.delta_stop_rel = b.value("delta_stop_rel", sc.build.delta_stop_rel);
    sc.build.enforce_gates = b.value("enforce_gates", sc.build.enforce_gates);
  }
  if (j.contains("slicer")) {
    const json& s = j.at("slicer");
    sc.build.slicer.residual_tol = s.value("residual_tol", sc.build.slicer.residual_tol);
    sc.build.slicer.max_iter = s.value("max_iter", sc.build.slicer.max_iter);
    sc.build.slicer.membership_tol = s.value("membership_tol", sc.build.slicer.membership_tol);
  }
  if (j.contains("checks")) {
    for (const auto& [name, on] : j.at("checks").items()) {
      const auto& names = check_names();
      if (std::find(names.begin(), names.end(), name) == names.end()) {
        schema_error("checks." + name, "unknown check");
      }
      sc.checks[name] = on.get<bool>();
    }
  }
  sc.slack = j.value("slack", sc.slack);
  sc.midpoint_samples = j.value("midpoint_samples", sc.midpoint_samples);
  if (j.contains("output")) {
    const json& o = j.at("output");
    sc.output.dir = o.value("dir", sc.output.dir);
    sc.output.vertices = o.value("vertices", sc.output.vertices);
    sc.output.levels = o.value("levels", sc.output.levels);
    sc.output.report = o.value("report", sc.output.report);
  }
  for (const Vector* x : {&sc.x0, &sc.x1}) {
    if (!sc.set.contains(sc.space, *x, sc.build.slicer.membership_tol)) {
      schema_error("x0/x1", "endpoint not in set within membership tolerance");
    }
  }
  return sc;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open scenario config '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("scenario config: " + std::string(e.what()));
  }
  return parse_scenario(j);
}

}  // namespace proxcurve
