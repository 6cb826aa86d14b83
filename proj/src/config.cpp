#include "qham/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

namespace qham {

SpaceSpec RunConfig::spec() const {
  if (is_double) return SpaceSpec::double_of(n);
  return SpaceSpec::classes(n, classes);
}

int RunConfig::effective_fixed_samples() const {
  if (fixed_samples > 0) return fixed_samples;
  return std::max(samples / 100, 100);
}

int parse_group(const std::string& s) {
  if (s.size() < 3 || s.substr(0, 2) != "su") {
    throw ConfigError("group must be su<n>, got '" + s + "'");
  }
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(s.substr(2), &used);
    if (used != s.size() - 2) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw ConfigError("group must be su<n>, got '" + s + "'");
  }
  if (n < 2) throw ConfigError("group rank must be >= 2");
  return n;
}

std::vector<AlcovePoint> parse_classes(const std::string& s, int n,
                                       std::vector<std::string>* warnings) {
  std::vector<AlcovePoint> out;
  std::stringstream tuples(s);
  std::string tuple;
  while (std::getline(tuples, tuple, ';')) {
    if (tuple.empty()) continue;
    std::vector<double> vals;
    std::stringstream fields(tuple);
    std::string field;
    while (std::getline(fields, field, ',')) {
      try {
        std::size_t used = 0;
        vals.push_back(std::stod(field, &used));
        while (used < field.size() &&
               std::isspace(static_cast<unsigned char>(field[used]))) {
          ++used;
        }
        if (used != field.size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw ConfigError("cannot parse class angle '" + field + "'");
      }
    }
    if (static_cast<int>(vals.size()) != n) {
      throw ConfigError("class tuple '" + tuple + "' has " +
                        std::to_string(vals.size()) + " angles, expected " +
                        std::to_string(n));
    }
    Vector a(n);
    for (int i = 0; i < n; ++i) a[i] = vals[i];
    std::sort(a.data(), a.data() + n, std::greater<double>());
    const double mean = a.mean();
    if (std::abs(mean) > 1e-12 && warnings) {
      warnings->push_back("class tuple '" + tuple +
                          "' shifted to zero sum (offset " +
                          std::to_string(mean) + ")");
    }
    a.array() -= mean;
    const AlcovePoint p(a);
    if (!p.valid(1e-9)) {
      throw ConfigError("class tuple '" + tuple +
                        "' is not an alcove point after normalization");
    }
    out.push_back(p);
  }
  if (out.empty()) throw ConfigError("no classes given");
  return out;
}

Tolerances tolerances_from_json(const Json& j, const Tolerances& base) {
  Tolerances t = base;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& k = it.key();
    auto num = [&]() { return it.value().get<double>(); };
    if (k == "unitarity") t.unitarity = num();
    else if (k == "algebra") t.algebra = num();
    else if (k == "alcove") t.alcove = num();
    else if (k == "wall") t.wall = num();
    else if (k == "class_membership") t.class_membership = num();
    else if (k == "axiom3") t.axiom3 = num();
    else if (k == "nullspace_rel") t.nullspace_rel = num();
    else if (k == "exterior_step") t.exterior_step = num();
    else if (k == "exterior_pass") t.exterior_pass = num();
    else if (k == "involution_exact") t.involution_exact = num();
    else if (k == "form_reversal") t.form_reversal = num();
    else if (k == "beta_fixed") t.beta_fixed = num();
    else if (k == "symmetric") t.symmetric = num();
    else if (k == "q0_input_symmetry") t.q0_input_symmetry = num();
    else if (k == "solver_objective") t.solver_objective = num();
    else if (k == "solver_step_init") t.solver_step_init = num();
    else if (k == "solver_armijo_c") t.solver_armijo_c = num();
    else if (k == "solver_shrink") t.solver_shrink = num();
    else if (k == "solver_max_iters") t.solver_max_iters = it.value().get<int>();
    else if (k == "solver_fd_step") t.solver_fd_step = num();
    else if (k == "hull_dedup") t.hull_dedup = num();
    else if (k == "hausdorff_pass") t.hausdorff_pass = num();
    else if (k == "score_pass") t.score_pass = num();
    else if (k == "endpoint_pass") t.endpoint_pass = num();
    else if (k == "score_grid") t.score_grid = it.value().get<int>();
    else if (k == "contains_tol") t.contains_tol = num();
    else if (k == "fd_step") t.fd_step = num();
    else throw ConfigError("unknown tolerance key '" + k + "'");
  }
  return t;
}

Tolerances load_tolerance_file(const std::string& path,
                               const Tolerances& base) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open tolerance file: " + path);
  Json j;
  try {
    f >> j;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("tolerance file parse error: ") + e.what());
  }
  return tolerances_from_json(j, base);
}

Json config_echo(const RunConfig& cfg) {
  Json j;
  j["group"] = "su" + std::to_string(cfg.n);
  if (cfg.is_double) {
    j["space"] = "double";
  } else {
    j["space"] = "class_product";
    Json cl = Json::array();
    for (const AlcovePoint& p : cfg.classes) cl.push_back(alcove_to_json(p));
    j["classes"] = cl;
  }
  j["samples"] = cfg.samples;
  j["fixed_samples"] = cfg.effective_fixed_samples();
  j["seed"] = cfg.seed;
  j["tolerances"] = tolerances_to_json(cfg.tol);
  Json w = Json::array();
  for (const std::string& s : cfg.warnings) w.push_back(s);
  j["warnings"] = w;
  return j;
}

}  // namespace qham
