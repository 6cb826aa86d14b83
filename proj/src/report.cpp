#include "qham/report.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace qham {

namespace {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.16e", x);
  return buf;
}

void emit(const Json& v, std::string& out, int depth) {
  const std::string pad(2 * static_cast<std::size_t>(depth), ' ');
  const std::string pad_in(2 * static_cast<std::size_t>(depth + 1), ' ');
  switch (v.type()) {
    case Json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      std::size_t i = 0;
      for (auto it = v.begin(); it != v.end(); ++it, ++i) {
        out += pad_in + Json(it.key()).dump() + ": ";
        emit(it.value(), out, depth + 1);
        if (i + 1 < v.size()) out += ",";
        out += "\n";
      }
      out += pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        out += pad_in;
        emit(v[i], out, depth + 1);
        if (i + 1 < v.size()) out += ",";
        out += "\n";
      }
      out += pad + "]";
      return;
    }
    case Json::value_t::number_float:
      out += format_double(v.get<double>());
      return;
    default:
      out += v.dump();
      return;
  }
}

}  // namespace

std::string to_json_string(const Json& v) {
  std::string out;
  emit(v, out, 0);
  out += "\n";
  return out;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f << content;
  if (!f) throw std::runtime_error("write failed: " + path);
}

std::string batch_to_csv(const SampleBatch& batch) {
  std::string out;
  const int n = batch.spec.n;
  for (int i = 1; i <= n; ++i) {
    out += "lambda" + std::to_string(i) + ",";
  }
  out += "source\n";
  const char* tag =
      batch.source == SampleSource::full_space ? "full_space" : "fixed_point_set";
  for (const AlcovePoint& p : batch.points) {
    for (int i = 0; i < n; ++i) {
      out += format_double(p.angles[i]) + ",";
    }
    out += tag;
    out += "\n";
  }
  return out;
}

Json alcove_to_json(const AlcovePoint& p) {
  Json arr = Json::array();
  for (int i = 0; i < p.rank(); ++i) arr.push_back(p.angles[i]);
  return arr;
}

Json hull_to_json(const Hull& h) {
  Json j;
  j["dim"] = h.dim;
  j["ambient_dim"] = h.ambient_dim;
  Json origin = Json::array();
  for (int i = 0; i < h.origin.size(); ++i) origin.push_back(h.origin[i]);
  j["origin"] = origin;
  Json verts = Json::array();
  for (std::size_t i = 0; i < h.vertices.size(); ++i) {
    const Eigen::VectorXd a = h.vertex_ambient(static_cast<int>(i));
    Json v = Json::array();
    for (int k = 0; k < a.size(); ++k) v.push_back(a[k]);
    verts.push_back(v);
  }
  j["vertices_embedded"] = verts;
  Json facets = Json::array();
  for (const Hull::Facet& f : h.facets) {
    Json one;
    Json normal = Json::array();
    for (int k = 0; k < f.normal.size(); ++k) normal.push_back(f.normal[k]);
    one["normal"] = normal;
    one["offset"] = f.offset;
    facets.push_back(one);
  }
  j["facets"] = facets;
  return j;
}

Json tolerances_to_json(const Tolerances& t) {
  Json j;
  j["unitarity"] = t.unitarity;
  j["algebra"] = t.algebra;
  j["alcove"] = t.alcove;
  j["wall"] = t.wall;
  j["class_membership"] = t.class_membership;
  j["axiom3"] = t.axiom3;
  j["nullspace_rel"] = t.nullspace_rel;
  j["exterior_step"] = t.exterior_step;
  j["exterior_pass"] = t.exterior_pass;
  j["involution_exact"] = t.involution_exact;
  j["form_reversal"] = t.form_reversal;
  j["beta_fixed"] = t.beta_fixed;
  j["symmetric"] = t.symmetric;
  j["q0_input_symmetry"] = t.q0_input_symmetry;
  j["solver_objective"] = t.solver_objective;
  j["solver_step_init"] = t.solver_step_init;
  j["solver_armijo_c"] = t.solver_armijo_c;
  j["solver_shrink"] = t.solver_shrink;
  j["solver_max_iters"] = t.solver_max_iters;
  j["solver_fd_step"] = t.solver_fd_step;
  j["hull_dedup"] = t.hull_dedup;
  j["hausdorff_pass"] = t.hausdorff_pass;
  j["score_pass"] = t.score_pass;
  j["endpoint_pass"] = t.endpoint_pass;
  j["score_grid"] = t.score_grid;
  j["contains_tol"] = t.contains_tol;
  j["fd_step"] = t.fd_step;
  return j;
}

}  // namespace qham
