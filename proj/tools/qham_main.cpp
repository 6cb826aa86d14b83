#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <iostream>

#include "qham/axioms.hpp"
#include "qham/config.hpp"
#include "qham/involution.hpp"
#include "qham/polytope.hpp"
#include "qham/report.hpp"
#include "qham/svg.hpp"

namespace {

using namespace qham;

struct CliState {
  std::string group = "su2";
  std::string classes;
  bool double_space = false;
  int samples = 100;
  int fixed_samples = 0;
  std::int64_t seed_flag = -1;
  std::string out_dir;
  std::string tol_file;
  std::string source = "full";
};

void add_common(CLI::App* cmd, CliState& st, bool with_source = false) {
  cmd->add_option("--group", st.group, "group, e.g. su2, su3");
  cmd->add_option("--classes", st.classes,
                  "conjugacy classes as 'a1,a2,...;b1,b2,...' (radians)");
  cmd->add_flag("--double", st.double_space, "use the double G x G");
  cmd->add_option("--samples", st.samples, "sample / point count");
  cmd->add_option("--fixed-samples", st.fixed_samples,
                  "fixed-point sample count (default samples/100, min 100)");
  cmd->add_option("--seed", st.seed_flag, "master seed (default env QHAM_SEED, then 0)");
  cmd->add_option("--out", st.out_dir, "output directory (must exist)");
  cmd->add_option("--tol-file", st.tol_file, "JSON tolerance overrides");
  if (with_source) {
    cmd->add_option("--source", st.source, "full | fixed");
  }
}

RunConfig build_config(const CliState& st, bool need_classes) {
  RunConfig cfg;
  cfg.n = parse_group(st.group);
  cfg.is_double = st.double_space;
  if (!cfg.is_double) {
    if (st.classes.empty()) {
      if (need_classes) throw ConfigError("--classes is required");
    } else {
      cfg.classes = parse_classes(st.classes, cfg.n, &cfg.warnings);
    }
  }
  if (st.samples < 1) throw ConfigError("--samples must be >= 1");
  cfg.samples = st.samples;
  cfg.fixed_samples = st.fixed_samples;
  if (st.seed_flag >= 0) {
    cfg.seed = static_cast<std::uint64_t>(st.seed_flag);
  } else if (const char* env = std::getenv("QHAM_SEED")) {
    try {
      cfg.seed = std::stoull(env);
    } catch (const std::exception&) {
      throw ConfigError("QHAM_SEED is not a number");
    }
  }
  if (!st.tol_file.empty()) cfg.tol = load_tolerance_file(st.tol_file, cfg.tol);
  if (!st.out_dir.empty() && !std::filesystem::is_directory(st.out_dir)) {
    throw ConfigError("output directory does not exist: " + st.out_dir);
  }
  cfg.out_dir = st.out_dir;
  return cfg;
}

void emit_report(const RunConfig& cfg, const Json& report) {
  const std::string text = to_json_string(report);
  if (cfg.out_dir.empty()) {
    std::cout << text;
  } else {
    write_text_file(cfg.out_dir + "/report.json", text);
  }
}

Json base_report(const char* command, const RunConfig& cfg) {
  Json j;
  j["schema"] = "qham/1";
  j["command"] = command;
  j["config_echo"] = config_echo(cfg);
  j["results"] = Json::object();
  j["residuals"] = Json::object();
  j["timings"] = Json::object();  // deterministic work counters
  return j;
}

int cmd_verify_axioms(const CliState& st) {
  const RunConfig cfg = build_config(st, true);
  const SpaceSpec spec = cfg.spec();
  Json report = base_report("verify-axioms", cfg);

  const bool exterior_supported =
      spec.kind == SpaceKind::class_product && spec.n == 2 &&
      spec.factor_count() <= 2;
  double worst_iii = 0.0;
  double exterior = -1.0;
  int kernel_mismatches = 0;
  Json per_point = Json::array();
  for (int i = 0; i < cfg.samples; ++i) {
    RngStream rng(cfg.seed, static_cast<std::uint64_t>(i));
    const QSpacePoint x = sample_point(spec, rng);
    const bool with_exterior = exterior_supported && i < 5;
    const AxiomReport rep = run_axiom_checks(
        spec, x, cfg.tol.nullspace_rel,
        with_exterior ? cfg.tol.exterior_step : 0.0);
    worst_iii = std::max(worst_iii, rep.residual_iii);
    if (rep.kernel_dim_measured != rep.kernel_dim_predicted) {
      ++kernel_mismatches;
    }
    if (rep.residual_i >= 0.0) exterior = std::max(exterior, rep.residual_i);
    Json one;
    one["residual_iii"] = rep.residual_iii;
    one["kernel_measured"] = rep.kernel_dim_measured;
    one["kernel_predicted"] = rep.kernel_dim_predicted;
    if (rep.residual_i >= 0.0) one["residual_i"] = rep.residual_i;
    per_point.push_back(one);
  }

  const bool pass_iii = worst_iii < cfg.tol.axiom3;
  const bool pass_ii = kernel_mismatches == 0;
  const bool pass_i =
      !exterior_supported || (exterior >= 0.0 && exterior < cfg.tol.exterior_pass);

  report["results"]["axiom_iii_pass"] = pass_iii;
  report["results"]["axiom_ii_pass"] = pass_ii;
  report["results"]["axiom_i"] =
      exterior_supported ? Json(pass_i) : Json("skipped (supported on SU(2) class products with <= 2 factors)");
  report["residuals"]["axiom_iii_max"] = worst_iii;
  report["residuals"]["kernel_mismatches"] = kernel_mismatches;
  if (exterior_supported) report["residuals"]["axiom_i_fd"] = exterior;
  report["residuals"]["per_point"] = per_point;
  report["timings"]["points_checked"] = cfg.samples;
  emit_report(cfg, report);
  return (pass_iii && pass_ii && pass_i) ? 0 : 1;
}

int cmd_verify_involution(const CliState& st) {
  const RunConfig cfg = build_config(st, true);
  if (cfg.is_double) {
    throw ConfigError("the involution is not defined on the double");
  }
  const SpaceSpec spec = cfg.spec();
  Json report = base_report("verify-involution", cfg);

  RngStream rng(cfg.seed, 0);
  const HypothesisReport rep =
      validate_hypotheses(spec, cfg.samples, rng, cfg.tol);

  const bool pass = rep.residual_involutivity < cfg.tol.involution_exact &&
                    rep.residual_equivariance < cfg.tol.involution_exact &&
                    rep.residual_momentum_compat < cfg.tol.involution_exact &&
                    rep.residual_form_reversal < cfg.tol.form_reversal &&
                    rep.fixed_points_found > 0 && rep.q0_witness;

  report["results"]["pass"] = pass;
  report["results"]["fixed_points_found"] = rep.fixed_points_found;
  report["results"]["q0_witness"] = rep.q0_witness;
  report["residuals"]["involutivity"] = rep.residual_involutivity;
  report["residuals"]["equivariance"] = rep.residual_equivariance;
  report["residuals"]["momentum_compat"] = rep.residual_momentum_compat;
  report["residuals"]["form_reversal"] = rep.residual_form_reversal;
  report["timings"]["points_checked"] = cfg.samples;
  emit_report(cfg, report);
  return pass ? 0 : 1;
}

int cmd_sample(const CliState& st) {
  const RunConfig cfg = build_config(st, true);
  const SpaceSpec spec = cfg.spec();
  if (st.source != "full" && st.source != "fixed") {
    throw ConfigError("--source must be full or fixed");
  }
  const SampleSource source = st.source == "full"
                                  ? SampleSource::full_space
                                  : SampleSource::fixed_point_set;
  const SampleBatch batch =
      sample_momentum_image(spec, cfg.samples, cfg.seed, source, cfg.tol);

  Json report = base_report("sample", cfg);
  report["results"]["count"] = batch.count;
  report["results"]["source"] = st.source;
  Vector lo = batch.points.front().angles, hi = lo;
  for (const AlcovePoint& p : batch.points) {
    lo = lo.cwiseMin(p.angles);
    hi = hi.cwiseMax(p.angles);
  }
  report["results"]["min_angles"] = alcove_to_json(AlcovePoint(lo));
  report["results"]["max_angles"] = alcove_to_json(AlcovePoint(hi));
  report["timings"]["samples_drawn"] = batch.count;
  emit_report(cfg, report);
  if (!cfg.out_dir.empty()) {
    write_text_file(cfg.out_dir + "/samples.csv", batch_to_csv(batch));
  }
  return 0;
}

int cmd_polytope(const CliState& st) {
  const RunConfig cfg = build_config(st, true);
  const SpaceSpec spec = cfg.spec();
  const SampleBatch batch = sample_momentum_image(
      spec, cfg.samples, cfg.seed, SampleSource::full_space, cfg.tol);
  const Hull hull = convex_hull(batch, cfg.tol.hull_dedup);

  Json report = base_report("polytope", cfg);
  report["results"]["hull"] = hull_to_json(hull);
  report["results"]["principal_face"] =
      principal_face(batch.points, cfg.tol.wall).to_string();
  report["results"]["contains_identity"] =
      contains_identity(hull, cfg.tol.contains_tol);
  bool degenerate = false;
  const double score =
      convexity_score(batch, cfg.tol.score_grid, 0.0, &degenerate);
  report["results"]["convexity_score"] = score;
  report["results"]["score_degenerate"] = degenerate;
  report["timings"]["samples_drawn"] = batch.count;
  emit_report(cfg, report);
  if (!cfg.out_dir.empty()) {
    write_text_file(cfg.out_dir + "/samples.csv", batch_to_csv(batch));
    if (cfg.n <= 3) {
      write_text_file(cfg.out_dir + "/figure.svg",
                      convexity_svg(batch, batch, hull, hull));
    }
  }
  return 0;
}

int cmd_real_convexity(const CliState& st) {
  const RunConfig cfg = build_config(st, true);
  if (cfg.n > 4) throw ConfigError("real-convexity supports rank <= 4");
  const SpaceSpec spec = cfg.spec();
  const int fixed_count = cfg.effective_fixed_samples();
  const ConvexityVerdict v = compare_real_convexity(
      spec, cfg.samples, fixed_count, cfg.seed, cfg.tol);

  Json report = base_report("real-convexity", cfg);
  report["results"]["pass"] = v.pass;
  report["results"]["hausdorff"] = v.hausdorff_distance;
  report["results"]["score_full"] = v.score_full;
  report["results"]["score_fixed"] = v.score_fixed;
  report["results"]["degenerate"] = v.degenerate;
  report["results"]["hull_full"] = hull_to_json(v.hull_full);
  report["results"]["hull_fixed"] = hull_to_json(v.hull_fixed);
  report["results"]["contains_identity"] =
      contains_identity(v.hull_full, cfg.tol.contains_tol);
  report["timings"]["full_samples"] = cfg.samples;
  report["timings"]["fixed_samples"] = fixed_count;
  emit_report(cfg, report);

  if (!cfg.out_dir.empty() && cfg.n <= 3) {
    const SampleBatch full = sample_momentum_image(
        spec, std::min(cfg.samples, 20000), cfg.seed, SampleSource::full_space,
        cfg.tol);
    const SampleBatch fixed = sample_momentum_image(
        spec, fixed_count, cfg.seed + 1, SampleSource::fixed_point_set,
        cfg.tol);
    write_text_file(cfg.out_dir + "/figure.svg",
                    convexity_svg(full, fixed, v.hull_full, v.hull_fixed));
  }
  return v.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "momentum polytopes and involution fixed-point images for SU(n) "
      "conjugacy-class products.\n"
      "Coordinates: classes and samples use eigen-angles (radians, sorted "
      "descending, zero sum, spread <= 2*pi). Hulls are reported in "
      "orthonormal coordinates of the zero-sum hyperplane; rescaling to a "
      "normalized alcove is the fixed linear map given by that frame."};
  app.require_subcommand(1);
  CliState st;

  CLI::App* a = app.add_subcommand(
      "verify-axioms", "check the structural identities of the two-form");
  add_common(a, st);
  CLI::App* b = app.add_subcommand(
      "verify-involution",
      "check the involution hypotheses and fixed-point witnesses");
  add_common(b, st);
  CLI::App* c = app.add_subcommand("sample", "dump momentum-image samples");
  add_common(c, st, true);
  CLI::App* d =
      app.add_subcommand("polytope", "momentum polytope of the full space");
  add_common(d, st);
  CLI::App* e = app.add_subcommand(
      "real-convexity",
      "compare the full and fixed-point momentum images");
  add_common(e, st);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    if (err.get_exit_code() == 0) return app.exit(err);  // --help
    app.exit(err);
    return 2;
  }

  try {
    if (a->parsed()) return cmd_verify_axioms(st);
    if (b->parsed()) return cmd_verify_involution(st);
    if (c->parsed()) return cmd_sample(st);
    if (d->parsed()) return cmd_polytope(st);
    if (e->parsed()) return cmd_real_convexity(st);
  } catch (const ConfigError& err) {
    std::cerr << "config error: " << err.what() << "\n";
    return 2;
  } catch (const SolverAbortError& err) {
    std::cerr << "solver abort: " << err.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& err) {
    std::cerr << "config error: " << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  return 2;
}
