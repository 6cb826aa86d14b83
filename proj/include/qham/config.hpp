#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qham/qspace.hpp"
#include "qham/report.hpp"

namespace qham {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int n = 2;
  std::vector<AlcovePoint> classes;
  bool is_double = false;
  int samples = 100;
  int fixed_samples = 0;  // 0: max(samples / 100, 100)
  std::uint64_t seed = 0;
  std::string out_dir;
  Tolerances tol;
  std::vector<std::string> warnings;

  SpaceSpec spec() const;
  int effective_fixed_samples() const;
};

// "su3" -> 3
int parse_group(const std::string& s);

// "a1,a2,...;b1,b2,..." -> class points. Tuples are sorted descending and
// shifted to zero sum (a warning is recorded when the shift is material).
std::vector<AlcovePoint> parse_classes(const std::string& s, int n,
                                       std::vector<std::string>* warnings);

// partial overrides of the tolerance record from a JSON object
Tolerances tolerances_from_json(const Json& j, const Tolerances& base = {});
Tolerances load_tolerance_file(const std::string& path,
                               const Tolerances& base = {});

Json config_echo(const RunConfig& cfg);

}  // namespace qham
