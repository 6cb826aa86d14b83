#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>

#include "qham/involution.hpp"
#include "qham/qspace.hpp"

namespace qham {

enum class SampleSource { full_space, fixed_point_set };

struct SampleBatch {
  SpaceSpec spec;
  std::vector<AlcovePoint> points;
  int count = 0;
  std::uint64_t seed = 0;
  SampleSource source = SampleSource::full_space;
};

// Raised when the beta-fixed sampler diverges too often to trust a batch.
struct SolverAbortError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Orthonormal rows spanning the zero-sum hyperplane of R^n; alcove points
// are embedded as y = frame * angles before any hull computation.
Eigen::MatrixXd zero_sum_frame(int n);
Eigen::VectorXd embed_alcove(const AlcovePoint& p);
AlcovePoint unembed_alcove(const Eigen::VectorXd& y, int n);

// Convex hull of an embedded batch. The hull carries its own affine frame
// so flat batches (dim < n-1) stay exact:  ambient = origin + basis * local.
struct Hull {
  struct Facet {
    Eigen::VectorXd normal;  // local coords, unit length
    double offset = 0.0;     // normal . x <= offset
  };

  int ambient_dim = 0;
  int dim = 0;
  Eigen::VectorXd origin;
  Eigen::MatrixXd basis;  // ambient_dim x dim
  std::vector<Eigen::VectorXd> vertices;  // local coords
  std::vector<Facet> facets;
  std::vector<std::array<int, 2>> edges;      // dim == 2 boundary loop
  std::vector<std::array<int, 3>> triangles;  // dim == 3 boundary mesh

  Eigen::VectorXd vertex_ambient(int i) const {
    return origin + basis * vertices[i];
  }
  // exact distance from an ambient point to the hull (0 inside)
  double distance(const Eigen::VectorXd& ambient_point) const;
};

Hull convex_hull(const SampleBatch& batch, double dedup = 1e-9);

// Fraction of grid points inside the hull (margin eps from every facet)
// that lie within eps of a sample. eps <= 0 selects the default
// max(3 * mean nearest-neighbour spacing, hull diameter / 25).
// A hull without interior sets *degenerate and scores 1.
double convexity_score(const SampleBatch& batch, int grid_res, double eps,
                       bool* degenerate = nullptr);

double hausdorff(const Hull& a, const Hull& b);

bool contains_identity(const Hull& h, double tol);

SampleBatch sample_momentum_image(const SpaceSpec& spec, int count,
                                  std::uint64_t seed, SampleSource source,
                                  const Tolerances& tol = {});

struct ConvexityVerdict {
  Hull hull_full;
  Hull hull_fixed;
  double hausdorff_distance = 0.0;
  double score_full = 1.0;
  double score_fixed = 1.0;
  bool degenerate = false;
  bool pass = false;
};

ConvexityVerdict compare_real_convexity(const SpaceSpec& spec, int full_count,
                                        int fixed_count, std::uint64_t seed,
                                        const Tolerances& tol = {});

}  // namespace qham
