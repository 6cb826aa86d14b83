#pragma once

#include <optional>

#include "qham/qspace.hpp"

namespace qham {

// The shipped involution pair on SU(n): tau is entrywise conjugation,
// tau_minus(g) = tau(g^{-1}), which is the transpose for unitary g.
GroupElement tau(const GroupElement& g);
GroupElement tau_minus(const GroupElement& g);

// True iff tau_minus fixes the diagonal maximal torus pointwise
// (sampled check; maximality of the diagonal torus is structural).
bool check_property_P(int n, int samples, RngStream& rng);

// Form-reversing involution on class products, built from twisted
// reversal of the factors through the partial products.
QSpacePoint beta(const SpaceSpec& spec, const QSpacePoint& x);

struct HypothesisReport {
  double residual_involutivity = 0.0;
  double residual_equivariance = 0.0;
  double residual_momentum_compat = 0.0;
  double residual_form_reversal = 0.0;
  int fixed_points_found = 0;
  bool q0_witness = false;
};

HypothesisReport validate_hypotheses(const SpaceSpec& spec, int sample_count,
                                     RngStream& rng,
                                     const Tolerances& tol = {});

// Diagonal-representative fixed points: every tuple of eigen-angle
// permutations of the classes (deduplicated, capped at 10^4 tuples).
std::vector<QSpacePoint> fixed_point_torus_family(const SpaceSpec& spec);

struct SolveResult {
  std::optional<QSpacePoint> point;
  double final_objective = 0.0;
  int iterations = 0;

  bool ok() const { return point.has_value(); }
};

// Samples a point of the beta-fixed set by making every partial product
// symmetric: factor 1 by exact construction, later factors by asymmetry
// minimization over class conjugators (FD gradient, Armijo backtracking).
SolveResult fixed_point_solve(const SpaceSpec& spec, RngStream& rng,
                              const Tolerances& tol = {});

// Factorization g = v v^T of a symmetric special unitary with v unitary;
// the returned frame/angles realize g = frame * e^{i diag(angles)} * frame^T
// with a real orthogonal frame and zero-sum angles.
struct SymmetricFactorization {
  Matrix v;
  Eigen::MatrixXd frame;
  Vector angles;
};
SymmetricFactorization takagi_symmetric_unitary(const GroupElement& g);

// Constructive membership certificate for the identity component of the
// tau_minus fixed set: builds the factorization above and checks the path
// t -> frame e^{i t diag(angles)} frame^T pointwise.
bool q0_certificate(const GroupElement& g, int path_samples = 33,
                    const Tolerances& tol = {});

}  // namespace qham
