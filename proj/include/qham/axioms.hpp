#pragma once

#include "qham/qspace.hpp"

namespace qham {

struct AxiomReport {
  QSpacePoint point;
  double residual_iii = 0.0;
  int kernel_dim_measured = 0;
  int kernel_dim_predicted = 0;
  double residual_i = -1.0;  // < 0 when the exterior check was not run
};

// All checks at one point. The exterior check runs only when
// exterior_step > 0 and the spec is in its supported scope.
AxiomReport run_axiom_checks(const SpaceSpec& spec, const QSpacePoint& x,
                             double nullspace_tol, double exterior_step);

// Contraction identity: the interior product of the two-form with a
// fundamental field against the averaged Maurer-Cartan pullback of the
// momentum map. Returns the max residual over an orthonormal algebra
// basis and the tangent basis at x.
double check_axiom_three(const SpaceSpec& spec, const QSpacePoint& x);

// Kernel dimension of the two-form at x, measured from the Gram matrix
// on the tangent basis, against the span of fundamental vectors of the
// (-1)-eigenspace of Ad momentum(x).
struct KernelCheck {
  int measured = 0;
  int predicted = 0;
};
KernelCheck check_axiom_kernel(const SpaceSpec& spec, const QSpacePoint& x,
                               double tol = 1e-8);

// Exterior-derivative identity d(omega) = -mu^* chi, evaluated through a
// conjugator chart by second-order central differences. Supported for
// SU(2) class products with at most two factors. Returns the max residual
// over a fixed set of coordinate triples.
double check_axiom_exterior(const SpaceSpec& spec, const QSpacePoint& x,
                            double chart_step);

}  // namespace qham
