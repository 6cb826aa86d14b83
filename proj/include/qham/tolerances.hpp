#pragma once

#include <string>

namespace qham {

// Central tolerance/threshold record shared by the library, the tests and
// the CLI. Values are overridable from a JSON file (see config.cpp).
struct Tolerances {
  // matrix invariants
  double unitarity = 1e-10;       // ||g*g - 1||_max for group elements
  double algebra = 1e-12;         // anti-Hermitian / traceless residual
  double alcove = 1e-10;          // alcove ordering / zero-sum slack

  // weyl
  double wall = 1e-7;             // face / eigenvalue-cluster detection
  double class_membership = 1e-8; // factor-vs-class alcove distance

  // axioms
  double axiom3 = 1e-8;           // contraction-identity residual
  double nullspace_rel = 1e-8;    // singular values below rel*max count as 0
  double exterior_step = 1e-4;    // FD step for the exterior-derivative check
  double exterior_pass = 1e-4;

  // involution
  double involution_exact = 1e-10;   // algebraic identities (equivariance, ...)
  double form_reversal = 1e-5;       // FD-limited pullback residual
  double beta_fixed = 1e-8;          // ||beta(x) - x|| for a fixed point
  double symmetric = 1e-8;           // partial-product symmetry
  double q0_input_symmetry = 1e-8;

  // fixed-point solver (frozen for reproducible success rates)
  double solver_objective = 1e-16;
  double solver_step_init = 0.1;
  double solver_armijo_c = 1e-4;
  double solver_shrink = 0.5;
  int solver_max_iters = 500;
  double solver_fd_step = 1e-6;

  // polytope
  double hull_dedup = 1e-9;
  double hausdorff_pass = 0.05;
  double score_pass = 0.99;
  double endpoint_pass = 0.02;
  int score_grid = 50;
  double contains_tol = 1e-6;

  // misc finite differences
  double fd_step = 1e-5;
};

}  // namespace qham
