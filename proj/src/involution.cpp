#include "qham/involution.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace qham {

namespace {

double max_abs_diff(const QSpacePoint& a, const QSpacePoint& b) {
  double worst = 0.0;
  for (std::size_t j = 0; j < a.factors.size(); ++j) {
    worst = std::max(worst,
                     (a.factors[j].m - b.factors[j].m).cwiseAbs().maxCoeff());
  }
  return worst;
}
}  // namespace

GroupElement tau(const GroupElement& g) { return GroupElement(g.m.conjugate()); }

GroupElement tau_minus(const GroupElement& g) {
  return tau(GroupElement(g.m.adjoint()));
}

bool check_property_P(int n, int samples, RngStream& rng) {
  if (n < 2) throw std::invalid_argument("check_property_P: n must be >= 2");
  for (int s = 0; s < samples; ++s) {
    Vector angles(n);
    double sum = 0.0;
    for (int i = 0; i + 1 < n; ++i) {
      angles[i] = rng.uniform(-std::numbers::pi, std::numbers::pi);
      sum += angles[i];
    }
    angles[n - 1] = -sum;
    Matrix t = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i) t(i, i) = std::polar(1.0, angles[i]);
    const GroupElement torus_el{t};
    if ((tau_minus(torus_el).m - torus_el.m).cwiseAbs().maxCoeff() > 1e-14) {
      return false;
    }
  }
  return true;
}

QSpacePoint beta(const SpaceSpec& spec, const QSpacePoint& x) {
  if (spec.kind != SpaceKind::class_product) {
    throw std::invalid_argument("beta: supported only on class products");
  }
  const int n = spec.n;
  QSpacePoint out;
  out.factors.reserve(x.factors.size());
  Matrix w = Matrix::Identity(n, n);  // partial product before factor j
  for (const GroupElement& u : x.factors) {
    const Matrix img = w * u.m.adjoint() * w.adjoint();
    out.factors.push_back(GroupElement(img.conjugate()));
    w = w * u.m;
  }
  return out;
}

std::vector<QSpacePoint> fixed_point_torus_family(const SpaceSpec& spec) {
  if (spec.kind != SpaceKind::class_product) {
    throw std::invalid_argument(
        "fixed_point_torus_family: supported only on class products");
  }
  const int n = spec.n;
  // distinct diagonal representatives per class
  std::vector<std::vector<Matrix>> reps(spec.class_points.size());
  for (std::size_t c = 0; c < spec.class_points.size(); ++c) {
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<Vector> seen;
    do {
      Vector perm(n);
      for (int i = 0; i < n; ++i) perm[i] = spec.class_points[c].angles[idx[i]];
      bool dup = false;
      for (const Vector& v : seen) {
        if ((v - perm).cwiseAbs().maxCoeff() < 1e-12) {
          dup = true;
          break;
        }
      }
      if (dup) continue;
      seen.push_back(perm);
      Matrix d = Matrix::Zero(n, n);
      for (int i = 0; i < n; ++i) d(i, i) = std::polar(1.0, perm[i]);
      reps[c].push_back(std::move(d));
    } while (std::next_permutation(idx.begin(), idx.end()));
  }

  std::vector<QSpacePoint> out;
  const std::size_t cap = 10000;
  std::vector<std::size_t> counter(reps.size(), 0);
  while (out.size() < cap) {
    QSpacePoint x;
    for (std::size_t c = 0; c < reps.size(); ++c) {
      x.factors.push_back(GroupElement(reps[c][counter[c]]));
    }
    out.push_back(std::move(x));
    std::size_t c = 0;
    while (c < reps.size()) {
      if (++counter[c] < reps[c].size()) break;
      counter[c] = 0;
      ++c;
    }
    if (c == reps.size()) break;  // full cartesian product enumerated
  }
  return out;
}

SolveResult fixed_point_solve(const SpaceSpec& spec, RngStream& rng,
                              const Tolerances& tol) {
  if (spec.kind != SpaceKind::class_product) {
    throw std::invalid_argument(
        "fixed_point_solve: supported only on class products");
  }
  const int n = spec.n;
  SolveResult result;
  QSpacePoint x;

  // factor 1: exact symmetric representative
  const GroupElement q = haar_sample_so(n, rng);
  x.factors.push_back(GroupElement(
      q.m * alcove_exp(spec.class_points[0]).m * q.m.transpose()));

  const std::vector<AlgebraElement> basis = su_basis(n);
  Matrix w = x.factors[0].m;

  for (std::size_t j = 1; j < spec.class_points.size(); ++j) {
    const Matrix c = alcove_exp(spec.class_points[j]).m;
    GroupElement h = haar_sample(n, rng);
    auto objective = [&](const GroupElement& conj) {
      const Matrix m = w * conj.m * c * conj.m.adjoint();
      return (m - m.transpose().eval()).squaredNorm();
    };
    double f = objective(h);
    double step = tol.solver_step_init;
    int it = 0;
    const double eps = tol.solver_fd_step;
    while (f > tol.solver_objective && it < tol.solver_max_iters) {
      Eigen::VectorXd grad(basis.size());
      for (std::size_t k = 0; k < basis.size(); ++k) {
        const GroupElement hp(exp_alg(AlgebraElement(eps * basis[k].m)).m *
                              h.m);
        const GroupElement hm(exp_alg(AlgebraElement(-eps * basis[k].m)).m *
                              h.m);
        grad[k] = (objective(hp) - objective(hm)) / (2.0 * eps);
      }
      const double g2 = grad.squaredNorm();
      if (g2 < 1e-30) break;
      double s = step;
      GroupElement next = h;
      double fn = f;
      while (s > 1e-20) {
        Matrix dir = Matrix::Zero(n, n);
        for (std::size_t k = 0; k < basis.size(); ++k) {
          dir -= s * grad[k] * basis[k].m;
        }
        next = GroupElement(exp_alg(AlgebraElement(std::move(dir))).m * h.m);
        fn = objective(next);
        if (fn <= f - tol.solver_armijo_c * s * g2) break;
        s *= tol.solver_shrink;
      }
      h = next;
      f = fn;
      step = 2.0 * s;  // carry the accepted scale into the next search
      ++it;
    }
    result.iterations += it;
    result.final_objective = f;
    if (f > tol.solver_objective) {
      return result;  // non-convergence: point stays empty
    }
    x.factors.push_back(GroupElement(h.m * c * h.m.adjoint()));
    w = w * x.factors.back().m;
  }

  if (max_abs_diff(beta(spec, x), x) > tol.beta_fixed) {
    return result;
  }
  result.point = std::move(x);
  return result;
}

SymmetricFactorization takagi_symmetric_unitary(const GroupElement& g) {
  const int n = g.rank();
  // real and imaginary parts of a symmetric unitary commute and are
  // simultaneously diagonalizable over a real orthogonal frame
  const Eigen::MatrixXd re = g.m.real();
  const Eigen::MatrixXd im = g.m.imag();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(re);
  Eigen::MatrixXd frame = es.eigenvectors();
  const Eigen::VectorXd w = es.eigenvalues();
  int i = 0;
  while (i < n) {
    int j = i;
    while (j + 1 < n && std::abs(w[j + 1] - w[i]) < 1e-8) ++j;
    if (j > i) {
      const int sz = j - i + 1;
      const Eigen::MatrixXd block =
          frame.middleCols(i, sz).transpose() * im * frame.middleCols(i, sz);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> bs(
          0.5 * (block + block.transpose()));
      frame.middleCols(i, sz) = frame.middleCols(i, sz) * bs.eigenvectors();
    }
    i = j + 1;
  }
  const Eigen::VectorXd dre = (frame.transpose() * re * frame).diagonal();
  const Eigen::VectorXd dim = (frame.transpose() * im * frame).diagonal();
  Vector angles(n);
  for (int k = 0; k < n; ++k) angles[k] = std::atan2(dim[k], dre[k]);
  angles = zero_sum_branch(angles);

  SymmetricFactorization out;
  out.frame = frame;
  out.angles = angles;
  Eigen::VectorXcd half(n);
  for (int k = 0; k < n; ++k) half[k] = std::polar(1.0, 0.5 * angles[k]);
  out.v = frame.cast<Cplx>() * half.asDiagonal() *
          frame.transpose().cast<Cplx>();

  const Matrix rebuilt = out.v * out.v.transpose();
  if ((rebuilt - g.m).cwiseAbs().maxCoeff() > 1e-8) {
    throw std::runtime_error(
        "takagi_symmetric_unitary: factorization failed (ill-conditioned "
        "input)");
  }
  return out;
}

bool q0_certificate(const GroupElement& g, int path_samples,
                    const Tolerances& tol) {
  if ((tau_minus(g).m - g.m).cwiseAbs().maxCoeff() > tol.q0_input_symmetry) {
    throw std::invalid_argument("q0_certificate: input is not symmetric");
  }
  const SymmetricFactorization f = takagi_symmetric_unitary(g);
  const int n = g.rank();
  for (int s = 0; s <= path_samples; ++s) {
    const double t = static_cast<double>(s) / path_samples;
    Eigen::VectorXcd ph(n);
    for (int k = 0; k < n; ++k) ph[k] = std::polar(1.0, t * f.angles[k]);
    const Matrix gt = f.frame.cast<Cplx>() * ph.asDiagonal() *
                      f.frame.transpose().cast<Cplx>();
    const GroupElement el{gt};
    if ((gt - gt.transpose().eval()).cwiseAbs().maxCoeff() > 1e-9) return false;
    if (el.unitarity_defect() > 1e-9 || el.det_defect() > 1e-9) return false;
  }
  Eigen::VectorXcd ph(n);
  for (int k = 0; k < n; ++k) ph[k] = std::polar(1.0, f.angles[k]);
  const Matrix end = f.frame.cast<Cplx>() * ph.asDiagonal() *
                     f.frame.transpose().cast<Cplx>();
  return (end - g.m).cwiseAbs().maxCoeff() <= 1e-8;
}

HypothesisReport validate_hypotheses(const SpaceSpec& spec, int sample_count,
                                     RngStream& rng, const Tolerances& tol) {
  if (spec.kind != SpaceKind::class_product) {
    throw std::invalid_argument(
        "validate_hypotheses: supported only on class products");
  }
  HypothesisReport rep;
  const int n = spec.n;

  for (int s = 0; s < sample_count; ++s) {
    const QSpacePoint x = sample_point(spec, rng);
    const QSpacePoint bx = beta(spec, x);

    rep.residual_involutivity =
        std::max(rep.residual_involutivity, max_abs_diff(beta(spec, bx), x));

    const GroupElement g = haar_sample(n, rng);
    rep.residual_equivariance = std::max(
        rep.residual_equivariance,
        max_abs_diff(beta(spec, act(spec, g, x)), act(spec, tau(g), bx)));

    rep.residual_momentum_compat =
        std::max(rep.residual_momentum_compat,
                 (momentum(spec, bx).m - tau_minus(momentum(spec, x)).m)
                     .cwiseAbs()
                     .maxCoeff());

    // form reversal via FD push-forward of beta along class curves
    const std::vector<SpaceTangent> tb = tangent_basis(spec, x);
    const double h = tol.fd_step;
    auto push = [&](const SpaceTangent& v) {
      std::vector<AlgebraElement> gens;
      gens.reserve(x.factors.size());
      for (std::size_t j = 0; j < x.factors.size(); ++j) {
        gens.push_back(class_generator(x.factors[j], v.blocks[j]));
      }
      auto move_along = [&](double t) {
        QSpacePoint y;
        for (std::size_t j = 0; j < x.factors.size(); ++j) {
          const Matrix e = exp_alg(AlgebraElement(t * gens[j].m)).m;
          y.factors.push_back(GroupElement(e * x.factors[j].m * e.adjoint()));
        }
        return beta(spec, y);
      };
      const QSpacePoint bp = move_along(h), bm = move_along(-h);
      SpaceTangent out;
      for (std::size_t j = 0; j < x.factors.size(); ++j) {
        out.blocks.push_back((bp.factors[j].m - bm.factors[j].m) / (2.0 * h));
      }
      return out;
    };
    const std::size_t pairs = std::min<std::size_t>(tb.size(), 4);
    std::vector<SpaceTangent> pushed;
    for (std::size_t i = 0; i < pairs; ++i) pushed.push_back(push(tb[i]));
    for (std::size_t i = 0; i < pairs; ++i) {
      for (std::size_t j = i + 1; j < pairs; ++j) {
        const double forward = two_form(spec, x, tb[i], tb[j]);
        const double reversed = two_form(spec, bx, pushed[i], pushed[j]);
        rep.residual_form_reversal =
            std::max(rep.residual_form_reversal, std::abs(reversed + forward));
      }
    }
  }

  // (iv): explicit fixed points
  const std::vector<QSpacePoint> family = fixed_point_torus_family(spec);
  int fixed = 0;
  bool all_q0 = true;
  std::size_t cert_budget = 0;
  for (const QSpacePoint& p : family) {
    if (max_abs_diff(beta(spec, p), p) <= tol.beta_fixed) {
      ++fixed;
      if (cert_budget < 100) {
        all_q0 = all_q0 && q0_certificate(momentum(spec, p), 33, tol);
        ++cert_budget;
      }
    }
  }
  // a few solver outputs give non-diagonal certificates
  for (int attempt = 0; attempt < 3; ++attempt) {
    const SolveResult sr = fixed_point_solve(spec, rng, tol);
    if (sr.ok()) {
      ++fixed;
      all_q0 = all_q0 && q0_certificate(momentum(spec, *sr.point), 33, tol);
    }
  }
  rep.fixed_points_found = fixed;
  rep.q0_witness = fixed > 0 && all_q0;
  return rep;
}

}  // namespace qham
