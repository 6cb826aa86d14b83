#include "qham/axioms.hpp"

#include <Eigen/SVD>
#include <array>
#include <cmath>
#include <stdexcept>

namespace qham {

AxiomReport run_axiom_checks(const SpaceSpec& spec, const QSpacePoint& x,
                             double nullspace_tol, double exterior_step) {
  AxiomReport rep;
  rep.point = x;
  rep.residual_iii = check_axiom_three(spec, x);
  const KernelCheck kc = check_axiom_kernel(spec, x, nullspace_tol);
  rep.kernel_dim_measured = kc.measured;
  rep.kernel_dim_predicted = kc.predicted;
  if (exterior_step > 0.0 && spec.kind == SpaceKind::class_product &&
      spec.n == 2 && spec.factor_count() <= 2) {
    rep.residual_i = check_axiom_exterior(spec, x, exterior_step);
  }
  return rep;
}

double check_axiom_three(const SpaceSpec& spec, const QSpacePoint& x) {
  const GroupElement mu = momentum(spec, x);
  const std::vector<AlgebraElement> basis = su_basis(spec.n);
  const std::vector<SpaceTangent> tb = tangent_basis(spec, x);
  double worst = 0.0;
  for (const AlgebraElement& gen : basis) {
    const SpaceTangent xs = fundamental_vector(x, gen);
    for (const SpaceTangent& v : tb) {
      const double lhs = two_form(spec, x, xs, v);
      const TangentVector dv = momentum_differential(spec, x, v);
      const AlgebraElement pulled(
          Matrix(mu.m.adjoint() * dv.ambient + dv.ambient * mu.m.adjoint()));
      const double rhs = 0.5 * inner(pulled, gen);
      worst = std::max(worst, std::abs(lhs - rhs));
    }
  }
  return worst;
}

KernelCheck check_axiom_kernel(const SpaceSpec& spec, const QSpacePoint& x,
                               double tol) {
  KernelCheck out;
  const std::vector<SpaceTangent> tb = tangent_basis(spec, x);
  const int d = static_cast<int>(tb.size());

  // measured: null space of the Gram matrix of the two-form
  if (d > 0) {
    Eigen::MatrixXd gram(d, d);
    for (int i = 0; i < d; ++i) {
      gram(i, i) = 0.0;
      for (int j = i + 1; j < d; ++j) {
        const double w = two_form(spec, x, tb[i], tb[j]);
        gram(i, j) = w;
        gram(j, i) = -w;
      }
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(gram);
    const auto& sv = svd.singularValues();
    const double top = sv.size() > 0 ? sv[0] : 0.0;
    if (top <= 0.0) {
      out.measured = d;
    } else {
      for (int i = 0; i < sv.size(); ++i) {
        if (sv[i] < tol * top) ++out.measured;
      }
    }
  }

  // predicted: rank of fundamental vectors of the (-1)-eigenspace of
  // Ad momentum(x). In the eigenbasis of mu, Ad acts on the (a,b) entry by
  // e^{i(theta_a - theta_b)}; the -1 eigenvalue picks the pairs with angle
  // difference pi.
  const GroupElement mu = momentum(spec, x);
  const UnitarySpectrum sp = unitary_spectrum(mu);
  const int n = spec.n;
  std::vector<AlgebraElement> minus_one;
  const double s = 1.0 / std::sqrt(2.0);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const Cplx ratio = std::polar(1.0, sp.angles[a] - sp.angles[b]);
      if (std::abs(ratio + Cplx(1.0, 0.0)) > 1e-8) continue;
      for (int which = 0; which < 2; ++which) {
        Matrix y = Matrix::Zero(n, n);
        if (which == 0) {
          y(a, b) = s;
          y(b, a) = -s;
        } else {
          y(a, b) = Cplx(0.0, s);
          y(b, a) = Cplx(0.0, s);
        }
        minus_one.emplace_back(
            Matrix(sp.frame * y * sp.frame.adjoint()));
      }
    }
  }
  if (!minus_one.empty()) {
    const int m = static_cast<int>(minus_one.size());
    const int l = static_cast<int>(x.factors.size());
    Eigen::MatrixXd gram(m, m);
    std::vector<SpaceTangent> imgs;
    imgs.reserve(m);
    for (const AlgebraElement& z : minus_one) {
      imgs.push_back(fundamental_vector(x, z));
    }
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        double dot = 0.0;
        for (int k = 0; k < l; ++k) {
          dot += (imgs[i].blocks[k].adjoint() * imgs[j].blocks[k])
                     .trace()
                     .real();
        }
        gram(i, j) = dot;
      }
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(gram);
    const auto& sv = svd.singularValues();
    const double top = sv.size() > 0 ? sv[0] : 0.0;
    if (top > 0.0) {
      for (int i = 0; i < sv.size(); ++i) {
        if (sv[i] >= tol * top) ++out.predicted;
      }
    }
  }
  return out;
}

namespace {

// chart around x: each factor conjugated by exp of an algebra combination,
// one full su(n) coordinate block per factor
struct ConjChart {
  const QSpacePoint* base;
  std::vector<AlgebraElement> basis;
  int per_factor;

  QSpacePoint at(const Eigen::VectorXd& t) const {
    QSpacePoint y;
    const int l = static_cast<int>(base->factors.size());
    for (int j = 0; j < l; ++j) {
      Matrix a = Matrix::Zero(base->rank(), base->rank());
      for (int k = 0; k < per_factor; ++k) {
        a += t[j * per_factor + k] * basis[k].m;
      }
      const GroupElement h = exp_alg(AlgebraElement(a));
      y.factors.push_back(
          GroupElement(h.m * base->factors[j].m * h.m.adjoint()));
    }
    return y;
  }

  SpaceTangent coordinate_field(const Eigen::VectorXd& t, int i,
                                double h) const {
    Eigen::VectorXd tp = t, tm = t;
    tp[i] += h;
    tm[i] -= h;
    const QSpacePoint xp = at(tp), xm = at(tm);
    SpaceTangent v;
    for (std::size_t j = 0; j < xp.factors.size(); ++j) {
      v.blocks.push_back((xp.factors[j].m - xm.factors[j].m) / (2.0 * h));
    }
    return v;
  }
};

}  // namespace

double check_axiom_exterior(const SpaceSpec& spec, const QSpacePoint& x,
                            double chart_step) {
  if (spec.kind != SpaceKind::class_product || spec.n != 2 ||
      spec.factor_count() > 2) {
    throw std::invalid_argument(
        "check_axiom_exterior: supported only for SU(2) class products with "
        "at most 2 factors");
  }
  if (chart_step <= 0.0) {
    throw std::invalid_argument("check_axiom_exterior: step must be > 0");
  }
  ConjChart chart;
  chart.base = &x;
  chart.basis = su_basis(2);
  chart.per_factor = static_cast<int>(chart.basis.size());
  const int dim = chart.per_factor * spec.factor_count();

  const double h = chart_step;
  auto omega_at = [&](const Eigen::VectorXd& t, int i, int j) {
    const QSpacePoint y = chart.at(t);
    return two_form(spec, y, chart.coordinate_field(t, i, h),
                    chart.coordinate_field(t, j, h));
  };
  auto d_omega = [&](const Eigen::VectorXd& t, int di, int i, int j) {
    Eigen::VectorXd tp = t, tm = t;
    tp[di] += h;
    tm[di] -= h;
    return (omega_at(tp, i, j) - omega_at(tm, i, j)) / (2.0 * h);
  };

  std::vector<std::array<int, 3>> triples;
  for (int a = 0; a < dim && triples.size() < 5; ++a) {
    for (int b = a + 1; b < dim && triples.size() < 5; ++b) {
      for (int c = b + 1; c < dim && triples.size() < 5; ++c) {
        triples.push_back({a, b, c});
      }
    }
  }

  const Eigen::VectorXd t0 = Eigen::VectorXd::Zero(dim);
  const GroupElement mu = momentum(spec, x);
  double worst = 0.0;
  for (const auto& tr : triples) {
    const int i = tr[0], j = tr[1], k = tr[2];
    const double dom =
        d_omega(t0, i, j, k) - d_omega(t0, j, i, k) + d_omega(t0, k, i, j);
    const SpaceTangent ei = chart.coordinate_field(t0, i, h);
    const SpaceTangent ej = chart.coordinate_field(t0, j, h);
    const SpaceTangent ek = chart.coordinate_field(t0, k, h);
    const AlgebraElement a(
        Matrix(mu.m.adjoint() * momentum_differential(spec, x, ei).ambient));
    const AlgebraElement b(
        Matrix(mu.m.adjoint() * momentum_differential(spec, x, ej).ambient));
    const AlgebraElement c(
        Matrix(mu.m.adjoint() * momentum_differential(spec, x, ek).ambient));
    // chi here is the bi-invariant 3-form normalized so that the exterior
    // identity closes for conjugacy classes: half the raw bracket pairing
    const double rhs = -0.5 * cartan_three_form(a, b, c);
    worst = std::max(worst, std::abs(dom - rhs));
  }
  return worst;
}

}  // namespace qham
