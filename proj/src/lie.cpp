#include "qham/lie.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace qham {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_same_rank(int a, int b, const char* op) {
  if (a != b) {
    throw std::invalid_argument(std::string(op) + ": rank mismatch");
  }
}
}  // namespace

double GroupElement::unitarity_defect() const {
  return (m.adjoint() * m - Matrix::Identity(rank(), rank()))
      .cwiseAbs()
      .maxCoeff();
}

double GroupElement::det_defect() const {
  return std::abs(m.determinant() - Cplx(1.0, 0.0));
}

double AlgebraElement::antihermitian_defect() const {
  return (m + m.adjoint()).cwiseAbs().maxCoeff();
}

double AlgebraElement::trace_defect() const { return std::abs(m.trace()); }

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  require_same_rank(a.rank(), b.rank(), "product");
  return GroupElement(a.m * b.m);
}

double inner(const AlgebraElement& x, const AlgebraElement& y) {
  require_same_rank(x.rank(), y.rank(), "inner");
  return -(x.m * y.m).trace().real();
}

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) {
  require_same_rank(x.rank(), y.rank(), "bracket");
  return AlgebraElement(x.m * y.m - y.m * x.m);
}

GroupElement exp_alg(const AlgebraElement& x) {
  // X = iH with H Hermitian; exponentiate through the spectral form so the
  // result is unitary to rounding.
  Eigen::SelfAdjointEigenSolver<Matrix> es(Cplx(0.0, -1.0) * x.m);
  const Eigen::VectorXd w = es.eigenvalues();
  Eigen::VectorXcd phases(w.size());
  for (int i = 0; i < w.size(); ++i) {
    phases[i] = std::polar(1.0, w[i]);
  }
  const Matrix& v = es.eigenvectors();
  return GroupElement(v * phases.asDiagonal() * v.adjoint());
}

UnitarySpectrum unitary_spectrum(const GroupElement& g) {
  Eigen::ComplexSchur<Matrix> schur(g.m);
  UnitarySpectrum out;
  out.frame = schur.matrixU();
  const int n = g.rank();
  out.angles.resize(n);
  for (int i = 0; i < n; ++i) {
    out.angles[i] = std::arg(schur.matrixT()(i, i));
  }
  return out;
}

Vector zero_sum_branch(const Vector& angles) {
  const int n = static_cast<int>(angles.size());
  const double sum = angles.sum();
  const int k = static_cast<int>(std::lround(sum / kTwoPi));
  Vector out = angles;
  if (k == 0) return out;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return angles[a] > angles[b]; });
  if (k > 0) {
    for (int i = 0; i < k; ++i) out[order[i]] -= kTwoPi;
  } else {
    for (int i = 0; i < -k; ++i) out[order[n - 1 - i]] += kTwoPi;
  }
  return out;
}

AlgebraElement log_group(const GroupElement& g) {
  const UnitarySpectrum spec = unitary_spectrum(g);
  const Vector angles = zero_sum_branch(spec.angles);
  Eigen::VectorXcd diag(angles.size());
  for (int i = 0; i < angles.size(); ++i) {
    diag[i] = Cplx(0.0, angles[i]);
  }
  Matrix x = spec.frame * diag.asDiagonal() * spec.frame.adjoint();
  // symmetrize away the rounding skew so invariants hold tightly
  x = 0.5 * (x - x.adjoint().eval());
  return AlgebraElement(std::move(x));
}

AlgebraElement adjoint(const GroupElement& g, const AlgebraElement& x) {
  require_same_rank(g.rank(), x.rank(), "adjoint");
  return AlgebraElement(g.m * x.m * g.m.adjoint());
}

double cartan_three_form(const AlgebraElement& x, const AlgebraElement& y,
                         const AlgebraElement& z) {
  return inner(bracket(x, y), z);
}

AlgebraElement maurer_cartan_left(const GroupElement& g,
                                  const TangentVector& xi) {
  if ((xi.base.m - g.m).cwiseAbs().maxCoeff() > 1e-9) {
    throw std::invalid_argument("maurer_cartan_left: base mismatch");
  }
  return AlgebraElement(g.m.adjoint() * xi.ambient);
}

AlgebraElement maurer_cartan_right(const GroupElement& g,
                                   const TangentVector& xi) {
  if ((xi.base.m - g.m).cwiseAbs().maxCoeff() > 1e-9) {
    throw std::invalid_argument("maurer_cartan_right: base mismatch");
  }
  return AlgebraElement(xi.ambient * g.m.adjoint());
}

GroupElement haar_sample(int n, RngStream& rng) {
  if (n < 2) throw std::invalid_argument("haar_sample: n must be >= 2");
  Matrix z(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      z(i, j) = Cplx(rng.gaussian(), rng.gaussian());
    }
  }
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // fix the phase gauge of the QR decomposition, then the determinant
  for (int j = 0; j < n; ++j) {
    const Cplx d = r(j, j);
    const double a = std::abs(d);
    q.col(j) *= (a > 0.0) ? d / a : Cplx(1.0, 0.0);
  }
  const double phase = std::arg(q.determinant());
  q *= std::polar(1.0, -phase / n);
  return GroupElement(std::move(q));
}

GroupElement haar_sample_so(int n, RngStream& rng) {
  Eigen::MatrixXd z(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      z(i, j) = rng.gaussian();
    }
  }
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(z);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    if (r(j, j) < 0.0) q.col(j) = -q.col(j);
  }
  if (q.determinant() < 0.0) q.col(n - 1) = -q.col(n - 1);
  return GroupElement(q.cast<Cplx>());
}

std::vector<AlgebraElement> su_basis(int n) {
  std::vector<AlgebraElement> basis;
  basis.reserve(static_cast<std::size_t>(n) * n - 1);
  const double s = 1.0 / std::sqrt(2.0);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      Matrix e = Matrix::Zero(n, n);
      e(a, b) = s;
      e(b, a) = -s;
      basis.emplace_back(e);
      Matrix f = Matrix::Zero(n, n);
      f(a, b) = Cplx(0.0, s);
      f(b, a) = Cplx(0.0, s);
      basis.emplace_back(f);
    }
  }
  for (int k = 1; k < n; ++k) {
    Eigen::VectorXd d = Eigen::VectorXd::Zero(n);
    d.head(k).setOnes();
    d[k] = -k;
    d /= d.norm();
    Matrix e = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i) e(i, i) = Cplx(0.0, d[i]);
    basis.emplace_back(e);
  }
  return basis;
}

}  // namespace qham
