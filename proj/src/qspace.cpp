#include "qham/qspace.hpp"

#include <cmath>
#include <stdexcept>

namespace qham {

void SpaceSpec::validate() const {
  if (n < 2) throw std::invalid_argument("SpaceSpec: n must be >= 2");
  if (kind == SpaceKind::class_product) {
    if (class_points.empty()) {
      throw std::invalid_argument("SpaceSpec: class_product needs >= 1 class");
    }
    for (const AlcovePoint& p : class_points) {
      if (p.rank() != n || !p.valid(1e-8)) {
        throw std::invalid_argument("SpaceSpec: invalid class point");
      }
    }
  } else if (!class_points.empty()) {
    throw std::invalid_argument("SpaceSpec: double takes no class points");
  }
}

QSpacePoint sample_point(const SpaceSpec& spec, RngStream& rng) {
  QSpacePoint x;
  if (spec.kind == SpaceKind::double_space) {
    x.factors.push_back(haar_sample(spec.n, rng));
    x.factors.push_back(haar_sample(spec.n, rng));
    return x;
  }
  for (const AlcovePoint& c : spec.class_points) {
    const GroupElement h = haar_sample(spec.n, rng);
    x.factors.push_back(GroupElement(h.m * alcove_exp(c).m * h.m.adjoint()));
  }
  return x;
}

QSpacePoint act(const SpaceSpec& spec, const GroupElement& g,
                const QSpacePoint& x) {
  if (g.rank() != spec.n) throw std::invalid_argument("act: rank mismatch");
  QSpacePoint y;
  y.factors.reserve(x.factors.size());
  for (const GroupElement& u : x.factors) {
    y.factors.push_back(GroupElement(g.m * u.m * g.m.adjoint()));
  }
  return y;
}

GroupElement momentum(const SpaceSpec& spec, const QSpacePoint& x) {
  if (spec.kind == SpaceKind::double_space) {
    const Matrix& a = x.factors[0].m;
    const Matrix& b = x.factors[1].m;
    return GroupElement(a * b * a.adjoint() * b.adjoint());
  }
  Matrix m = Matrix::Identity(spec.n, spec.n);
  for (const GroupElement& u : x.factors) m = m * u.m;
  return GroupElement(std::move(m));
}

TangentVector momentum_differential(const SpaceSpec& spec, const QSpacePoint& x,
                                    const SpaceTangent& v) {
  if (v.blocks.size() != x.factors.size()) {
    throw std::invalid_argument("momentum_differential: base mismatch");
  }
  const int n = spec.n;
  TangentVector out;
  out.base = momentum(spec, x);
  if (spec.kind == SpaceKind::double_space) {
    const Matrix& a = x.factors[0].m;
    const Matrix& b = x.factors[1].m;
    const Matrix ai = a.adjoint(), bi = b.adjoint();
    const Matrix& va = v.blocks[0];
    const Matrix& vb = v.blocks[1];
    out.ambient = va * b * ai * bi + a * vb * ai * bi -
                  a * b * ai * va * ai * bi - a * b * ai * bi * vb * bi;
    return out;
  }
  const int l = static_cast<int>(x.factors.size());
  Matrix acc = Matrix::Zero(n, n);
  for (int j = 0; j < l; ++j) {
    Matrix term = Matrix::Identity(n, n);
    for (int k = 0; k < l; ++k) {
      term = term * (k == j ? v.blocks[j] : x.factors[k].m);
    }
    acc += term;
  }
  out.ambient = std::move(acc);
  return out;
}

AlgebraElement class_generator(const GroupElement& u, const Matrix& v,
                               double cluster_tol) {
  const UnitarySpectrum spec = unitary_spectrum(u);
  const int n = u.rank();
  Eigen::VectorXcd vals(n);
  for (int i = 0; i < n; ++i) vals[i] = std::polar(1.0, spec.angles[i]);
  const Matrix vb = spec.frame.adjoint() * v * spec.frame;
  Matrix x = Matrix::Zero(n, n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const Cplx d = vals[b] - vals[a];
      if (std::abs(d) > cluster_tol) x(a, b) = vb(a, b) / d;
    }
  }
  Matrix out = spec.frame * x * spec.frame.adjoint();
  out = 0.5 * (out - out.adjoint().eval());
  return AlgebraElement(std::move(out));
}

std::vector<SpaceTangent> tangent_basis(const SpaceSpec& spec,
                                        const QSpacePoint& x) {
  if (spec.kind == SpaceKind::double_space) {
    throw std::invalid_argument(
        "tangent_basis: class products only (the double is not an orbit "
        "product)");
  }
  const int n = spec.n;
  const int l = static_cast<int>(x.factors.size());
  std::vector<SpaceTangent> out;
  const double s = 1.0 / std::sqrt(2.0);
  for (int j = 0; j < l; ++j) {
    const GroupElement& u = x.factors[j];
    const UnitarySpectrum sp = unitary_spectrum(u);
    Eigen::VectorXcd vals(n);
    for (int i = 0; i < n; ++i) vals[i] = std::polar(1.0, sp.angles[i]);
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (std::abs(vals[a] - vals[b]) <= 1e-9) continue;
        for (int which = 0; which < 2; ++which) {
          Matrix y = Matrix::Zero(n, n);
          if (which == 0) {
            y(a, b) = s;
            y(b, a) = -s;
          } else {
            y(a, b) = Cplx(0.0, s);
            y(b, a) = Cplx(0.0, s);
          }
          const Matrix xg = sp.frame * y * sp.frame.adjoint();
          SpaceTangent t;
          t.blocks.assign(l, Matrix::Zero(n, n));
          t.blocks[j] = xg * u.m - u.m * xg;
          out.push_back(std::move(t));
        }
      }
    }
  }
  return out;
}

namespace {

// two-form of a single conjugacy class at u
double omega_class(const GroupElement& u, const Matrix& v, const Matrix& w) {
  const AlgebraElement x = class_generator(u, v);
  const AlgebraElement y = class_generator(u, w);
  const Matrix ad = u.m * x.m * u.m.adjoint() - u.m.adjoint() * x.m * u.m;
  return 0.5 * inner(AlgebraElement(ad), y);
}

// Leibniz differential of the partial product u_0 ... u_{j-1}
Matrix prefix_differential(const QSpacePoint& x, const SpaceTangent& v,
                           int count) {
  const int n = x.rank();
  Matrix acc = Matrix::Zero(n, n);
  for (int j = 0; j < count; ++j) {
    Matrix term = Matrix::Identity(n, n);
    for (int k = 0; k < count; ++k) {
      term = term * (k == j ? v.blocks[j] : x.factors[k].m);
    }
    acc += term;
  }
  return acc;
}

}  // namespace

double two_form(const SpaceSpec& spec, const QSpacePoint& x,
                const SpaceTangent& v, const SpaceTangent& w) {
  if (spec.kind == SpaceKind::double_space) {
    throw std::invalid_argument("two_form: double not supported");
  }
  const int l = static_cast<int>(x.factors.size());
  if (static_cast<int>(v.blocks.size()) != l ||
      static_cast<int>(w.blocks.size()) != l) {
    throw std::invalid_argument("two_form: base mismatch");
  }
  double total = 0.0;
  for (int j = 0; j < l; ++j) {
    total += omega_class(x.factors[j], v.blocks[j], w.blocks[j]);
  }
  // left-associative fusion corrections: prefix (factors < j) against factor j
  Matrix prefix = x.factors[0].m;
  for (int j = 1; j < l; ++j) {
    const Matrix dv = prefix_differential(x, v, j);
    const Matrix dw = prefix_differential(x, w, j);
    const Matrix& uj = x.factors[j].m;
    const AlgebraElement lv(Matrix(prefix.adjoint() * dv));
    const AlgebraElement lw(Matrix(prefix.adjoint() * dw));
    const AlgebraElement rv(Matrix(v.blocks[j] * uj.adjoint()));
    const AlgebraElement rw(Matrix(w.blocks[j] * uj.adjoint()));
    total += 0.5 * (inner(lv, rw) - inner(lw, rv));
    prefix = prefix * uj;
  }
  return total;
}

SpaceTangent fundamental_vector(const QSpacePoint& x, const AlgebraElement& g) {
  SpaceTangent t;
  t.blocks.reserve(x.factors.size());
  for (const GroupElement& u : x.factors) {
    t.blocks.push_back(g.m * u.m - u.m * g.m);
  }
  return t;
}

SpaceTangent act_tangent(const GroupElement& g, const SpaceTangent& v) {
  SpaceTangent out;
  out.blocks.reserve(v.blocks.size());
  for (const Matrix& b : v.blocks) {
    out.blocks.push_back(g.m * b * g.m.adjoint());
  }
  return out;
}

}  // namespace qham
