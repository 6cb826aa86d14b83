#include <doctest.h>

#include <numbers>

#include "qham/qspace.hpp"

using namespace qham;

namespace {
constexpr double kPi = std::numbers::pi;

AlcovePoint su2_class(double theta) {
  Vector v(2);
  v << theta, -theta;
  return AlcovePoint(v);
}

SpaceSpec two_su2(double a, double b) {
  return SpaceSpec::classes(2, {su2_class(a), su2_class(b)});
}

double max_diff(const QSpacePoint& x, const QSpacePoint& y) {
  double w = 0.0;
  for (std::size_t j = 0; j < x.factors.size(); ++j) {
    w = std::max(w, (x.factors[j].m - y.factors[j].m).cwiseAbs().maxCoeff());
  }
  return w;
}
}  // namespace

TEST_CASE("sampling stays on the classes") {
  const SpaceSpec spec = two_su2(kPi / 3, kPi / 5);
  RngStream rng(2);
  for (int i = 0; i < 200; ++i) {
    const QSpacePoint x = sample_point(spec, rng);
    for (int j = 0; j < 2; ++j) {
      CHECK((project_to_alcove(x.factors[j]).angles -
             spec.class_points[j].angles)
                .cwiseAbs()
                .maxCoeff() < 1e-8);
    }
  }
  // central class has a single point
  const SpaceSpec central = SpaceSpec::classes(2, {su2_class(0.0)});
  RngStream rng2(9);
  const QSpacePoint y = sample_point(central, rng2);
  CHECK((y.factors[0].m - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() <
        1e-12);

  RngStream a(5), b(5);
  CHECK(max_diff(sample_point(spec, a), sample_point(spec, b)) == 0.0);
}

TEST_CASE("action axioms and equivariance") {
  const SpaceSpec spec = two_su2(0.9, 0.4);
  RngStream rng(3);
  const QSpacePoint x = sample_point(spec, rng);
  const GroupElement g = haar_sample(2, rng);
  const GroupElement h = haar_sample(2, rng);

  CHECK(max_diff(act(spec, GroupElement::identity(2), x), x) == 0.0);
  CHECK(max_diff(act(spec, g, act(spec, h, x)), act(spec, g * h, x)) < 1e-12);

  const GroupElement lhs = momentum(spec, act(spec, g, x));
  const GroupElement rhs(g.m * momentum(spec, x).m * g.m.adjoint());
  CHECK((lhs.m - rhs.m).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("momentum values") {
  const SpaceSpec one = SpaceSpec::classes(2, {su2_class(0.8)});
  RngStream rng(4);
  const QSpacePoint x = sample_point(one, rng);
  CHECK((momentum(one, x).m - x.factors[0].m).cwiseAbs().maxCoeff() == 0.0);

  // double with equal factors commutes to the identity
  const SpaceSpec dbl = SpaceSpec::double_of(2);
  QSpacePoint same;
  const GroupElement a = haar_sample(2, rng);
  same.factors = {a, a};
  CHECK((momentum(dbl, same).m - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() <
        1e-13);

  Matrix d(2, 2);
  d << Cplx(0, 1), 0, 0, Cplx(0, -1);
  QSpacePoint prod;
  prod.factors = {GroupElement(d), GroupElement(d)};
  const SpaceSpec spec = two_su2(kPi / 2, kPi / 2);
  CHECK((momentum(spec, prod).m + Matrix::Identity(2, 2))
            .cwiseAbs()
            .maxCoeff() < 1e-14);
}

TEST_CASE("momentum differential") {
  const SpaceSpec one = SpaceSpec::classes(2, {su2_class(0.8)});
  RngStream rng(7);
  const QSpacePoint x = sample_point(one, rng);
  const auto tb = tangent_basis(one, x);
  REQUIRE(tb.size() == 2);
  // l = 1: identity on tangents
  for (const auto& v : tb) {
    CHECK((momentum_differential(one, x, v).ambient - v.blocks[0])
              .cwiseAbs()
              .maxCoeff() == 0.0);
  }

  // fundamental direction: d mu(X#) = X mu - mu X
  const SpaceSpec spec = two_su2(1.1, 0.6);
  const QSpacePoint y = sample_point(spec, rng);
  const auto basis = su_basis(2);
  const GroupElement mu = momentum(spec, y);
  for (const auto& gen : basis) {
    const SpaceTangent xs = fundamental_vector(y, gen);
    const Matrix expect = gen.m * mu.m - mu.m * gen.m;
    CHECK((momentum_differential(spec, y, xs).ambient - expect)
              .cwiseAbs()
              .maxCoeff() < 1e-10);
  }

  // finite-difference oracle along conjugation curves
  const double h = 1e-5;
  for (const auto& gen : basis) {
    auto point_at = [&](double t) {
      const GroupElement e = exp_alg(AlgebraElement(t * gen.m));
      return momentum(spec, act(spec, e, y));
    };
    const Matrix fd = (point_at(h).m - point_at(-h).m) / (2.0 * h);
    const SpaceTangent xs = fundamental_vector(y, gen);
    CHECK((momentum_differential(spec, y, xs).ambient - fd)
              .cwiseAbs()
              .maxCoeff() < 1e-6);
  }

  SpaceTangent zero;
  zero.blocks = {Matrix::Zero(2, 2), Matrix::Zero(2, 2)};
  CHECK(momentum_differential(spec, y, zero).ambient.cwiseAbs().maxCoeff() ==
        0.0);

  // double: same finite-difference contract
  const SpaceSpec dbl = SpaceSpec::double_of(2);
  QSpacePoint z;
  z.factors = {haar_sample(2, rng), haar_sample(2, rng)};
  for (const auto& gen : basis) {
    auto point_at = [&](double t) {
      const GroupElement e = exp_alg(AlgebraElement(t * gen.m));
      return momentum(dbl, act(dbl, e, z));
    };
    const Matrix fd = (point_at(h).m - point_at(-h).m) / (2.0 * h);
    const SpaceTangent xs = fundamental_vector(z, gen);
    CHECK((momentum_differential(dbl, z, xs).ambient - fd)
              .cwiseAbs()
              .maxCoeff() < 1e-6);
  }
}

TEST_CASE("tangent basis") {
  RngStream rng(8);
  const SpaceSpec central = SpaceSpec::classes(2, {su2_class(0.0)});
  CHECK(tangent_basis(central, sample_point(central, rng)).empty());

  const SpaceSpec one = SpaceSpec::classes(2, {su2_class(0.9)});
  const QSpacePoint x = sample_point(one, rng);
  const auto tb = tangent_basis(one, x);
  CHECK(tb.size() == 2);  // class dimension of a generic SU(2) class

  // SU(3) generic class: dimension 6; one degenerate pair: dimension 4
  Vector g3(3);
  g3 << 1.0, 0.2, -1.2;
  const SpaceSpec su3 = SpaceSpec::classes(3, {AlcovePoint(g3)});
  CHECK(tangent_basis(su3, sample_point(su3, rng)).size() == 6);

  // Gram determinant of ambient inner products is bounded away from zero
  const SpaceSpec spec = two_su2(1.1, 0.6);
  const QSpacePoint y = sample_point(spec, rng);
  const auto basis = tangent_basis(spec, y);
  Eigen::MatrixXd gram(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      double dot = 0.0;
      for (std::size_t k = 0; k < basis[i].blocks.size(); ++k) {
        dot += (basis[i].blocks[k].adjoint() * basis[j].blocks[k])
                   .trace()
                   .real();
      }
      gram(i, j) = dot;
    }
  }
  CHECK(gram.determinant() > 1e-12);
}

TEST_CASE("two-form structure") {
  RngStream rng(12);
  const SpaceSpec one = SpaceSpec::classes(2, {su2_class(kPi / 2)});
  const QSpacePoint x = sample_point(one, rng);
  const auto tb = tangent_basis(one, x);

  CHECK(two_form(one, x, tb[0], tb[0]) == doctest::Approx(0.0).epsilon(1e-14));

  // direct evaluation oracle at u = diag(i,-i) with off-diagonal generators
  QSpacePoint diag_pt;
  diag_pt.factors = {alcove_exp(su2_class(kPi / 2))};
  const auto basis = su_basis(2);
  for (const auto& gx : basis) {
    for (const auto& gy : basis) {
      SpaceTangent v, w;
      const Matrix& u = diag_pt.factors[0].m;
      v.blocks = {gx.m * u - u * gx.m};
      w.blocks = {gy.m * u - u * gy.m};
      if (v.blocks[0].cwiseAbs().maxCoeff() < 1e-14 ||
          w.blocks[0].cwiseAbs().maxCoeff() < 1e-14) {
        continue;  // centralizer direction: not a class tangent
      }
      const Matrix ad =
          u * gx.m * u.adjoint() - u.adjoint() * gx.m * u;
      const double expect = 0.5 * (-(ad * gy.m).trace().real());
      CHECK(two_form(one, diag_pt, v, w) ==
            doctest::Approx(expect).epsilon(1e-12));
    }
  }
}

TEST_CASE("two-form bilinearity and antisymmetry") {
  RngStream rng(13);
  const SpaceSpec spec = two_su2(1.0, 0.7);
  const QSpacePoint x = sample_point(spec, rng);
  const auto tb = tangent_basis(spec, x);
  for (std::size_t i = 0; i < tb.size(); ++i) {
    for (std::size_t j = 0; j < tb.size(); ++j) {
      CHECK(std::abs(two_form(spec, x, tb[i], tb[j]) +
                     two_form(spec, x, tb[j], tb[i])) < 1e-12);
    }
  }
  // bilinearity in random combinations
  SpaceTangent combo;
  combo.blocks = {2.0 * tb[0].blocks[0] + 3.0 * tb[1].blocks[0],
                  2.0 * tb[0].blocks[1] + 3.0 * tb[1].blocks[1]};
  const double direct = two_form(spec, x, combo, tb[2]);
  const double split = 2.0 * two_form(spec, x, tb[0], tb[2]) +
                       3.0 * two_form(spec, x, tb[1], tb[2]);
  CHECK(direct == doctest::Approx(split).epsilon(1e-11));
}

TEST_CASE("fusion with a central class reduces to the first factor") {
  RngStream rng(14);
  const SpaceSpec spec =
      SpaceSpec::classes(2, {su2_class(1.0), su2_class(0.0)});
  const SpaceSpec one = SpaceSpec::classes(2, {su2_class(1.0)});
  const QSpacePoint x = sample_point(spec, rng);
  QSpacePoint x1;
  x1.factors = {x.factors[0]};
  const auto tb1 = tangent_basis(one, x1);
  for (std::size_t i = 0; i < tb1.size(); ++i) {
    for (std::size_t j = 0; j < tb1.size(); ++j) {
      SpaceTangent v, w;
      v.blocks = {tb1[i].blocks[0], Matrix::Zero(2, 2)};
      w.blocks = {tb1[j].blocks[0], Matrix::Zero(2, 2)};
      CHECK(std::abs(two_form(spec, x, v, w) -
                     two_form(one, x1, tb1[i], tb1[j])) < 1e-12);
    }
  }
}

TEST_CASE("two-form is invariant under the action") {
  RngStream rng(15);
  const SpaceSpec spec = two_su2(1.0, 0.7);
  const QSpacePoint x = sample_point(spec, rng);
  const GroupElement g = haar_sample(2, rng);
  const QSpacePoint gx = act(spec, g, x);
  const auto tb = tangent_basis(spec, x);
  for (std::size_t i = 0; i < tb.size(); ++i) {
    for (std::size_t j = i + 1; j < tb.size(); ++j) {
      const double before = two_form(spec, x, tb[i], tb[j]);
      const double after =
          two_form(spec, gx, act_tangent(g, tb[i]), act_tangent(g, tb[j]));
      CHECK(std::abs(before - after) < 1e-9);
    }
  }
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(SpaceSpec::classes(2, {}), std::invalid_argument);
  Vector bad(2);
  bad << -1.0, 1.0;
  CHECK_THROWS_AS(SpaceSpec::classes(2, {AlcovePoint(bad)}),
                  std::invalid_argument);
  const SpaceSpec spec = two_su2(0.5, 0.5);
  RngStream rng(1);
  const QSpacePoint x = sample_point(spec, rng);
  CHECK_THROWS_AS(act(spec, GroupElement::identity(3), x),
                  std::invalid_argument);
  SpaceTangent wrong;
  wrong.blocks = {Matrix::Zero(2, 2)};
  CHECK_THROWS_AS(momentum_differential(spec, x, wrong),
                  std::invalid_argument);
}
