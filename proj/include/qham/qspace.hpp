#pragma once

#include <vector>

#include "qham/lie.hpp"
#include "qham/weyl.hpp"

namespace qham {

enum class SpaceKind { class_product, double_space };

// Description of a space: an ordered product of conjugacy classes, or the
// double G x G with commutator momentum.
struct SpaceSpec {
  SpaceKind kind = SpaceKind::class_product;
  int n = 2;
  std::vector<AlcovePoint> class_points;  // empty for the double

  int factor_count() const {
    return kind == SpaceKind::double_space
               ? 2
               : static_cast<int>(class_points.size());
  }
  void validate() const;

  static SpaceSpec classes(int n, std::vector<AlcovePoint> pts) {
    SpaceSpec s;
    s.kind = SpaceKind::class_product;
    s.n = n;
    s.class_points = std::move(pts);
    s.validate();
    return s;
  }
  static SpaceSpec double_of(int n) {
    SpaceSpec s;
    s.kind = SpaceKind::double_space;
    s.n = n;
    return s;
  }
};

struct QSpacePoint {
  std::vector<GroupElement> factors;

  int rank() const { return factors.empty() ? 0 : factors.front().rank(); }
};

// Tangent vector at a point of the space, one ambient block per factor.
struct SpaceTangent {
  std::vector<Matrix> blocks;
};

QSpacePoint sample_point(const SpaceSpec& spec, RngStream& rng);
QSpacePoint act(const SpaceSpec& spec, const GroupElement& g,
                const QSpacePoint& x);
GroupElement momentum(const SpaceSpec& spec, const QSpacePoint& x);
TangentVector momentum_differential(const SpaceSpec& spec, const QSpacePoint& x,
                                    const SpaceTangent& v);

// Basis of the tangent space at x: per factor j the vectors X u_j - u_j X
// with X running over an orthonormal basis of the orthogonal complement of
// the centralizer algebra of u_j.
std::vector<SpaceTangent> tangent_basis(const SpaceSpec& spec,
                                        const QSpacePoint& x);

double two_form(const SpaceSpec& spec, const QSpacePoint& x,
                const SpaceTangent& v, const SpaceTangent& w);

// Fundamental vector field of the conjugation action at x.
SpaceTangent fundamental_vector(const QSpacePoint& x, const AlgebraElement& g);

// Unique centralizer-orthogonal generator X with X u - u X = v, for v
// tangent to the conjugacy class of u.
AlgebraElement class_generator(const GroupElement& u, const Matrix& v,
                               double cluster_tol = 1e-9);

// Conjugation applied blockwise to a tangent vector.
SpaceTangent act_tangent(const GroupElement& g, const SpaceTangent& v);

}  // namespace qham
