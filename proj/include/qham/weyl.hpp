#pragma once

#include <string>
#include <vector>

#include "qham/lie.hpp"

namespace qham {

// Type A_{n-1} root data in eigen-angle coordinates on the diagonal
// traceless subspace of su(n).
struct RootSystem {
  int n = 0;
  std::vector<Vector> simple_roots;
  std::vector<Vector> positive_roots;
  Vector highest_root;
};

RootSystem build_root_system(int n);

// Conjugation invariant of a group element: eigen-angles sorted
// descending, zero sum, spread at most 2*pi.
struct AlcovePoint {
  Vector angles;

  AlcovePoint() = default;
  explicit AlcovePoint(Vector a) : angles(std::move(a)) {}

  int rank() const { return static_cast<int>(angles.size()); }

  double ordering_defect() const;
  double zero_sum_defect() const { return std::abs(angles.sum()); }
  double spread() const { return angles[0] - angles[rank() - 1]; }
  bool valid(double tol = 1e-10) const;
};

// Active walls of the alcove face a point sits on. Wall i (0-based,
// i < n-1) is the simple-root wall angles[i] == angles[i+1]; the affine
// wall is angles[0] - angles[n-1] == 2*pi.
struct FaceId {
  std::vector<bool> simple_active;
  bool affine_active = false;

  bool operator==(const FaceId& o) const {
    return simple_active == o.simple_active && affine_active == o.affine_active;
  }
  bool interior() const;
  std::string to_string() const;
};

AlcovePoint project_to_alcove(const GroupElement& g);
GroupElement alcove_exp(const AlcovePoint& p);
FaceId face_signature(const AlcovePoint& p, double tol);
int class_dimension(const AlcovePoint& p, double tol = 1e-7);

// The face carrying the points of maximal conjugacy-class dimension.
// Throws if the batch is empty or two distinct signatures tie at the
// maximal dimension.
FaceId principal_face(const std::vector<AlcovePoint>& points, double tol);

}  // namespace qham
