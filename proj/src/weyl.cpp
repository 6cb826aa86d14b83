#include "qham/weyl.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qham {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

RootSystem build_root_system(int n) {
  if (n < 2) throw std::invalid_argument("build_root_system: n must be >= 2");
  RootSystem rs;
  rs.n = n;
  for (int i = 0; i + 1 < n; ++i) {
    Vector a = Vector::Zero(n);
    a[i] = 1.0;
    a[i + 1] = -1.0;
    rs.simple_roots.push_back(a);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Vector a = Vector::Zero(n);
      a[i] = 1.0;
      a[j] = -1.0;
      rs.positive_roots.push_back(a);
    }
  }
  rs.highest_root = Vector::Zero(n);
  rs.highest_root[0] = 1.0;
  rs.highest_root[n - 1] = -1.0;
  return rs;
}

double AlcovePoint::ordering_defect() const {
  double worst = 0.0;
  for (int i = 0; i + 1 < rank(); ++i) {
    worst = std::max(worst, angles[i + 1] - angles[i]);
  }
  return worst;
}

bool AlcovePoint::valid(double tol) const {
  return rank() >= 2 && ordering_defect() <= tol && zero_sum_defect() <= tol &&
         spread() <= kTwoPi + tol;
}

bool FaceId::interior() const {
  if (affine_active) return false;
  for (bool w : simple_active) {
    if (w) return false;
  }
  return true;
}

std::string FaceId::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < simple_active.size(); ++i) {
    if (simple_active[i]) {
      if (!s.empty()) s += ",";
      s += "w" + std::to_string(i + 1);
    }
  }
  if (affine_active) {
    if (!s.empty()) s += ",";
    s += "affine";
  }
  return s.empty() ? "interior" : s;
}

AlcovePoint project_to_alcove(const GroupElement& g) {
  Vector angles = zero_sum_branch(unitary_spectrum(g).angles);
  std::sort(angles.data(), angles.data() + angles.size(),
            std::greater<double>());
  return AlcovePoint(std::move(angles));
}

GroupElement alcove_exp(const AlcovePoint& p) {
  if (!p.valid(1e-8)) {
    throw std::invalid_argument("alcove_exp: invalid alcove point");
  }
  const int n = p.rank();
  Matrix m = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    m(i, i) = std::polar(1.0, p.angles[i]);
  }
  return GroupElement(std::move(m));
}

FaceId face_signature(const AlcovePoint& p, double tol) {
  const int n = p.rank();
  FaceId f;
  f.simple_active.resize(n - 1);
  for (int i = 0; i + 1 < n; ++i) {
    f.simple_active[i] = (p.angles[i] - p.angles[i + 1]) < tol;
  }
  f.affine_active = p.spread() > kTwoPi - tol;
  return f;
}

int class_dimension(const AlcovePoint& p, double tol) {
  const int n = p.rank();
  // eigenvalue clusters: runs of equal angles, identified across the wrap
  // angles[0] == angles[n-1] + 2*pi, so the count is a class invariant
  std::vector<int> sizes;
  int run = 1;
  for (int i = 1; i < n; ++i) {
    if (p.angles[i - 1] - p.angles[i] < tol) {
      ++run;
    } else {
      sizes.push_back(run);
      run = 1;
    }
  }
  sizes.push_back(run);
  if (sizes.size() > 1 && p.spread() > kTwoPi - tol) {
    sizes.front() += sizes.back();
    sizes.pop_back();
  }
  int sum_sq = 0;
  for (int s : sizes) sum_sq += s * s;
  return n * n - sum_sq;
}

FaceId principal_face(const std::vector<AlcovePoint>& points, double tol) {
  if (points.empty()) {
    throw std::invalid_argument("principal_face: empty batch");
  }
  int best = -1;
  FaceId face;
  bool ambiguous = false;
  for (const AlcovePoint& p : points) {
    const int d = class_dimension(p, tol);
    if (d > best) {
      best = d;
      face = face_signature(p, tol);
      ambiguous = false;
    } else if (d == best) {
      const FaceId f = face_signature(p, tol);
      if (!(f == face)) ambiguous = true;
    }
  }
  if (ambiguous) {
    throw std::runtime_error(
        "principal_face: distinct face signatures tie at maximal class "
        "dimension (wall tolerance misconfigured?)");
  }
  return face;
}

}  // namespace qham
