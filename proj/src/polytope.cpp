#include "qham/polytope.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

namespace qham {

namespace {

double point_segment_distance(const Eigen::VectorXd& p, const Eigen::VectorXd& a,
                              const Eigen::VectorXd& b) {
  const Eigen::VectorXd ab = b - a;
  const double len2 = ab.squaredNorm();
  if (len2 <= 0.0) return (p - a).norm();
  const double t = std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
  return (p - (a + t * ab)).norm();
}

double point_triangle_distance(const Eigen::Vector3d& p,
                               const Eigen::Vector3d& a,
                               const Eigen::Vector3d& b,
                               const Eigen::Vector3d& c) {
  // project onto the triangle plane, then clamp to edges if outside
  const Eigen::Vector3d ab = b - a, ac = c - a, ap = p - a;
  const double d1 = ab.dot(ap), d2 = ac.dot(ap);
  if (d1 <= 0.0 && d2 <= 0.0) return (p - a).norm();
  const Eigen::Vector3d bp = p - b;
  const double d3 = ab.dot(bp), d4 = ac.dot(bp);
  if (d3 >= 0.0 && d4 <= d3) return (p - b).norm();
  const double vc = d1 * d4 - d3 * d2;
  if (vc <= 0.0 && d1 >= 0.0 && d3 <= 0.0) {
    const double t = d1 / (d1 - d3);
    return (p - (a + t * ab)).norm();
  }
  const Eigen::Vector3d cp = p - c;
  const double d5 = ab.dot(cp), d6 = ac.dot(cp);
  if (d6 >= 0.0 && d5 <= d6) return (p - c).norm();
  const double vb = d5 * d2 - d1 * d6;
  if (vb <= 0.0 && d2 >= 0.0 && d6 <= 0.0) {
    const double t = d2 / (d2 - d6);
    return (p - (a + t * ac)).norm();
  }
  const double va = d3 * d6 - d5 * d4;
  if (va <= 0.0 && (d4 - d3) >= 0.0 && (d5 - d6) >= 0.0) {
    const double t = (d4 - d3) / ((d4 - d3) + (d5 - d6));
    return (p - (b + t * (c - b))).norm();
  }
  const double denom = 1.0 / (va + vb + vc);
  const double v = vb * denom, w = vc * denom;
  return (p - (a + v * ab + w * ac)).norm();
}

// uniform bucket grid for nearest-sample queries in d <= 3
class BucketGrid {
 public:
  BucketGrid(const std::vector<Eigen::VectorXd>& pts, double cell)
      : pts_(pts), cell_(std::max(cell, 1e-12)), dim_(pts.empty() ? 0 : static_cast<int>(pts.front().size())) {
    for (int i = 0; i < static_cast<int>(pts_.size()); ++i) {
      buckets_[key(pts_[i])].push_back(i);
    }
  }

  double nearest_distance(const Eigen::VectorXd& q, int exclude = -1) const {
    double best = std::numeric_limits<double>::infinity();
    for (int radius = 0; radius < 64; ++radius) {
      scan_ring(q, radius, best, exclude);
      if (std::isfinite(best) && best <= cell_ * radius) break;
    }
    if (!std::isfinite(best)) {
      for (int i = 0; i < static_cast<int>(pts_.size()); ++i) {
        if (i == exclude) continue;
        best = std::min(best, (pts_[i] - q).norm());
      }
    }
    return best;
  }

 private:
  using Key = std::array<long long, 3>;

  Key key(const Eigen::VectorXd& p) const {
    Key k{0, 0, 0};
    for (int i = 0; i < dim_; ++i) {
      k[i] = static_cast<long long>(std::floor(p[i] / cell_));
    }
    return k;
  }

  void scan_ring(const Eigen::VectorXd& q, int radius, double& best,
                 int exclude) const {
    const Key center = key(q);
    auto visit = [&](const Key& k) {
      const auto it = buckets_.find(k);
      if (it == buckets_.end()) return;
      for (int i : it->second) {
        if (i == exclude) continue;
        best = std::min(best, (pts_[i] - q).norm());
      }
    };
    const int r = radius;
    if (dim_ == 1) {
      if (r == 0) {
        visit(center);
      } else {
        visit({center[0] - r, 0, 0});
        visit({center[0] + r, 0, 0});
      }
      return;
    }
    if (dim_ == 2) {
      for (long long dx = -r; dx <= r; ++dx) {
        for (long long dy = -r; dy <= r; ++dy) {
          if (std::max(std::llabs(dx), std::llabs(dy)) != r) continue;
          visit({center[0] + dx, center[1] + dy, 0});
        }
      }
      return;
    }
    for (long long dx = -r; dx <= r; ++dx) {
      for (long long dy = -r; dy <= r; ++dy) {
        for (long long dz = -r; dz <= r; ++dz) {
          if (std::max({std::llabs(dx), std::llabs(dy), std::llabs(dz)}) != r)
            continue;
          visit({center[0] + dx, center[1] + dy, center[2] + dz});
        }
      }
    }
  }

  const std::vector<Eigen::VectorXd>& pts_;
  double cell_;
  int dim_;
  std::map<Key, std::vector<int>> buckets_;
};

std::vector<Eigen::VectorXd> dedup_points(std::vector<Eigen::VectorXd> pts,
                                          double tol) {
  std::vector<Eigen::VectorXd> out;
  for (const auto& p : pts) {
    bool dup = false;
    for (const auto& q : out) {
      if ((p - q).cwiseAbs().maxCoeff() < tol) {
        dup = true;
        break;
      }
    }
    if (!dup) out.push_back(p);
  }
  return out;
}

// --- 2d monotone chain ---
std::vector<Eigen::VectorXd> chain_hull_2d(std::vector<Eigen::VectorXd> pts) {
  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
    return a[0] < b[0] || (a[0] == b[0] && a[1] < b[1]);
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const auto& a, const auto& b) {
                          return a[0] == b[0] && a[1] == b[1];
                        }),
            pts.end());
  const int n = static_cast<int>(pts.size());
  if (n <= 2) return pts;
  auto cross = [](const Eigen::VectorXd& o, const Eigen::VectorXd& a,
                  const Eigen::VectorXd& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  std::vector<Eigen::VectorXd> h(2 * n);
  int k = 0;
  for (int i = 0; i < n; ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  const int lower = k + 1;
  for (int i = n - 2; i >= 0; --i) {
    while (k >= lower && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);  // counter-clockwise polygon
  return h;
}

// --- 3d incremental hull ---
struct Tri {
  int a, b, c;
  Eigen::Vector3d normal;
  double offset;
};

double tri_scale(const std::vector<Eigen::VectorXd>& pts) {
  Eigen::Vector3d lo = Eigen::Vector3d::Constant(1e300);
  Eigen::Vector3d hi = -lo;
  for (const auto& p : pts) {
    for (int i = 0; i < 3; ++i) {
      lo[i] = std::min(lo[i], p[i]);
      hi[i] = std::max(hi[i], p[i]);
    }
  }
  return (hi - lo).norm();
}

std::vector<Tri> incremental_hull_3d(const std::vector<Eigen::VectorXd>& pts) {
  const int n = static_cast<int>(pts.size());
  const double scale = tri_scale(pts);
  const double eps = 1e-10 * std::max(scale, 1.0);
  auto at = [&](int i) {
    return Eigen::Vector3d(pts[i][0], pts[i][1], pts[i][2]);
  };

  // initial simplex: spread points
  int i0 = 0, i1 = -1;
  double best = -1.0;
  for (int i = 1; i < n; ++i) {
    const double d = (at(i) - at(i0)).norm();
    if (d > best) {
      best = d;
      i1 = i;
    }
  }
  int i2 = -1;
  best = -1.0;
  for (int i = 0; i < n; ++i) {
    const double d =
        (at(i1) - at(i0)).cross(at(i) - at(i0)).norm();
    if (d > best) {
      best = d;
      i2 = i;
    }
  }
  int i3 = -1;
  best = -1.0;
  const Eigen::Vector3d nrm0 = (at(i1) - at(i0)).cross(at(i2) - at(i0));
  for (int i = 0; i < n; ++i) {
    const double d = std::abs(nrm0.dot(at(i) - at(i0)));
    if (d > best) {
      best = d;
      i3 = i;
    }
  }

  std::vector<Tri> faces;
  auto make_tri = [&](int a, int b, int c, const Eigen::Vector3d& inside) {
    Tri t;
    t.a = a;
    t.b = b;
    t.c = c;
    t.normal = (at(b) - at(a)).cross(at(c) - at(a));
    const double len = t.normal.norm();
    if (len > 0) t.normal /= len;
    t.offset = t.normal.dot(at(a));
    if (t.normal.dot(inside) > t.offset) {
      std::swap(t.b, t.c);
      t.normal = -t.normal;
      t.offset = t.normal.dot(at(a));
    }
    return t;
  };
  const Eigen::Vector3d centroid =
      0.25 * (at(i0) + at(i1) + at(i2) + at(i3));
  faces.push_back(make_tri(i0, i1, i2, centroid));
  faces.push_back(make_tri(i0, i1, i3, centroid));
  faces.push_back(make_tri(i0, i2, i3, centroid));
  faces.push_back(make_tri(i1, i2, i3, centroid));

  for (int i = 0; i < n; ++i) {
    if (i == i0 || i == i1 || i == i2 || i == i3) continue;
    const Eigen::Vector3d p = at(i);
    std::vector<char> visible(faces.size(), 0);
    bool any = false;
    for (std::size_t f = 0; f < faces.size(); ++f) {
      if (faces[f].normal.dot(p) > faces[f].offset + eps) {
        visible[f] = 1;
        any = true;
      }
    }
    if (!any) continue;
    // horizon: edges shared by exactly one visible face
    std::map<std::pair<int, int>, int> edge_count;
    auto add_edge = [&](int a, int b) {
      const auto k = std::minmax(a, b);
      edge_count[{k.first, k.second}]++;
    };
    for (std::size_t f = 0; f < faces.size(); ++f) {
      if (!visible[f]) continue;
      add_edge(faces[f].a, faces[f].b);
      add_edge(faces[f].b, faces[f].c);
      add_edge(faces[f].c, faces[f].a);
    }
    std::vector<std::array<int, 2>> horizon;
    for (std::size_t f = 0; f < faces.size(); ++f) {
      if (!visible[f]) continue;
      const std::array<std::array<int, 2>, 3> es = {
          {{faces[f].a, faces[f].b},
           {faces[f].b, faces[f].c},
           {faces[f].c, faces[f].a}}};
      for (const auto& e : es) {
        const auto k = std::minmax(e[0], e[1]);
        if (edge_count[{k.first, k.second}] == 1) horizon.push_back(e);
      }
    }
    // interior reference: average of surviving face vertices
    Eigen::Vector3d inside = Eigen::Vector3d::Zero();
    int cnt = 0;
    for (std::size_t f = 0; f < faces.size(); ++f) {
      if (visible[f]) continue;
      inside += at(faces[f].a) + at(faces[f].b) + at(faces[f].c);
      cnt += 3;
    }
    if (cnt == 0) continue;  // numerically everything visible; skip point
    inside /= cnt;
    std::vector<Tri> next;
    next.reserve(faces.size());
    for (std::size_t f = 0; f < faces.size(); ++f) {
      if (!visible[f]) next.push_back(faces[f]);
    }
    for (const auto& e : horizon) {
      next.push_back(make_tri(e[0], e[1], i, inside));
    }
    faces = std::move(next);
  }
  return faces;
}

}  // namespace

Eigen::MatrixXd zero_sum_frame(int n) {
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n - 1, n);
  for (int k = 1; k < n; ++k) {
    for (int i = 0; i < k; ++i) b(k - 1, i) = 1.0;
    b(k - 1, k) = -k;
    b.row(k - 1) /= b.row(k - 1).norm();
  }
  return b;
}

Eigen::VectorXd embed_alcove(const AlcovePoint& p) {
  return zero_sum_frame(p.rank()) * p.angles;
}

AlcovePoint unembed_alcove(const Eigen::VectorXd& y, int n) {
  return AlcovePoint(zero_sum_frame(n).transpose() * y);
}

double Hull::distance(const Eigen::VectorXd& ambient_point) const {
  const Eigen::VectorXd rel = ambient_point - origin;
  const Eigen::VectorXd local = basis.transpose() * rel;
  const double off_span = (rel - basis * local).norm();

  if (dim == 0) return rel.norm();

  bool inside = true;
  for (const Facet& f : facets) {
    if (f.normal.dot(local) > f.offset + 1e-12) {
      inside = false;
      break;
    }
  }
  if (inside) return off_span;

  double boundary = std::numeric_limits<double>::infinity();
  if (dim == 1) {
    for (const auto& v : vertices) {
      boundary = std::min(boundary, std::abs(local[0] - v[0]));
    }
  } else if (dim == 2) {
    for (const auto& e : edges) {
      boundary = std::min(boundary, point_segment_distance(local, vertices[e[0]],
                                                           vertices[e[1]]));
    }
  } else {
    const Eigen::Vector3d p(local[0], local[1], local[2]);
    for (const auto& t : triangles) {
      auto v3 = [&](int i) {
        return Eigen::Vector3d(vertices[i][0], vertices[i][1], vertices[i][2]);
      };
      boundary =
          std::min(boundary, point_triangle_distance(p, v3(t[0]), v3(t[1]), v3(t[2])));
    }
  }
  return std::hypot(boundary, off_span);
}

Hull convex_hull(const SampleBatch& batch, double dedup) {
  if (batch.points.empty()) {
    throw std::invalid_argument("convex_hull: empty batch");
  }
  const int n = batch.spec.n;
  const int ambient = n - 1;
  if (ambient > 3) {
    throw std::invalid_argument(
        "convex_hull: intrinsic dimension > 3 unsupported");
  }
  std::vector<Eigen::VectorXd> ys;
  ys.reserve(batch.points.size());
  const Eigen::MatrixXd frame = zero_sum_frame(n);
  for (const AlcovePoint& p : batch.points) ys.push_back(frame * p.angles);

  Hull hull;
  hull.ambient_dim = ambient;

  // affine rank from the covariance spectrum
  Eigen::VectorXd mean = Eigen::VectorXd::Zero(ambient);
  for (const auto& y : ys) mean += y;
  mean /= static_cast<double>(ys.size());
  Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(ambient, ambient);
  for (const auto& y : ys) cov += (y - mean) * (y - mean).transpose();
  cov /= static_cast<double>(ys.size());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(cov);
  const Eigen::VectorXd ev = es.eigenvalues();
  const double top = ev[ambient - 1];
  int rank = 0;
  for (int i = 0; i < ambient; ++i) {
    if (ev[i] > top * 1e-14 + dedup * dedup) ++rank;
  }
  hull.dim = rank;
  hull.origin = mean;
  hull.basis = Eigen::MatrixXd::Zero(ambient, rank);
  for (int i = 0; i < rank; ++i) {
    hull.basis.col(i) = es.eigenvectors().col(ambient - 1 - i);
  }

  if (rank == 0) {
    hull.vertices.push_back(Eigen::VectorXd::Zero(0));
    return hull;
  }

  std::vector<Eigen::VectorXd> local;
  local.reserve(ys.size());
  for (const auto& y : ys) local.push_back(hull.basis.transpose() * (y - mean));

  if (rank == 1) {
    double lo = local[0][0], hi = local[0][0];
    for (const auto& p : local) {
      lo = std::min(lo, p[0]);
      hi = std::max(hi, p[0]);
    }
    Eigen::VectorXd a(1), b(1);
    a[0] = lo;
    b[0] = hi;
    hull.vertices = {a, b};
    Hull::Facet f1, f2;
    f1.normal = Eigen::VectorXd::Constant(1, 1.0);
    f1.offset = hi;
    f2.normal = Eigen::VectorXd::Constant(1, -1.0);
    f2.offset = -lo;
    hull.facets = {f1, f2};
    return hull;
  }

  if (rank == 2) {
    const std::vector<Eigen::VectorXd> poly = chain_hull_2d(local);
    hull.vertices = dedup_points(poly, dedup);
    const int m = static_cast<int>(hull.vertices.size());
    for (int i = 0; i < m; ++i) {
      const int j = (i + 1) % m;
      hull.edges.push_back({i, j});
      const Eigen::VectorXd d = hull.vertices[j] - hull.vertices[i];
      Eigen::VectorXd normal(2);
      normal << d[1], -d[0];  // outward for a CCW polygon
      const double len = normal.norm();
      if (len > 0) normal /= len;
      Hull::Facet f;
      f.normal = normal;
      f.offset = normal.dot(hull.vertices[i]);
      hull.facets.push_back(f);
    }
    return hull;
  }

  // rank == 3
  const std::vector<Tri> tris = incremental_hull_3d(local);
  std::vector<int> used;
  for (const Tri& t : tris) {
    used.push_back(t.a);
    used.push_back(t.b);
    used.push_back(t.c);
  }
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  std::map<int, int> remap;
  for (int idx : used) {
    remap[idx] = static_cast<int>(hull.vertices.size());
    hull.vertices.push_back(local[idx]);
  }
  for (const Tri& t : tris) {
    hull.triangles.push_back({remap[t.a], remap[t.b], remap[t.c]});
    Hull::Facet f;
    f.normal = Eigen::VectorXd(3);
    f.normal << t.normal[0], t.normal[1], t.normal[2];
    f.offset = t.offset;
    bool dup = false;
    for (const Hull::Facet& g : hull.facets) {
      if ((g.normal - f.normal).cwiseAbs().maxCoeff() < 1e-9 &&
          std::abs(g.offset - f.offset) < 1e-9) {
        dup = true;
        break;
      }
    }
    if (!dup) hull.facets.push_back(f);
  }
  return hull;
}

double convexity_score(const SampleBatch& batch, int grid_res, double eps,
                       bool* degenerate) {
  if (degenerate) *degenerate = false;
  const Hull hull = convex_hull(batch);
  if (hull.dim == 0) {
    if (degenerate) *degenerate = true;
    return 1.0;
  }
  const int d = hull.dim;
  const Eigen::MatrixXd frame = zero_sum_frame(batch.spec.n);
  std::vector<Eigen::VectorXd> local;
  local.reserve(batch.points.size());
  for (const AlcovePoint& p : batch.points) {
    local.push_back(hull.basis.transpose() * (frame * p.angles - hull.origin));
  }

  Eigen::VectorXd lo = local[0], hi = local[0];
  for (const auto& p : local) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
  const double diameter = (hi - lo).norm();

  if (eps <= 0.0) {
    // mean nearest-neighbour spacing (subsampled for large batches),
    // floored by the grid's resolving power
    const std::size_t probe = std::min<std::size_t>(local.size(), 4000);
    const double cell0 =
        std::max(diameter / std::pow(static_cast<double>(local.size()),
                                     1.0 / d),
                 1e-9);
    BucketGrid nn(local, cell0);
    double sum = 0.0;
    std::size_t cnt = 0;
    const std::size_t stride = std::max<std::size_t>(local.size() / probe, 1);
    for (std::size_t i = 0; i < local.size(); i += stride) {
      const double best = nn.nearest_distance(local[i], static_cast<int>(i));
      if (std::isfinite(best)) {
        sum += best;
        ++cnt;
      }
    }
    const double mean_nn = cnt ? sum / cnt : diameter;
    eps = std::max(3.0 * mean_nn, diameter / 25.0);
  }

  // grid over the bounding box, kept at margin eps inside every facet
  std::vector<Eigen::VectorXd> grid;
  std::vector<int> sizes(d, grid_res);
  std::vector<int> idx(d, 0);
  while (true) {
    Eigen::VectorXd g(d);
    for (int i = 0; i < d; ++i) {
      g[i] = grid_res == 1
                 ? 0.5 * (lo[i] + hi[i])
                 : lo[i] + (hi[i] - lo[i]) * idx[i] / (grid_res - 1);
    }
    bool ok = true;
    for (const Hull::Facet& f : hull.facets) {
      if (f.normal.dot(g) > f.offset - eps) {
        ok = false;
        break;
      }
    }
    if (ok) grid.push_back(g);
    int i = 0;
    while (i < d && ++idx[i] == sizes[i]) idx[i++] = 0;
    if (i == d) break;
  }
  if (grid.empty()) {
    if (degenerate) *degenerate = true;
    return 1.0;
  }

  BucketGrid cover(local, eps);
  std::size_t covered = 0;
  for (const auto& g : grid) {
    if (cover.nearest_distance(g) <= eps) ++covered;
  }
  return static_cast<double>(covered) / grid.size();
}

double hausdorff(const Hull& a, const Hull& b) {
  if (a.dim != b.dim) {
    throw std::invalid_argument("hausdorff: intrinsic dimension mismatch");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.vertices.size(); ++i) {
    worst = std::max(worst, b.distance(a.vertex_ambient(static_cast<int>(i))));
  }
  for (std::size_t i = 0; i < b.vertices.size(); ++i) {
    worst = std::max(worst, a.distance(b.vertex_ambient(static_cast<int>(i))));
  }
  return worst;
}

bool contains_identity(const Hull& h, double tol) {
  return h.distance(Eigen::VectorXd::Zero(h.ambient_dim)) <= tol;
}

SampleBatch sample_momentum_image(const SpaceSpec& spec, int count,
                                  std::uint64_t seed, SampleSource source,
                                  const Tolerances& tol) {
  if (count < 1) {
    throw std::invalid_argument("sample_momentum_image: count must be >= 1");
  }
  SampleBatch batch;
  batch.spec = spec;
  batch.seed = seed;
  batch.source = source;
  batch.count = count;
  batch.points.reserve(count);

  if (source == SampleSource::full_space) {
    for (int i = 0; i < count; ++i) {
      RngStream rng(seed, static_cast<std::uint64_t>(i));
      batch.points.push_back(
          project_to_alcove(momentum(spec, sample_point(spec, rng))));
    }
    return batch;
  }

  const std::vector<QSpacePoint> family = fixed_point_torus_family(spec);
  std::size_t torus_cursor = 0;
  std::uint64_t stream = 0;
  int failures = 0, attempts = 0;
  for (int i = 0; i < count; ++i) {
    if (i % 10 == 0 && !family.empty()) {
      batch.points.push_back(project_to_alcove(
          momentum(spec, family[torus_cursor % family.size()])));
      ++torus_cursor;
      continue;
    }
    for (;;) {
      RngStream rng(seed, 0x8000000000000000ull + stream++);
      ++attempts;
      const SolveResult sr = fixed_point_solve(spec, rng, tol);
      if (sr.ok()) {
        batch.points.push_back(project_to_alcove(momentum(spec, *sr.point)));
        break;
      }
      ++failures;
      if (attempts >= 20 && failures * 2 > attempts) {
        throw SolverAbortError(
            "fixed-point sampler: failure rate above 50% (" +
            std::to_string(failures) + "/" + std::to_string(attempts) +
            " attempts)");
      }
    }
  }
  return batch;
}

ConvexityVerdict compare_real_convexity(const SpaceSpec& spec, int full_count,
                                        int fixed_count, std::uint64_t seed,
                                        const Tolerances& tol) {
  const SampleBatch full = sample_momentum_image(
      spec, full_count, seed, SampleSource::full_space, tol);
  const SampleBatch fixed = sample_momentum_image(
      spec, fixed_count, seed + 1, SampleSource::fixed_point_set, tol);

  ConvexityVerdict v;
  v.hull_full = convex_hull(full);
  v.hull_fixed = convex_hull(fixed);
  bool deg_full = false, deg_fixed = false;
  v.score_full = convexity_score(full, tol.score_grid, 0.0, &deg_full);
  v.score_fixed = convexity_score(fixed, tol.score_grid, 0.0, &deg_fixed);
  v.degenerate = deg_full || deg_fixed;
  v.hausdorff_distance = hausdorff(v.hull_full, v.hull_fixed);
  v.pass = v.hausdorff_distance <= tol.hausdorff_pass &&
           v.score_full >= tol.score_pass && v.score_fixed >= tol.score_pass;
  return v;
}

}  // namespace qham
