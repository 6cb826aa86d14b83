#include "qham/svg.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

namespace qham {

namespace {

constexpr int kView = 800;
constexpr double kPad = 60.0;
constexpr std::size_t kMaxDrawn = 5000;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", x);
  return buf;
}

struct Mapper {
  double scale = 1.0;
  double x0 = 0.0, y0 = 0.0;   // world bbox corner
  double ox = 0.0, oy = 0.0;   // viewport offset

  // world (embedded, up to 2d) -> viewport; y axis flipped
  std::pair<double, double> operator()(const Eigen::VectorXd& w) const {
    const double wx = w.size() > 0 ? w[0] : 0.0;
    const double wy = w.size() > 1 ? w[1] : 0.0;
    return {ox + (wx - x0) * scale, kView - (oy + (wy - y0) * scale)};
  }
};

}  // namespace

std::vector<AlcovePoint> alcove_vertices(int n) {
  std::vector<AlcovePoint> out;
  out.emplace_back(Vector::Zero(n));
  for (int k = 1; k < n; ++k) {
    Vector v(n);
    for (int i = 0; i < n; ++i) {
      v[i] = i < k ? 2.0 * std::numbers::pi * (n - k) / n
                   : -2.0 * std::numbers::pi * k / n;
    }
    out.emplace_back(std::move(v));
  }
  return out;
}

std::string convexity_svg(const SampleBatch& full, const SampleBatch& fixed,
                          const Hull& hull_full, const Hull& hull_fixed) {
  const int n = full.spec.n;
  if (n > 3) {
    throw std::invalid_argument("convexity_svg: alcove rank above 2");
  }
  const Eigen::MatrixXd frame = zero_sum_frame(n);
  const std::vector<AlcovePoint> corners = alcove_vertices(n);

  double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
  for (const AlcovePoint& c : corners) {
    const Eigen::VectorXd e = frame * c.angles;
    x0 = std::min(x0, e[0]);
    x1 = std::max(x1, e[0]);
    if (n == 3) {
      y0 = std::min(y0, e[1]);
      y1 = std::max(y1, e[1]);
    }
  }
  if (n == 2) {
    y0 = -0.15 * (x1 - x0);
    y1 = 0.15 * (x1 - x0);
  }
  Mapper map;
  map.x0 = x0;
  map.y0 = y0;
  map.scale = (kView - 2.0 * kPad) / std::max(x1 - x0, y1 - y0);
  map.ox = kPad;
  map.oy = kPad;

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" "
         "height=\"800\" viewBox=\"0 0 800 800\">\n";
  svg += "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";

  auto poly = [&](const std::vector<Eigen::VectorXd>& pts, const char* style) {
    std::string s = "<polygon points=\"";
    for (const auto& p : pts) {
      const auto [vx, vy] = map(p);
      s += num(vx) + "," + num(vy) + " ";
    }
    s += "\" ";
    s += style;
    s += "/>\n";
    return s;
  };

  // alcove boundary
  {
    std::vector<Eigen::VectorXd> pts;
    for (const AlcovePoint& c : corners) pts.push_back(frame * c.angles);
    if (n == 2) {
      const auto [ax, ay] = map(pts[0]);
      const auto [bx, by] = map(pts[1]);
      svg += "<line x1=\"" + num(ax) + "\" y1=\"" + num(ay) + "\" x2=\"" +
             num(bx) + "\" y2=\"" + num(by) +
             "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    } else {
      svg += poly(pts, "fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"");
    }
  }

  auto scatter = [&](const SampleBatch& b, const char* color, double r,
                     double yshift) {
    std::string s;
    const std::size_t stride = std::max<std::size_t>(
        (b.points.size() + kMaxDrawn - 1) / kMaxDrawn, 1);
    for (std::size_t i = 0; i < b.points.size(); i += stride) {
      const Eigen::VectorXd e = frame * b.points[i].angles;
      auto [vx, vy] = map(e);
      vy += yshift;
      s += "<circle cx=\"" + num(vx) + "\" cy=\"" + num(vy) + "\" r=\"" +
           num(r) + "\" fill=\"" + color + "\"/>\n";
    }
    return s;
  };
  svg += scatter(full, "#b0b0b0", 1.0, n == 2 ? -12.0 : 0.0);
  svg += scatter(fixed, "#e08030", 1.5, n == 2 ? 12.0 : 0.0);

  auto hull_shape = [&](const Hull& h, const char* stroke, bool dashed,
                        double yshift) {
    std::vector<Eigen::VectorXd> pts;
    for (std::size_t i = 0; i < h.vertices.size(); ++i) {
      pts.push_back(h.vertex_ambient(static_cast<int>(i)));
    }
    if (pts.empty()) return std::string();
    std::string style = "fill=\"none\" stroke=\"";
    style += stroke;
    style += "\" stroke-width=\"2\"";
    if (dashed) style += " stroke-dasharray=\"6,4\"";
    if (pts.size() == 1) {
      auto [vx, vy] = map(pts[0]);
      return "<circle cx=\"" + num(vx) + "\" cy=\"" + num(vy - yshift) +
             "\" r=\"4\" fill=\"none\" stroke=\"" + std::string(stroke) +
             "\" stroke-width=\"2\"/>\n";
    }
    if (pts.size() == 2) {
      auto [ax, ay] = map(pts[0]);
      auto [bx, by] = map(pts[1]);
      return "<line x1=\"" + num(ax) + "\" y1=\"" + num(ay - yshift) +
             "\" x2=\"" + num(bx) + "\" y2=\"" + num(by - yshift) + "\" " +
             style + "/>\n";
    }
    return poly(pts, style.c_str());
  };
  svg += hull_shape(hull_full, "#3060c0", false, n == 2 ? 24.0 : 0.0);
  svg += hull_shape(hull_fixed, "#c03030", true, n == 2 ? -24.0 : 0.0);

  svg += "</svg>\n";
  return svg;
}

}  // namespace qham
