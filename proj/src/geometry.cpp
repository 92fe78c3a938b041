#include "trinet/geometry.hpp"

#include "trinet/errors.hpp"

#include <cmath>
#include <random>

namespace trinet {

std::string to_string(Edge edge) {
  switch (edge) {
  case Edge::Gamma1:
    return "gamma1";
  case Edge::Gamma2:
    return "gamma2";
  case Edge::Gamma3:
    return "gamma3";
  }
  return "?";
}

Triangle::Triangle(double a) : a_(a) {
  if (!(a > 0.0) || !std::isfinite(a))
    throw ConfigError("triangle leg length must be positive and finite");
}

bool Triangle::contains(double x, double y) const {
  const double tol = tolerance();
  return x >= -tol && y >= -tol && x + y <= a_ + tol;
}

bool Triangle::is_top_corner(Point p) const {
  return std::abs(p.x) <= tolerance() && std::abs(p.y - a_) <= tolerance();
}

bool Triangle::is_right_corner(Point p) const {
  return std::abs(p.x - a_) <= tolerance() && std::abs(p.y) <= tolerance();
}

std::vector<Point> boundary_samples(const Triangle &triangle, Edge edge, int count) {
  if (count < 2)
    throw ConfigError("boundary sample count must be at least 2");
  const double a = triangle.a();
  const int last = count - 1;

  std::vector<Point> points;
  points.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double s = uniform_node(i, last, a);
    switch (edge) {
    case Edge::Gamma1:
      points.push_back({s, 0.0});
      break;
    case Edge::Gamma2:
      points.push_back({0.0, s});
      break;
    case Edge::Gamma3:
      points.push_back({a - s, s});
      break;
    }
  }
  return points;
}

std::vector<Point> interior_grid(const Triangle &triangle, int resolution) {
  if (resolution < 1)
    throw ConfigError("grid resolution must be at least 1");
  const double a = triangle.a();

  std::vector<Point> points;
  points.reserve(interior_grid_size(resolution));
  for (int i = 0; i <= resolution; ++i)
    for (int j = 0; j + i <= resolution; ++j)
      points.push_back({uniform_node(i, resolution, a), uniform_node(j, resolution, a)});
  return points;
}

std::vector<Point> random_points(const Triangle &triangle, int count, std::uint64_t seed) {
  if (count < 0)
    throw ConfigError("random point count must be nonnegative");
  std::mt19937_64 gen(seed);
  const auto unit = [&gen] { return static_cast<double>(gen() >> 11) * 0x1.0p-53; };

  std::vector<Point> points;
  points.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    double u = unit();
    double v = unit();
    if (u + v > 1.0) {
      u = 1.0 - u;
      v = 1.0 - v;
    }
    points.push_back({u * triangle.a(), v * triangle.a()});
  }
  return points;
}

} // namespace trinet
