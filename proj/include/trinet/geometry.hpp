#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace trinet {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

enum class Edge {
  Gamma1, // y = 0
  Gamma2, // x = 0
  Gamma3, // x + y = a
};

std::string to_string(Edge edge);

/// The right triangle with vertices (0,0), (a,0), (0,a).
class Triangle {
public:
  explicit Triangle(double a = 1.0);

  double a() const { return a_; }
  /// Absolute slack used for containment and corner detection: 1e-12 * a.
  double tolerance() const { return 1e-12 * a_; }

  bool contains(double x, double y) const;
  bool contains(Point p) const { return contains(p.x, p.y); }

  /// True if p is within tolerance of the vertex (0, a) or (a, 0).
  bool is_top_corner(Point p) const;
  bool is_right_corner(Point p) const;

private:
  double a_;
};

/// `count` points uniformly spaced along the edge, both endpoints included.
/// Gamma1 runs (0,0)->(a,0), Gamma2 (0,0)->(0,a), Gamma3 (a,0)->(0,a).
std::vector<Point> boundary_samples(const Triangle &triangle, Edge edge, int count);

/// All (i a/N, j a/N) with i, j >= 0 and i + j <= N, ordered by i then j.
std::vector<Point> interior_grid(const Triangle &triangle, int resolution);

/// `count` pseudo-random points uniformly distributed over the triangle.
/// The sequence depends only on `seed` (64-bit Mersenne twister with an
/// explicit bits-to-double mapping, so it is identical across standard
/// libraries).
std::vector<Point> random_points(const Triangle &triangle, int count, std::uint64_t seed);

inline std::size_t interior_grid_size(int resolution) {
  const auto n = static_cast<std::size_t>(resolution);
  return (n + 1) * (n + 2) / 2;
}

/// Node k of a uniform partition of [0, length] into n cells; node n is
/// exactly `length`.
inline double uniform_node(int k, int n, double length) {
  return k == n ? length : static_cast<double>(k) * length / static_cast<double>(n);
}

} // namespace trinet
