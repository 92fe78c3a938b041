#include "trinet/moduli.hpp"

#include "trinet/errors.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace trinet {

namespace {

void validate(double delta1, double delta2, const ModulusGrid &grid) {
  if (!(delta1 >= 0.0) || !(delta2 >= 0.0))
    throw ConfigError("modulus deltas must be nonnegative");
  if (grid.resolution < 1 || grid.offset_steps < 1)
    throw ConfigError("modulus grid resolution and offset steps must be positive");
}

// Offsets j * delta / steps for j = -steps..steps (or 0..steps).
std::vector<double> offsets(double delta, int steps, bool symmetric) {
  std::vector<double> out;
  for (int j = symmetric ? -steps : 0; j <= steps; ++j)
    out.push_back(static_cast<double>(j) * delta / static_cast<double>(steps));
  return out;
}

} // namespace

ModulusEstimate omega_univariate(const std::function<double(double)> &f, Interval interval,
                                 double delta, ModulusGrid grid) {
  validate(delta, 0.0, grid);
  if (!(interval.lo < interval.hi))
    throw ConfigError("interval must satisfy lo < hi");

  const double length = interval.hi - interval.lo;
  const double slack = 1e-12 * length;
  const std::vector<double> hs = offsets(delta, grid.offset_steps, false);

  double best = 0.0;
  for (int i = 0; i <= grid.resolution; ++i) {
    const double x = interval.lo + uniform_node(i, grid.resolution, length);
    const double fx = f(x);
    for (double h : hs) {
      const double xh = x + h;
      if (xh > interval.hi + slack)
        break;
      best = std::max(best, std::abs(f(std::min(xh, interval.hi)) - fx));
    }
  }
  return {best, delta, 0.0, grid.resolution};
}

ModulusEstimate omega_bivariate(const TargetFunction &f, const Triangle &triangle, double delta1,
                                double delta2, ModulusGrid grid) {
  validate(delta1, delta2, grid);
  const std::vector<double> hs = offsets(delta1, grid.offset_steps, true);
  const std::vector<double> ks = offsets(delta2, grid.offset_steps, true);

  double best = 0.0;
  for (const Point &p : interior_grid(triangle, grid.resolution)) {
    const double fp = f(p.x, p.y);
    for (double h : hs) {
      const double x = p.x + h;
      if (x < -triangle.tolerance() || x > triangle.a() + triangle.tolerance())
        continue;
      for (double k : ks) {
        const double y = p.y + k;
        if (!triangle.contains(x, y))
          continue;
        best = std::max(best, std::abs(f(x, y) - fp));
      }
    }
  }
  return {best, delta1, delta2, grid.resolution};
}

ModulusEstimate omega_mixed(const TargetFunction &f, const Triangle &triangle, double delta1,
                            double delta2, ModulusGrid grid) {
  validate(delta1, delta2, grid);
  const std::vector<double> hs = offsets(delta1, grid.offset_steps, true);
  const std::vector<double> ks = offsets(delta2, grid.offset_steps, true);
  std::vector<double> f_xk(ks.size());
  std::vector<bool> ok_k(ks.size());

  double best = 0.0;
  for (const Point &p : interior_grid(triangle, grid.resolution)) {
    const double fp = f(p.x, p.y);
    for (std::size_t j = 0; j < ks.size(); ++j) {
      ok_k[j] = triangle.contains(p.x, p.y + ks[j]);
      if (ok_k[j])
        f_xk[j] = f(p.x, p.y + ks[j]);
    }
    for (double h : hs) {
      const double x = p.x + h;
      if (!triangle.contains(x, p.y))
        continue;
      const double f_h = f(x, p.y);
      for (std::size_t j = 0; j < ks.size(); ++j) {
        // The far corner is the binding constraint for the rectangle.
        if (!ok_k[j] || !triangle.contains(x, p.y + ks[j]))
          continue;
        const double mixed = f_h + f_xk[j] - f(x, p.y + ks[j]) - fp;
        best = std::max(best, std::abs(mixed));
      }
    }
  }
  return {best, delta1, delta2, grid.resolution};
}

} // namespace trinet
