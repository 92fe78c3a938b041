#pragma once

#include "trinet/geometry.hpp"
#include "trinet/operators.hpp"
#include "trinet/targets.hpp"

#include <functional>

namespace trinet {

/// A lower estimate of a modulus of continuity obtained by exhaustive search
/// over a point grid and an offset grid. Refining either grid (nested) can
/// only raise the value.
struct ModulusEstimate {
  double value = 0.0;
  double delta1 = 0.0;
  double delta2 = 0.0; // unused for the univariate modulus
  int sample_resolution = 0;
};

/// Search grids. The point grid has `resolution` cells (resolution + 1 points
/// per side); offsets are j * delta / offset_steps for |j| <= offset_steps.
/// Doubling `resolution` or `offset_steps` yields a superset of the samples.
struct ModulusGrid {
  int resolution = 400;
  int offset_steps = 64;
};

inline constexpr ModulusGrid kUnivariateDefaultGrid{2000, 64};

/// sup |f(x + h) - f(x)| over x, x + h in the interval and 0 <= h <= delta.
ModulusEstimate omega_univariate(const std::function<double(double)> &f, Interval interval,
                                 double delta, ModulusGrid grid = kUnivariateDefaultGrid);

/// sup |F(x + h, y + k) - F(x, y)| over (x, y) and (x + h, y + k) in the
/// triangle, |h| <= delta1, |k| <= delta2.
ModulusEstimate omega_bivariate(const TargetFunction &f, const Triangle &triangle, double delta1,
                                double delta2, ModulusGrid grid = {});

/// sup |F(x+h, y) + F(x, y+k) - F(x+h, y+k) - F(x, y)| over rectangles with
/// all four corners in the triangle, |h| <= delta1, |k| <= delta2.
ModulusEstimate omega_mixed(const TargetFunction &f, const Triangle &triangle, double delta1,
                            double delta2, ModulusGrid grid = {});

} // namespace trinet
