#pragma once

// Brute-force reference implementations. They sum every node and use their
// own node formulas; nothing here calls the fast paths under test.

#include "trinet/activation.hpp"
#include "trinet/targets.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace oracle {

inline double univariate(const trinet::Kernel &psi, const std::function<double(double)> &f,
                         double lo, double hi, int n, double x) {
  const double h = (hi - lo) / n;
  const double scale = 2.0 * psi.m() / h;
  double sum = 0.0;
  for (int k = 0; k <= n; ++k) {
    const double xk = lo + k * h;
    sum += f(xk) * psi(scale * (x - xk));
  }
  return sum;
}

inline double sx(const trinet::Kernel &psi, double a, int n1, const trinet::TargetFunction &f,
                 double x, double y) {
  if (x == 0.0 && y == a)
    return f(0.0, a);
  const double len = a - y;
  double sum = 0.0;
  for (int k = 0; k <= n1; ++k) {
    const double xk = k * len / n1;
    sum += f(xk, y) * psi(2.0 * psi.m() * n1 / len * (x - xk));
  }
  return sum;
}

inline double sy(const trinet::Kernel &psi, double a, int n2, const trinet::TargetFunction &f,
                 double x, double y) {
  if (x == a && y == 0.0)
    return f(a, 0.0);
  const double len = a - x;
  double sum = 0.0;
  for (int l = 0; l <= n2; ++l) {
    const double yl = l * len / n2;
    sum += f(x, yl) * psi(2.0 * psi.m() * n2 / len * (y - yl));
  }
  return sum;
}

inline double prod(const trinet::Kernel &psi, double a, int n1, int n2,
                   const trinet::TargetFunction &f, double x, double y) {
  if ((x == 0.0 && y == a) || (x == a && y == 0.0))
    return f(x, y);
  const double len_x = a - y;
  const double len_y = a - x;
  double sum = 0.0;
  for (int k = 0; k <= n1; ++k) {
    const double xk = k * len_x / n1;
    const double wx = psi(2.0 * psi.m() * n1 / len_x * (x - xk));
    for (int l = 0; l <= n2; ++l) {
      const double yl = l * len_y / n2;
      sum += f(xk, yl) * wx * psi(2.0 * psi.m() * n2 / len_y * (y - yl));
    }
  }
  return sum;
}

inline double gbs(const trinet::Kernel &psi, double a, int n1, int n2,
                  const trinet::TargetFunction &f, double x, double y) {
  return sx(psi, a, n1, f, x, y) + sy(psi, a, n2, f, x, y) - prod(psi, a, n1, n2, f, x, y);
}

/// Kernels written out piecewise, as an independent check of the
/// difference-of-activations construction.
inline double hat(double t) { return std::max(0.0, 1.0 - std::abs(t)); }
inline double wide_hat(double t) { return std::max(0.0, 1.0 - 0.5 * std::abs(t)); }
inline double quintic_bump(double t) {
  const auto s = [](double u) { return 10 * u * u * u - 15 * u * u * u * u + 6 * std::pow(u, 5); };
  if (t <= -1.0 || t >= 1.0)
    return 0.0;
  if (t <= 0.0)
    return s(t + 1.0);
  return 1.0 - s(t);
}

} // namespace oracle
