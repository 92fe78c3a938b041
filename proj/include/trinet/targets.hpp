#pragma once

#include <functional>
#include <string>
#include <vector>

namespace trinet {

/// A real function F(x, y) to be approximated. Operators sample F at nodes
/// (x_k, y_l) with x_k <= a - y and y_l <= a - x, which can leave the
/// triangle (never the square [0,a]^2), so F must be defined there too.
struct TargetFunction {
  std::string name;
  std::function<double(double, double)> eval;

  double operator()(double x, double y) const { return eval(x, y); }
};

/// Built-ins: "sin10x_cos5y" = sin(10x) + cos(5y) and
/// "gaussian_peak" = -(1/7) exp(-(81/16)((x-0.2)^2 + (y-0.3)^2)).
TargetFunction make_target(const std::string &name);
std::vector<std::string> target_names();

/// Target defined by an arithmetic expression in x and y; throws ParseError.
TargetFunction target_from_expr(const std::string &source);

} // namespace trinet
