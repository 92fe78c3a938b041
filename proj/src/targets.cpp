#include "trinet/targets.hpp"

#include "trinet/errors.hpp"
#include "trinet/exprparse.hpp"

#include <cmath>

namespace trinet {

namespace {

double sin_cos(double x, double y) { return std::sin(10.0 * x) + std::cos(5.0 * y); }

double gaussian_peak(double x, double y) {
  const double dx = x - 0.2;
  const double dy = y - 0.3;
  return -(1.0 / 7.0) * std::exp(-(81.0 / 16.0) * (dx * dx + dy * dy));
}

} // namespace

std::vector<std::string> target_names() { return {"gaussian_peak", "sin10x_cos5y"}; }

TargetFunction make_target(const std::string &name) {
  if (name == "sin10x_cos5y")
    return {name, sin_cos};
  if (name == "gaussian_peak")
    return {name, gaussian_peak};
  throw ConfigError("unknown target '" + name + "'; valid names: gaussian_peak, sin10x_cos5y");
}

TargetFunction target_from_expr(const std::string &source) {
  Expr expr = parse(source);
  return {source, [expr](double x, double y) { return expr(x, y); }};
}

} // namespace trinet
