#include "trinet/operators.hpp"

#include "trinet/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace trinet {

std::string to_string(OperatorKind kind) {
  switch (kind) {
  case OperatorKind::Univariate:
    return "univariate";
  case OperatorKind::SX:
    return "sx";
  case OperatorKind::SY:
    return "sy";
  case OperatorKind::Prod:
    return "prod";
  case OperatorKind::GBS:
    return "gbs";
  }
  return "?";
}

std::optional<OperatorKind> operator_kind_from_string(const std::string &name) {
  for (OperatorKind kind : {OperatorKind::Univariate, OperatorKind::SX, OperatorKind::SY,
                            OperatorKind::Prod, OperatorKind::GBS})
    if (to_string(kind) == name)
      return kind;
  return std::nullopt;
}

OperatorSpec::OperatorSpec(OperatorKind kind, int n1, int n2, Kernel kernel, Triangle triangle)
    : kind_(kind), n1_(n1), n2_(n2), kernel_(std::move(kernel)), triangle_(triangle) {
  if (n1 < 1 || n2 < 1)
    throw ConfigError("node counts n1 and n2 must be at least 1");
}

OperatorSpec OperatorSpec::with_kind(OperatorKind kind) const {
  return OperatorSpec(kind, n1_, n2_, kernel_, triangle_);
}

ActiveWeights active_weights(const Kernel &kernel, double length, int n, double t) {
  const double h = length / static_cast<double>(n);
  const double scale = 2.0 * kernel.m() * static_cast<double>(n) / length;
  const int lo = std::clamp(static_cast<int>(std::floor(t / h)), 0, n - 1);
  const double lo_node = uniform_node(lo, n, length);
  const double hi_node = uniform_node(lo + 1, n, length);
  return {lo, kernel(scale * (t - lo_node)), kernel(scale * (t - hi_node))};
}

namespace {

[[noreturn]] void reject_point(double x, double y) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "point (%.17g, %.17g) is outside the triangle", x, y);
  throw DomainError(buf);
}

void require_inside(const Triangle &triangle, double x, double y) {
  if (!triangle.contains(x, y))
    reject_point(x, y);
}

// Chord lengths through (x, y), clamped so tolerance-level overshoot past
// the hypotenuse cannot produce a negative length.
double chord_x(const Triangle &t, double y) { return std::max(t.a() - y, 0.0); }
double chord_y(const Triangle &t, double x) { return std::max(t.a() - x, 0.0); }

} // namespace

double eval_univariate(const Kernel &kernel, const std::function<double(double)> &f,
                       Interval interval, int n, double x) {
  if (!(interval.lo < interval.hi))
    throw ConfigError("interval must satisfy lo < hi");
  if (n < 1)
    throw ConfigError("node count must be at least 1");
  if (!(x >= interval.lo && x <= interval.hi)) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "x = %.17g is outside [%.17g, %.17g]", x, interval.lo,
                  interval.hi);
    throw DomainError(buf);
  }

  const double length = interval.hi - interval.lo;
  const ActiveWeights w = active_weights(kernel, length, n, x - interval.lo);
  const double lo_node = interval.lo + uniform_node(w.lo, n, length);
  const double hi_node = interval.lo + uniform_node(w.lo + 1, n, length);
  double sum = 0.0;
  if (w.w_lo != 0.0)
    sum += f(lo_node) * w.w_lo;
  if (w.w_hi != 0.0)
    sum += f(hi_node) * w.w_hi;
  return sum;
}

double eval_sx(const OperatorSpec &spec, const TargetFunction &f, double x, double y) {
  const Triangle &tri = spec.triangle();
  require_inside(tri, x, y);
  if (tri.is_top_corner({x, y}))
    return f(0.0, tri.a());

  const double length = chord_x(tri, y);
  const double t = std::clamp(x, 0.0, length);
  const int n = spec.n1();
  const ActiveWeights w = active_weights(spec.kernel(), length, n, t);
  double sum = 0.0;
  if (w.w_lo != 0.0)
    sum += f(uniform_node(w.lo, n, length), y) * w.w_lo;
  if (w.w_hi != 0.0)
    sum += f(uniform_node(w.lo + 1, n, length), y) * w.w_hi;
  return sum;
}

double eval_sy(const OperatorSpec &spec, const TargetFunction &f, double x, double y) {
  const Triangle &tri = spec.triangle();
  require_inside(tri, x, y);
  if (tri.is_right_corner({x, y}))
    return f(tri.a(), 0.0);

  const double length = chord_y(tri, x);
  const double t = std::clamp(y, 0.0, length);
  const int n = spec.n2();
  const ActiveWeights w = active_weights(spec.kernel(), length, n, t);
  double sum = 0.0;
  if (w.w_lo != 0.0)
    sum += f(x, uniform_node(w.lo, n, length)) * w.w_lo;
  if (w.w_hi != 0.0)
    sum += f(x, uniform_node(w.lo + 1, n, length)) * w.w_hi;
  return sum;
}

double eval_prod(const OperatorSpec &spec, const TargetFunction &f, double x, double y) {
  const Triangle &tri = spec.triangle();
  require_inside(tri, x, y);
  // Both singular corners lie on the hypotenuse, where the operator
  // reproduces F; define it there by that value.
  if (tri.is_top_corner({x, y}))
    return f(0.0, tri.a());
  if (tri.is_right_corner({x, y}))
    return f(tri.a(), 0.0);

  const double len_x = chord_x(tri, y);
  const double len_y = chord_y(tri, x);
  const int n1 = spec.n1();
  const int n2 = spec.n2();
  const ActiveWeights wx = active_weights(spec.kernel(), len_x, n1, std::clamp(x, 0.0, len_x));
  const ActiveWeights wy = active_weights(spec.kernel(), len_y, n2, std::clamp(y, 0.0, len_y));

  const double xs[2] = {uniform_node(wx.lo, n1, len_x), uniform_node(wx.lo + 1, n1, len_x)};
  const double ys[2] = {uniform_node(wy.lo, n2, len_y), uniform_node(wy.lo + 1, n2, len_y)};
  const double wxs[2] = {wx.w_lo, wx.w_hi};
  const double wys[2] = {wy.w_lo, wy.w_hi};

  double sum = 0.0;
  for (int k = 0; k < 2; ++k) {
    if (wxs[k] == 0.0)
      continue;
    for (int l = 0; l < 2; ++l) {
      if (wys[l] == 0.0)
        continue;
      sum += f(xs[k], ys[l]) * wxs[k] * wys[l];
    }
  }
  return sum;
}

double eval_gbs(const OperatorSpec &spec, const TargetFunction &f, double x, double y) {
  return eval_sx(spec, f, x, y) + eval_sy(spec, f, x, y) - eval_prod(spec, f, x, y);
}

double evaluate(const OperatorSpec &spec, const TargetFunction &f, Point p) {
  switch (spec.kind()) {
  case OperatorKind::SX:
    return eval_sx(spec, f, p.x, p.y);
  case OperatorKind::SY:
    return eval_sy(spec, f, p.x, p.y);
  case OperatorKind::Prod:
    return eval_prod(spec, f, p.x, p.y);
  case OperatorKind::GBS:
    return eval_gbs(spec, f, p.x, p.y);
  case OperatorKind::Univariate:
    break;
  }
  throw ConfigError("the univariate operator cannot be evaluated at a point of the triangle");
}

std::vector<double> eval_on_grid(const OperatorSpec &spec, const TargetFunction &f,
                                 std::span<const Point> points) {
  std::vector<double> out;
  out.reserve(points.size());
  for (const Point &p : points)
    out.push_back(evaluate(spec, f, p));
  return out;
}

namespace {

double full_weight_sum(const Kernel &kernel, double length, int n, double t) {
  const double scale = 2.0 * kernel.m() * static_cast<double>(n) / length;
  double sum = 0.0;
  for (int k = 0; k <= n; ++k)
    sum += kernel(scale * (t - uniform_node(k, n, length)));
  return sum;
}

} // namespace

double sx_weight_sum(const OperatorSpec &spec, Point p) {
  const Triangle &tri = spec.triangle();
  require_inside(tri, p.x, p.y);
  if (tri.is_top_corner(p))
    return 1.0;
  const double length = chord_x(tri, p.y);
  return full_weight_sum(spec.kernel(), length, spec.n1(), std::clamp(p.x, 0.0, length));
}

double sy_weight_sum(const OperatorSpec &spec, Point p) {
  const Triangle &tri = spec.triangle();
  require_inside(tri, p.x, p.y);
  if (tri.is_right_corner(p))
    return 1.0;
  const double length = chord_y(tri, p.x);
  return full_weight_sum(spec.kernel(), length, spec.n2(), std::clamp(p.y, 0.0, length));
}

double prod_weight_sum(const OperatorSpec &spec, Point p) {
  const Triangle &tri = spec.triangle();
  require_inside(tri, p.x, p.y);
  if (tri.is_top_corner(p) || tri.is_right_corner(p))
    return 1.0;
  const double len_x = chord_x(tri, p.y);
  const double len_y = chord_y(tri, p.x);
  const double scale_x = 2.0 * spec.kernel().m() * spec.n1() / len_x;
  const double scale_y = 2.0 * spec.kernel().m() * spec.n2() / len_y;
  const double x = std::clamp(p.x, 0.0, len_x);
  const double y = std::clamp(p.y, 0.0, len_y);
  double sum = 0.0;
  for (int k = 0; k <= spec.n1(); ++k) {
    const double wx = spec.kernel()(scale_x * (x - uniform_node(k, spec.n1(), len_x)));
    for (int l = 0; l <= spec.n2(); ++l)
      sum += wx * spec.kernel()(scale_y * (y - uniform_node(l, spec.n2(), len_y)));
  }
  return sum;
}

} // namespace trinet
