#pragma once

#include "trinet/activation.hpp"
#include "trinet/geometry.hpp"
#include "trinet/targets.hpp"

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace trinet {

enum class OperatorKind { Univariate, SX, SY, Prod, GBS };

std::string to_string(OperatorKind kind);
/// Accepts "sx", "sy", "prod", "gbs" (and "univariate"); nullopt otherwise.
std::optional<OperatorKind> operator_kind_from_string(const std::string &name);

/// The four bivariate operators in report order.
inline constexpr OperatorKind kBivariateKinds[] = {OperatorKind::SX, OperatorKind::SY,
                                                   OperatorKind::Prod, OperatorKind::GBS};

struct Interval {
  double lo = 0.0;
  double hi = 1.0;
};

/// Which operator, with how many cells along each direction. n2 is unused
/// by SX and n1 by SY, but both must be positive.
class OperatorSpec {
public:
  OperatorSpec(OperatorKind kind, int n1, int n2, Kernel kernel, Triangle triangle = Triangle());

  OperatorKind kind() const { return kind_; }
  int n1() const { return n1_; }
  int n2() const { return n2_; }
  const Kernel &kernel() const { return kernel_; }
  const Triangle &triangle() const { return triangle_; }

  OperatorSpec with_kind(OperatorKind kind) const;

private:
  OperatorKind kind_;
  int n1_;
  int n2_;
  Kernel kernel_;
  Triangle triangle_;
};

/// Only the two kernel weights that can be nonzero at t in [0, length] when
/// [0, length] is split into n equal cells: nodes lo and lo + 1.
struct ActiveWeights {
  int lo = 0;
  double w_lo = 0.0;
  double w_hi = 0.0;
};

ActiveWeights active_weights(const Kernel &kernel, double length, int n, double t);

/// sum_k f(x_k) Psi(2m/h (x - x_k)) over the uniform nodes of the interval.
double eval_univariate(const Kernel &kernel, const std::function<double(double)> &f,
                       Interval interval, int n, double x);

double eval_sx(const OperatorSpec &spec, const TargetFunction &f, double x, double y);
double eval_sy(const OperatorSpec &spec, const TargetFunction &f, double x, double y);
double eval_prod(const OperatorSpec &spec, const TargetFunction &f, double x, double y);
double eval_gbs(const OperatorSpec &spec, const TargetFunction &f, double x, double y);

/// Dispatch on spec.kind(); the univariate kind is rejected with ConfigError.
double evaluate(const OperatorSpec &spec, const TargetFunction &f, Point p);

/// Elementwise evaluate(); output order matches input order.
std::vector<double> eval_on_grid(const OperatorSpec &spec, const TargetFunction &f,
                                 std::span<const Point> points);

/// Full sums of the kernel weights (every node, no shortcut) used to check
/// the partition of unity. Both should be 1 everywhere in the triangle.
double sx_weight_sum(const OperatorSpec &spec, Point p);
double sy_weight_sum(const OperatorSpec &spec, Point p);
double prod_weight_sum(const OperatorSpec &spec, Point p);

} // namespace trinet
