#include "trinet/analysis.hpp"

#include "trinet/errors.hpp"

#include <algorithm>
#include <cmath>

namespace trinet {

double sup_error(const OperatorSpec &spec, const TargetFunction &f, int resolution) {
  double worst = 0.0;
  for (const Point &p : interior_grid(spec.triangle(), resolution))
    worst = std::max(worst, std::abs(evaluate(spec, f, p) - f(p.x, p.y)));
  return worst;
}

namespace {

// Rows of the moduli lattice: row j sits at s = j a / R and has R - j cells,
// so its points coincide with the lattice points (i a / R, s).
template <typename RowFunction>
double max_over_rows(const Triangle &tri, int n, const BoundOptions &options, int resolution,
                     RowFunction row) {
  const int res = options.moduli_resolution > 0 ? options.moduli_resolution : resolution;
  double worst = 0.0;
  for (int j = 0; j < res; ++j) {
    const double s = uniform_node(j, res, tri.a());
    const double length = tri.a() - s;
    if (length <= tri.tolerance())
      continue;
    const ModulusGrid grid{res - j, options.offset_steps_1d};
    const ModulusEstimate est = omega_univariate(
        [&](double t) { return row(t, s); }, Interval{0.0, length}, length / n, grid);
    worst = std::max(worst, est.value);
  }
  return worst;
}

} // namespace

double error_bound(const OperatorSpec &spec, const TargetFunction &f, int resolution,
                   const BoundOptions &options) {
  const Triangle &tri = spec.triangle();
  const double a = tri.a();
  const int res = options.moduli_resolution > 0 ? options.moduli_resolution : resolution;
  const ModulusGrid grid2d{res, options.offset_steps_2d};

  switch (spec.kind()) {
  case OperatorKind::SX:
    return max_over_rows(tri, spec.n1(), options, resolution,
                         [&](double t, double y) { return f(t, y); });
  case OperatorKind::SY:
    return max_over_rows(tri, spec.n2(), options, resolution,
                         [&](double t, double x) { return f(x, t); });
  case OperatorKind::Prod:
    return omega_bivariate(f, tri, a / spec.n1(), a / spec.n2(), grid2d).value;
  case OperatorKind::GBS:
    return omega_mixed(f, tri, a / spec.n1(), a / spec.n2(), grid2d).value;
  case OperatorKind::Univariate:
    break;
  }
  throw ConfigError("no bivariate error bound for the univariate operator");
}

BoundCheck check_bound(const OperatorSpec &spec, const TargetFunction &f, int resolution,
                       const BoundOptions &options) {
  if (spec.kind() == OperatorKind::Univariate)
    throw ConfigError("check_bound does not support the univariate operator");
  BoundCheck out;
  out.measured = sup_error(spec, f, resolution);
  out.bound = error_bound(spec, f, resolution, options);
  out.satisfied = out.measured <= out.bound + kBoundSlack;
  return out;
}

std::vector<ErrorReport> run_sweep(const SweepConfig &config) {
  if (config.node_counts.empty())
    throw ConfigError("node_counts must not be empty");
  for (std::size_t i = 0; i < config.node_counts.size(); ++i) {
    if (config.node_counts[i] < 1)
      throw ConfigError("node counts must be positive");
    if (i > 0 && config.node_counts[i] <= config.node_counts[i - 1])
      throw ConfigError("node_counts must be strictly increasing");
  }

  const Kernel kernel = kernel_from(make_activation(config.activation_name));
  const TargetFunction target =
      config.target_expr ? target_from_expr(*config.target_expr) : make_target(config.target_name);
  const Triangle triangle(config.a);

  std::vector<ErrorReport> reports;
  for (int n : config.node_counts) {
    for (OperatorKind kind : kBivariateKinds) {
      const OperatorSpec spec(kind, n, n, kernel, triangle);
      ErrorReport r;
      r.operator_kind = kind;
      r.activation_name = config.activation_name;
      r.target_name = target.name;
      r.n1 = n;
      r.n2 = n;
      r.grid_resolution = config.grid_resolution;
      r.measured_sup_error = sup_error(spec, target, config.grid_resolution);
      if (config.with_bounds)
        r.theoretical_bound =
            error_bound(spec, target, config.grid_resolution, config.bound_options);
      reports.push_back(std::move(r));
    }
  }
  return reports;
}

double PublishedRow::value(OperatorKind kind) const {
  switch (kind) {
  case OperatorKind::SX:
    return sx;
  case OperatorKind::SY:
    return sy;
  case OperatorKind::Prod:
    return prod;
  case OperatorKind::GBS:
    return gbs;
  case OperatorKind::Univariate:
    break;
  }
  throw ConfigError("no published values for the univariate operator");
}

std::optional<std::vector<PublishedRow>> published_errors(const std::string &activation_name) {
  if (activation_name == "ramp_smooth")
    return std::vector<PublishedRow>{
        {5, 0.452497, 0.156546, 0.478877, 1.5438e-15},
        {15, 0.101601, 0.049354, 0.118881, 1.6701e-15},
        {30, 0.048032, 0.023884, 0.057413, 1.6787e-15},
        {50, 0.027995, 0.014066, 0.035111, 1.5326e-15},
        {75, 0.019564, 0.009770, 0.022506, 1.7282e-15},
        {100, 0.014114, 0.007005, 0.015961, 1.7734e-15},
    };
  if (activation_name == "piecewise_linear")
    return std::vector<PublishedRow>{
        {5, 0.440815, 0.114639, 0.440815, 1.3971e-15},
        {15, 0.054179, 0.013715, 0.061273, 1.5412e-15},
        {30, 0.054179, 0.003450, 0.015711, 1.6072e-15},
        {50, 0.004995, 0.001250, 0.005642, 1.3757e-15},
        {75, 0.002218, 0.000555, 0.002423, 1.6474e-15},
        {100, 0.001222, 0.000289, 0.001390, 1.7359e-15},
    };
  return std::nullopt;
}

std::vector<TableComparison> compare_to_published(const std::vector<ErrorReport> &reports,
                                                  double factor) {
  std::vector<TableComparison> out;
  for (const ErrorReport &r : reports) {
    if (r.operator_kind == OperatorKind::GBS || r.n1 != r.n2)
      continue;
    const auto rows = published_errors(r.activation_name);
    if (!rows)
      continue;
    const auto row = std::find_if(rows->begin(), rows->end(),
                                  [&](const PublishedRow &p) { return p.n == r.n1; });
    if (row == rows->end())
      continue;

    TableComparison c;
    c.n = r.n1;
    c.kind = r.operator_kind;
    c.measured = r.measured_sup_error;
    c.published = row->value(r.operator_kind);
    c.ratio = c.measured / c.published;
    c.within_factor = c.measured >= c.published / factor && c.measured <= c.published * factor;
    if (r.activation_name == "piecewise_linear" && r.n1 == 30 &&
        r.operator_kind == OperatorKind::SX) {
      c.excluded = true;
      c.note = "published value repeats the n=15 entry; suspected typo";
    }
    out.push_back(std::move(c));
  }
  return out;
}

} // namespace trinet
