#include "cli.hpp"

#include "format.hpp"

#include "trinet/analysis.hpp"
#include "trinet/errors.hpp"
#include "trinet/exprparse.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

namespace trinet::cli {

namespace {

class IoFailure : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string activation = "ramp";
  double a = 1.0;
  int n1 = 15;
  int n2 = 15;
  std::string target_name;
  std::string target_expr;
  int resolution = 300;
  std::string format;
  std::string out_path;

  // eval
  double x = 0.0;
  double y = 0.0;
  std::string operators = "sx,sy,prod,gbs";
  // table
  std::vector<int> nodes{5, 15, 30, 50, 75, 100};
  // surface
  std::string which = "target";
  // check
  std::optional<double> m_override;
  int boundary_samples = 501;
  int random_points = 1000;
  std::uint64_t seed = 20240501;
  int kernel_grid = 10001;
};

void emit(const RunConfig &cfg, const std::string &text, std::ostream &out) {
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out_path, std::ios::binary | std::ios::trunc);
  if (!file)
    throw IoFailure("cannot open '" + cfg.out_path + "' for writing");
  file << text;
  file.flush();
  if (!file)
    throw IoFailure("failed writing '" + cfg.out_path + "'");
}

Kernel build_kernel(const RunConfig &cfg) {
  Activation act = make_activation(cfg.activation);
  if (cfg.m_override)
    act = act.with_m(*cfg.m_override);
  return kernel_from(act);
}

TargetFunction build_target(const RunConfig &cfg, const std::string &fallback) {
  if (!cfg.target_expr.empty())
    return target_from_expr(cfg.target_expr);
  return make_target(cfg.target_name.empty() ? fallback : cfg.target_name);
}

std::vector<OperatorKind> parse_operator_list(const std::string &list) {
  std::vector<OperatorKind> kinds;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto kind = operator_kind_from_string(item);
    if (!kind || *kind == OperatorKind::Univariate)
      throw ConfigError("unknown operator '" + item + "'; valid: sx, sy, prod, gbs");
    kinds.push_back(*kind);
  }
  if (kinds.empty())
    throw ConfigError("no operators requested");
  return kinds;
}

// ---------------------------------------------------------------- eval

int cmd_eval(const RunConfig &cfg, std::ostream &out) {
  const Triangle tri(cfg.a);
  const TargetFunction target = build_target(cfg, "sin10x_cos5y");
  const std::vector<OperatorKind> kinds = parse_operator_list(cfg.operators);
  const Kernel kernel = build_kernel(cfg);
  if (!tri.contains(cfg.x, cfg.y))
    throw DomainError("point (" + format_double(cfg.x) + ", " + format_double(cfg.y) +
                      ") is outside the triangle");

  const double fx = target(cfg.x, cfg.y);
  std::vector<double> values;
  for (OperatorKind kind : kinds)
    values.push_back(evaluate(OperatorSpec(kind, cfg.n1, cfg.n2, kernel, tri), target,
                              {cfg.x, cfg.y}));

  if (cfg.format == "json") {
    JsonWriter w;
    w.begin_object()
        .field("x", cfg.x)
        .field("y", cfg.y)
        .field("activation", cfg.activation)
        .field("target_name", target.name)
        .field("a", cfg.a)
        .field("n1", cfg.n1)
        .field("n2", cfg.n2)
        .field("target", fx);
    w.key("operators").begin_array();
    for (std::size_t i = 0; i < kinds.size(); ++i)
      w.begin_object()
          .field("operator", to_string(kinds[i]))
          .field("value", values[i])
          .field("abs_error", std::abs(values[i] - fx))
          .end_object();
    w.end_array().end_object();
    emit(cfg, w.str() + "\n", out);
  } else {
    std::vector<std::string> header{"x", "y", "target"};
    std::vector<std::string> row{format_double(cfg.x), format_double(cfg.y), format_double(fx)};
    for (std::size_t i = 0; i < kinds.size(); ++i) {
      header.push_back(to_string(kinds[i]));
      header.push_back(to_string(kinds[i]) + "_abs_error");
      row.push_back(format_double(values[i]));
      row.push_back(format_double(std::abs(values[i] - fx)));
    }
    emit(cfg, join_csv(header) + join_csv(row), out);
  }
  return kSuccess;
}

// ---------------------------------------------------------------- table

int cmd_table(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
  SweepConfig sweep;
  sweep.node_counts = cfg.nodes;
  sweep.activation_name = cfg.activation;
  sweep.target_name = cfg.target_name.empty() ? "sin10x_cos5y" : cfg.target_name;
  if (!cfg.target_expr.empty())
    sweep.target_expr = cfg.target_expr;
  sweep.a = cfg.a;
  sweep.grid_resolution = cfg.resolution;
  const std::vector<ErrorReport> reports = run_sweep(sweep);

  // Published values exist only for the sin(10x) + cos(5y) target on the unit triangle.
  std::vector<TableComparison> comparison;
  if (!sweep.target_expr && sweep.target_name == "sin10x_cos5y" && cfg.a == 1.0)
    comparison = compare_to_published(reports);
  for (const TableComparison &c : comparison)
    if (c.excluded)
      err << "note: n=" << c.n << " " << to_string(c.kind) << " excluded from comparison: "
          << c.note << "\n";

  const std::size_t kinds = std::size(kBivariateKinds);
  if (cfg.format == "json") {
    JsonWriter w;
    w.begin_object()
        .field("activation", cfg.activation)
        .field("target_name", reports.front().target_name)
        .field("a", cfg.a)
        .field("resolution", cfg.resolution);
    w.key("columns").begin_array();
    for (OperatorKind kind : kBivariateKinds)
      w.value(to_string(kind));
    w.end_array();
    w.key("rows").begin_array();
    for (std::size_t i = 0; i < reports.size(); i += kinds) {
      w.begin_object().field("n", reports[i].n1);
      for (std::size_t k = 0; k < kinds; ++k)
        w.field(to_string(reports[i + k].operator_kind), reports[i + k].measured_sup_error);
      w.end_object();
    }
    w.end_array();
    if (!comparison.empty()) {
      w.key("published_comparison").begin_array();
      for (const TableComparison &c : comparison) {
        w.begin_object()
            .field("n", c.n)
            .field("operator", to_string(c.kind))
            .field("measured", c.measured)
            .field("published", c.published)
            .field("ratio", c.ratio)
            .field("within_factor_2", c.within_factor)
            .field("excluded", c.excluded);
        if (!c.note.empty())
          w.field("note", c.note);
        w.end_object();
      }
      w.end_array();
    }
    w.end_object();
    emit(cfg, w.str() + "\n", out);
  } else {
    std::string text = join_csv({"n", "sx", "sy", "prod", "gbs"});
    for (std::size_t i = 0; i < reports.size(); i += kinds) {
      std::vector<std::string> row{std::to_string(reports[i].n1)};
      for (std::size_t k = 0; k < kinds; ++k)
        row.push_back(format_double(reports[i + k].measured_sup_error));
      text += join_csv(row);
    }
    emit(cfg, text, out);
  }
  return kSuccess;
}

// ---------------------------------------------------------------- surface

int cmd_surface(const RunConfig &cfg, std::ostream &out) {
  const Triangle tri(cfg.a);
  const TargetFunction target = build_target(cfg, "gaussian_peak");
  std::optional<OperatorKind> kind;
  if (cfg.which != "target") {
    kind = operator_kind_from_string(cfg.which);
    if (!kind || *kind == OperatorKind::Univariate)
      throw ConfigError("unknown surface '" + cfg.which + "'; valid: target, sx, sy, prod, gbs");
  }
  const std::vector<Point> points = interior_grid(tri, cfg.resolution);

  std::vector<double> values;
  if (kind) {
    values = eval_on_grid(OperatorSpec(*kind, cfg.n1, cfg.n2, build_kernel(cfg), tri), target,
                          points);
  } else {
    values.reserve(points.size());
    for (const Point &p : points)
      values.push_back(target(p.x, p.y));
  }

  if (cfg.format == "json") {
    JsonWriter w;
    w.begin_object()
        .field("which", cfg.which)
        .field("activation", cfg.activation)
        .field("target_name", target.name)
        .field("a", cfg.a)
        .field("n1", cfg.n1)
        .field("n2", cfg.n2)
        .field("resolution", cfg.resolution);
    w.key("points").begin_array();
    for (std::size_t i = 0; i < points.size(); ++i)
      w.begin_array().value(points[i].x).value(points[i].y).value(values[i]).end_array();
    w.end_array().end_object();
    emit(cfg, w.str() + "\n", out);
  } else {
    std::string text = "x,y,value\n";
    for (std::size_t i = 0; i < points.size(); ++i)
      text += join_csv({format_double(points[i].x), format_double(points[i].y),
                        format_double(values[i])});
    emit(cfg, text, out);
  }
  return kSuccess;
}

// ---------------------------------------------------------------- check

struct CheckResult {
  std::string name;
  double max_violation = 0.0;
  double tolerance = 0.0;
  std::optional<double> measured;
  std::optional<double> bound;

  bool passed() const { return max_violation <= tolerance; }
};

int cmd_check(const RunConfig &cfg, std::ostream &out) {
  const Triangle tri(cfg.a);
  const Kernel kernel = build_kernel(cfg);
  const TargetFunction target = build_target(cfg, "sin10x_cos5y");
  const auto spec = [&](OperatorKind kind) {
    return OperatorSpec(kind, cfg.n1, cfg.n2, kernel, tri);
  };

  std::vector<CheckResult> checks;

  const KernelPropertyReport kp = verify_kernel_properties(kernel, cfg.kernel_grid);
  for (const PropertyCheck *p : {&kp.monotone, &kp.support, &kp.partition})
    checks.push_back({"kernel_" + p->name, p->max_violation, 1e-12, {}, {}});

  {
    const std::vector<Point> pts = random_points(tri, cfg.random_points, cfg.seed);
    const OperatorSpec sx = spec(OperatorKind::SX);
    double vx = 0.0, vy = 0.0, vp = 0.0;
    for (const Point &p : pts) {
      vx = std::max(vx, std::abs(sx_weight_sum(sx, p) - 1.0));
      vy = std::max(vy, std::abs(sy_weight_sum(sx, p) - 1.0));
      vp = std::max(vp, std::abs(prod_weight_sum(sx, p) - 1.0));
    }
    checks.push_back({"partition_of_unity_sx", vx, 1e-12, {}, {}});
    checks.push_back({"partition_of_unity_sy", vy, 1e-12, {}, {}});
    checks.push_back({"partition_of_unity_prod", vp, 1e-12, {}, {}});
  }

  const auto interpolation = [&](OperatorKind kind, Edge edge) {
    const OperatorSpec s = spec(kind);
    double worst = 0.0;
    for (const Point &p : boundary_samples(tri, edge, cfg.boundary_samples)) {
      const double f = target(p.x, p.y);
      worst = std::max(worst, std::abs(evaluate(s, target, p) - f) / (1.0 + std::abs(f)));
    }
    checks.push_back(
        {"interpolation_" + to_string(kind) + "_" + to_string(edge), worst, 1e-12, {}, {}});
  };
  interpolation(OperatorKind::SX, Edge::Gamma2);
  interpolation(OperatorKind::SX, Edge::Gamma3);
  interpolation(OperatorKind::SY, Edge::Gamma1);
  interpolation(OperatorKind::SY, Edge::Gamma3);
  interpolation(OperatorKind::Prod, Edge::Gamma3);
  interpolation(OperatorKind::GBS, Edge::Gamma1);
  interpolation(OperatorKind::GBS, Edge::Gamma2);
  interpolation(OperatorKind::GBS, Edge::Gamma3);

  const auto agreement = [&](OperatorKind other, Edge edge) {
    const OperatorSpec prod = spec(OperatorKind::Prod);
    const OperatorSpec s = spec(other);
    double worst = 0.0;
    for (const Point &p : boundary_samples(tri, edge, cfg.boundary_samples))
      worst = std::max(worst, std::abs(evaluate(prod, target, p) - evaluate(s, target, p)));
    checks.push_back(
        {"agreement_prod_" + to_string(other) + "_" + to_string(edge), worst, 1e-13, {}, {}});
  };
  agreement(OperatorKind::SX, Edge::Gamma1);
  agreement(OperatorKind::SY, Edge::Gamma2);

  for (OperatorKind kind : kBivariateKinds) {
    const BoundCheck b = check_bound(spec(kind), target, cfg.resolution);
    checks.push_back({"bound_" + to_string(kind), std::max(0.0, b.measured - b.bound), kBoundSlack,
                      b.measured, b.bound});
  }

  const bool all_passed =
      std::all_of(checks.begin(), checks.end(), [](const CheckResult &c) { return c.passed(); });

  if (cfg.format == "csv") {
    std::string text = join_csv({"check", "max_violation", "tolerance", "passed"});
    for (const CheckResult &c : checks)
      text += join_csv({c.name, format_double(c.max_violation), format_double(c.tolerance),
                        c.passed() ? "true" : "false"});
    emit(cfg, text, out);
  } else {
    JsonWriter w;
    w.begin_object()
        .field("activation", cfg.activation)
        .field("m", kernel.m())
        .field("target_name", target.name)
        .field("a", cfg.a)
        .field("n1", cfg.n1)
        .field("n2", cfg.n2)
        .field("passed", all_passed);
    w.key("checks").begin_array();
    for (const CheckResult &c : checks) {
      w.begin_object()
          .field("name", c.name)
          .field("max_violation", c.max_violation)
          .field("tolerance", c.tolerance)
          .field("passed", c.passed());
      if (c.measured)
        w.field("measured", *c.measured);
      if (c.bound)
        w.field("bound", *c.bound);
      w.end_object();
    }
    w.end_array().end_object();
    emit(cfg, w.str() + "\n", out);
  }
  return all_passed ? kSuccess : kPropertyFailure;
}

// ---------------------------------------------------------------- wiring

void add_common(CLI::App &sub, RunConfig &cfg, const std::string &default_format) {
  cfg.format = default_format;
  sub.add_option("--activation", cfg.activation, "ramp_smooth | ramp | piecewise_linear")
      ->capture_default_str();
  sub.add_option("--a", cfg.a, "leg length of the triangle")->capture_default_str();
  sub.add_option("--n1", cfg.n1, "cells along x")->capture_default_str();
  sub.add_option("--n2", cfg.n2, "cells along y")->capture_default_str();
  auto *name = sub.add_option("--target-name", cfg.target_name, "gaussian_peak | sin10x_cos5y");
  auto *expr = sub.add_option("--target-expr", cfg.target_expr, "expression in x and y");
  name->excludes(expr);
  expr->excludes(name);
  sub.add_option("--resolution", cfg.resolution, "sampling grid cells per leg")
      ->capture_default_str();
  sub.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sub.add_option("--out", cfg.out_path, "output file (default: stdout)");
}

void validate(const RunConfig &cfg) {
  if (!(cfg.a > 0.0) || !std::isfinite(cfg.a))
    throw ConfigError("--a must be positive");
  if (cfg.n1 < 1 || cfg.n2 < 1)
    throw ConfigError("--n1 and --n2 must be at least 1");
  if (cfg.resolution < 1)
    throw ConfigError("--resolution must be at least 1");
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Boundary-interpolating neural network operators on a triangle", "trinet"};
  app.require_subcommand(1);

  RunConfig eval_cfg, table_cfg, surface_cfg, check_cfg;

  auto *eval = app.add_subcommand("eval", "evaluate operators at one point");
  add_common(*eval, eval_cfg, "json");
  eval->add_option("--x", eval_cfg.x)->required();
  eval->add_option("--y", eval_cfg.y)->required();
  eval->add_option("--operators", eval_cfg.operators, "comma-separated subset of sx,sy,prod,gbs")
      ->capture_default_str();

  auto *table = app.add_subcommand("table", "sup-norm error table over node counts");
  add_common(*table, table_cfg, "csv");
  table->add_option("--nodes", table_cfg.nodes, "node counts, n1 = n2")
      ->delimiter(',')
      ->capture_default_str();

  auto *surface = app.add_subcommand("surface", "export a surface on the triangle grid");
  add_common(*surface, surface_cfg, "csv");
  surface->add_option("--which", surface_cfg.which, "target | sx | sy | prod | gbs")
      ->capture_default_str();

  auto *check = app.add_subcommand("check", "verify kernel, interpolation and bound properties");
  add_common(*check, check_cfg, "json");
  check->add_option("--m-override", check_cfg.m_override,
                    "declare a different saturation width (negative control)");
  check->add_option("--samples", check_cfg.boundary_samples, "samples per boundary edge")
      ->capture_default_str();
  check->add_option("--random-points", check_cfg.random_points)->capture_default_str();
  check->add_option("--seed", check_cfg.seed)->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return kConfigError;
  }

  try {
    if (eval->parsed()) {
      validate(eval_cfg);
      return cmd_eval(eval_cfg, out);
    }
    if (table->parsed()) {
      validate(table_cfg);
      return cmd_table(table_cfg, out, err);
    }
    if (surface->parsed()) {
      validate(surface_cfg);
      return cmd_surface(surface_cfg, out);
    }
    validate(check_cfg);
    if (check_cfg.boundary_samples < 2 || check_cfg.random_points < 0)
      throw ConfigError("--samples must be at least 2 and --random-points nonnegative");
    return cmd_check(check_cfg, out);
  } catch (const ConfigError &e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const ParseError &e) {
    err << "error: target expression: " << e.what() << "\n";
    return kConfigError;
  } catch (const DomainError &e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const EvalError &e) {
    err << "error: target evaluation: " << e.what() << "\n";
    return kDomainError;
  } catch (const IoFailure &e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  }
}

} // namespace trinet::cli
