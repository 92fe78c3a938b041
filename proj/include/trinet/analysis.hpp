#pragma once

#include "trinet/moduli.hpp"
#include "trinet/operators.hpp"

#include <optional>
#include <string>
#include <vector>

namespace trinet {

/// max over interior_grid(resolution) of |operator(F) - F|.
double sup_error(const OperatorSpec &spec, const TargetFunction &f, int resolution);

/// How the moduli on the right-hand side of the error bounds are sampled.
/// moduli_resolution = 0 means "same lattice as the error grid", so every
/// point at which the error is measured is also a base point of the search.
struct BoundOptions {
  int moduli_resolution = 0;
  int offset_steps_1d = 64;
  int offset_steps_2d = 8;
};

struct BoundCheck {
  double measured = 0.0;
  double bound = 0.0;
  bool satisfied = true;
};

inline constexpr double kBoundSlack = 1e-10;

/// Theoretical right-hand side for SX, SY, PROD, GBS:
///   SX   max over rows y of omega(F(., y), (a - y)/n1) on [0, a - y]
///   SY   max over columns x of omega(F(x, .), (a - x)/n2) on [0, a - x]
///   PROD omega(F, a/n1, a/n2)
///   GBS  omega_mixed(F, a/n1, a/n2)
/// Throws ConfigError for the univariate kind.
double error_bound(const OperatorSpec &spec, const TargetFunction &f, int resolution,
                   const BoundOptions &options = {});

/// measured = sup_error, bound = error_bound, satisfied = measured <= bound + 1e-10.
BoundCheck check_bound(const OperatorSpec &spec, const TargetFunction &f, int resolution,
                       const BoundOptions &options = {});

struct ErrorReport {
  OperatorKind operator_kind = OperatorKind::SX;
  std::string activation_name;
  std::string target_name;
  int n1 = 0;
  int n2 = 0;
  double measured_sup_error = 0.0;
  std::optional<double> theoretical_bound;
  int grid_resolution = 0;
};

struct SweepConfig {
  std::vector<int> node_counts{5, 15, 30, 50, 75, 100}; // n1 = n2 = n
  std::string activation_name = "ramp";
  std::string target_name = "sin10x_cos5y";
  std::optional<std::string> target_expr; // overrides target_name when set
  double a = 1.0;
  int grid_resolution = 300;
  bool with_bounds = false;
  BoundOptions bound_options;
};

/// One report per (n, operator), ordered by n then SX, SY, PROD, GBS.
/// Throws ConfigError for an empty or non-increasing node list.
std::vector<ErrorReport> run_sweep(const SweepConfig &config);

/// A row of the published error tables for the sin(10x) + cos(5y) target.
struct PublishedRow {
  int n = 0;
  double sx = 0.0;
  double sy = 0.0;
  double prod = 0.0;
  double gbs = 0.0;

  double value(OperatorKind kind) const;
};

/// Published rows for "ramp_smooth" and "piecewise_linear"; nullopt for
/// activations without a published table.
std::optional<std::vector<PublishedRow>> published_errors(const std::string &activation_name);

struct TableComparison {
  int n = 0;
  OperatorKind kind = OperatorKind::SX;
  double measured = 0.0;
  double published = 0.0;
  double ratio = 0.0; // measured / published
  bool within_factor = false;
  bool excluded = false;
  std::string note;
};

/// Matches SX, SY, PROD reports against the published rows (GBS entries are
/// rounding noise and are not compared digit-wise). An entry passes when
/// published / factor <= measured <= published * factor. The piecewise_linear
/// SX entry at n = 30 repeats the n = 15 value and is marked excluded.
std::vector<TableComparison> compare_to_published(const std::vector<ErrorReport> &reports,
                                                  double factor = 2.0);

} // namespace trinet
