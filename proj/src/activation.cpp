#include "trinet/activation.hpp"

#include "trinet/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace trinet {

Activation::Activation(std::string name, double m, Function fn)
    : name_(std::move(name)), m_(m), fn_(std::move(fn)) {}

Activation Activation::with_m(double m) const { return Activation(name_, m, fn_); }

double ramp_smooth(double x) {
  if (x <= -0.5)
    return 0.0;
  if (x >= 0.5)
    return 1.0;
  const double t = x + 0.5;
  // 10t^3 - 15t^4 + 6t^5 in Horner form
  return t * t * t * (10.0 + t * (-15.0 + 6.0 * t));
}

double ramp(double x) {
  if (x <= -0.5)
    return 0.0;
  if (x >= 0.5)
    return 1.0;
  return x + 0.5;
}

double piecewise_linear(double x) {
  if (x <= -1.0)
    return 0.0;
  if (x >= 1.0)
    return 1.0;
  return 0.5 * x + 0.5;
}

namespace {

constexpr double kSaturationTolerance = 1e-12;

struct Registry {
  std::mutex mutex;
  std::map<std::string, Activation> entries;

  Registry() {
    entries.emplace("ramp_smooth", Activation("ramp_smooth", 0.5, ramp_smooth));
    entries.emplace("ramp", Activation("ramp", 0.5, ramp));
    entries.emplace("piecewise_linear", Activation("piecewise_linear", 1.0, piecewise_linear));
  }
};

Registry &registry() {
  static Registry instance;
  return instance;
}

std::string joined_names(const std::map<std::string, Activation> &entries) {
  std::string out;
  for (const auto &[name, _] : entries) {
    if (!out.empty())
      out += ", ";
    out += name;
  }
  return out;
}

} // namespace

Activation make_activation(const std::string &name) {
  auto &reg = registry();
  std::lock_guard lock(reg.mutex);
  auto it = reg.entries.find(name);
  if (it == reg.entries.end())
    throw ConfigError("unknown activation '" + name + "'; valid names: " + joined_names(reg.entries));
  return it->second;
}

void register_activation(const Activation &activation) {
  const double m = activation.m();
  if (!(m > 0.0) || !std::isfinite(m))
    throw ConfigError("activation '" + activation.name() + "': m must be positive and finite");

  for (double x : {m, m + 1.0}) {
    if (std::abs(activation(x) - 1.0) > kSaturationTolerance)
      throw ConfigError("activation '" + activation.name() + "' does not saturate to 1 at x = " +
                        std::to_string(x));
    if (std::abs(activation(-x)) > kSaturationTolerance)
      throw ConfigError("activation '" + activation.name() + "' does not vanish at x = " +
                        std::to_string(-x));
  }

  auto &reg = registry();
  std::lock_guard lock(reg.mutex);
  if (!reg.entries.emplace(activation.name(), activation).second)
    throw ConfigError("activation '" + activation.name() + "' is already registered");
}

std::vector<std::string> activation_names() {
  auto &reg = registry();
  std::lock_guard lock(reg.mutex);
  std::vector<std::string> names;
  for (const auto &[name, _] : reg.entries)
    names.push_back(name);
  return names;
}

KernelPropertyReport verify_kernel_properties(const Kernel &kernel, int grid_size,
                                              double tolerance) {
  if (grid_size < 2)
    throw ConfigError("grid_size must be at least 2");

  const double r = kernel.support_radius();
  const auto sample = [grid_size](double lo, double hi, int i) {
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(grid_size - 1);
  };

  KernelPropertyReport report;
  report.monotone.name = "P2_unimodal";
  report.support.name = "P3_support";
  report.partition.name = "P4_partition";

  // P2: nondecreasing on [-1.5r, 0], nonincreasing on [0, 1.5r].
  double prev_left = kernel(-1.5 * r);
  double prev_right = kernel(0.0);
  for (int i = 1; i < grid_size; ++i) {
    const double left = kernel(sample(-1.5 * r, 0.0, i));
    const double right = kernel(sample(0.0, 1.5 * r, i));
    report.monotone.max_violation =
        std::max({report.monotone.max_violation, prev_left - left, right - prev_right});
    prev_left = left;
    prev_right = right;
  }

  // P3: zero for |x| >= r, sampled out to 2r on both sides.
  for (int i = 0; i < grid_size; ++i) {
    const double x = sample(r, 2.0 * r, i);
    report.support.max_violation =
        std::max({report.support.max_violation, std::abs(kernel(x)), std::abs(kernel(-x))});
  }

  // P4: Psi(x) + Psi(x - r) = 1 on [0, r].
  for (int i = 0; i < grid_size; ++i) {
    const double x = sample(0.0, r, i);
    report.partition.max_violation =
        std::max(report.partition.max_violation, std::abs(kernel(x) + kernel(x - r) - 1.0));
  }

  for (PropertyCheck *check : {&report.monotone, &report.support, &report.partition})
    check->passed = check->max_violation <= tolerance;
  return report;
}

} // namespace trinet
