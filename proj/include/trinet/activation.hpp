#pragma once

#include <functional>
#include <string>
#include <vector>

namespace trinet {

/// A sigmoidal function of the class A(m): nondecreasing, identically 0 on
/// (-inf, -m] and identically 1 on [m, inf).
///
/// Construction does not validate the class conditions; the registry does.
/// Building an Activation with a wrong `m` is how the negative controls in
/// the property checks are produced.
class Activation {
public:
  using Function = std::function<double(double)>;

  Activation(std::string name, double m, Function fn);

  const std::string &name() const { return name_; }
  double m() const { return m_; }
  double operator()(double x) const { return fn_(x); }

  /// Same function, different declared saturation width.
  Activation with_m(double m) const;

private:
  std::string name_;
  double m_;
  Function fn_;
};

/// Psi(x) = xi(x + m) - xi(x - m), supported on [-2m, 2m].
class Kernel {
public:
  explicit Kernel(Activation activation) : activation_(std::move(activation)) {}

  const Activation &activation() const { return activation_; }
  double m() const { return activation_.m(); }
  double support_radius() const { return 2.0 * activation_.m(); }

  double operator()(double x) const {
    const double m = activation_.m();
    return activation_(x + m) - activation_(x - m);
  }

private:
  Activation activation_;
};

inline Kernel kernel_from(const Activation &activation) { return Kernel(activation); }

// Built-in activations.
double ramp_smooth(double x);      // quintic ramp, m = 1/2
double ramp(double x);             // linear ramp, m = 1/2
double piecewise_linear(double x); // linear ramp on [-1, 1], m = 1

/// Looks up a registered activation. Throws ConfigError listing the valid
/// names when `name` is unknown.
Activation make_activation(const std::string &name);

/// Adds an activation to the process-wide registry after checking the
/// saturation conditions at +-m and +-(m + 1). Throws ConfigError when the
/// checks fail or the name is taken.
void register_activation(const Activation &activation);

std::vector<std::string> activation_names();

struct PropertyCheck {
  std::string name;
  double max_violation = 0.0;
  bool passed = true;
};

struct KernelPropertyReport {
  PropertyCheck monotone;       // P2
  PropertyCheck support;        // P3
  PropertyCheck partition;      // P4
  bool all_passed() const { return monotone.passed && support.passed && partition.passed; }
};

/// Samples the kernel on uniform grids and reports the largest violation of
/// the unimodality (P2), compact-support (P3) and two-term partition (P4)
/// properties. Violations are returned, never thrown.
KernelPropertyReport verify_kernel_properties(const Kernel &kernel, int grid_size,
                                              double tolerance = 1e-12);

} // namespace trinet
