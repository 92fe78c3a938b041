#include "trinet/errors.hpp"
#include "trinet/moduli.hpp"

#include <doctest.h>

#include <cmath>

using namespace trinet;

namespace {

// Exhaustive search over pairs of lattice points of interior_grid(R):
// a different candidate set from the offset-grid search, which coincides
// with it when delta / offset_steps is the lattice spacing.
template <typename Diff>
double lattice_pairs(const Triangle &tri, int R, int reach1, int reach2, Diff diff) {
  const double s = tri.a() / R;
  double best = 0.0;
  for (int i = 0; i <= R; ++i)
    for (int j = 0; i + j <= R; ++j)
      for (int di = -reach1; di <= reach1; ++di)
        for (int dj = -reach2; dj <= reach2; ++dj) {
          const int i2 = i + di, j2 = j + dj;
          if (i2 < 0 || j2 < 0 || i2 + j2 > R)
            continue;
          best = std::max(best, diff(i * s, j * s, i2 * s, j2 * s));
        }
  return best;
}

} // namespace

TEST_CASE("univariate modulus") {
  const auto constant = [](double) { return 3.0; };
  CHECK(omega_univariate(constant, {0.0, 1.0}, 0.3).value == 0.0);

  const auto identity = [](double x) { return x; };
  const ModulusEstimate id = omega_univariate(identity, {0.0, 1.0}, 0.25);
  CHECK(std::abs(id.value - 0.25) <= 1e-15);
  CHECK(id.delta1 == 0.25);
  CHECK(id.sample_resolution == 2000);

  // sup |sin u - sin v| with |u - v| <= 2 on [0, 10] is 2 sin 1.
  const auto wave = [](double x) { return std::sin(10.0 * x); };
  const double est = omega_univariate(wave, {0.0, 1.0}, 0.2).value;
  CHECK(est <= 2.0 * std::sin(1.0) + 1e-15);
  CHECK(est >= 2.0 * std::sin(1.0) - 1e-4);
  CHECK(est <= std::min(2.0, 10.0 * 0.2));

  CHECK(omega_univariate(wave, {0.0, 1.0}, 0.0).value == 0.0);
  CHECK_THROWS_AS(omega_univariate(wave, {0.0, 1.0}, -0.1), ConfigError);
  CHECK_THROWS_AS(omega_univariate(wave, {1.0, 1.0}, 0.1), ConfigError);
}

TEST_CASE("univariate modulus refines monotonically") {
  const auto wave = [](double x) { return std::sin(10.0 * x) + std::cos(3.0 * x * x); };
  for (double delta : {0.01, 0.05, 0.1, 0.3}) {
    const double coarse = omega_univariate(wave, {0.0, 1.0}, delta, {500, 32}).value;
    const double fine_points = omega_univariate(wave, {0.0, 1.0}, delta, {1000, 32}).value;
    const double fine_offsets = omega_univariate(wave, {0.0, 1.0}, delta, {500, 64}).value;
    const double wider = omega_univariate(wave, {0.0, 1.0}, 2.0 * delta, {500, 64}).value;
    CHECK(coarse <= fine_points + 1e-12);
    CHECK(coarse <= fine_offsets + 1e-12);
    CHECK(coarse <= wider + 1e-12);
  }
}

TEST_CASE("univariate modulus is subadditive on target rows") {
  // Offsets of the 2-delta search are lattice multiples, so halves land on
  // points of the delta search.
  for (const char *name : {"sin10x_cos5y", "gaussian_peak"}) {
    const TargetFunction f = make_target(name);
    for (double y : {0.0, 0.3}) {
      const auto row = [&](double x) { return f(x, y); };
      const double one = omega_univariate(row, {0.0, 1.0}, 0.1, {1280, 64}).value;
      const double two = omega_univariate(row, {0.0, 1.0}, 0.2, {1280, 64}).value;
      CHECK(two <= 2.0 * one + 1e-10);
    }
  }
}

TEST_CASE("bivariate modulus") {
  const Triangle unit(1.0);
  const TargetFunction constant{"c", [](double, double) { return -2.0; }};
  CHECK(omega_bivariate(constant, unit, 0.2, 0.1, {60, 8}).value == 0.0);

  const TargetFunction plane{"x+y", [](double x, double y) { return x + y; }};
  CHECK(std::abs(omega_bivariate(plane, unit, 0.1, 0.1, {100, 8}).value - 0.2) <= 1e-15);

  const TargetFunction f = make_target("sin10x_cos5y");
  const double search = omega_bivariate(f, unit, 1.0 / 15, 1.0 / 15, {60, 4}).value;
  const double pairs = lattice_pairs(unit, 60, 4, 4, [&](double x, double y, double x2, double y2) {
    return std::abs(f(x2, y2) - f(x, y));
  });
  CHECK(std::abs(search - pairs) <= 1e-12);
  CHECK(search <= 10.0 / 15 + 5.0 / 15);

  const double finer = omega_bivariate(f, unit, 1.0 / 15, 1.0 / 15, {400, 8}).value;
  CHECK(finer >= search - 1e-12);
  CHECK(finer <= 10.0 / 15 + 5.0 / 15);
}

TEST_CASE("mixed modulus") {
  const Triangle unit(1.0);
  const TargetFunction product{"xy", [](double x, double y) { return x * y; }};
  const ModulusEstimate xy = omega_mixed(product, unit, 0.1, 0.1, {100, 8});
  CHECK(std::abs(xy.value - 0.01) <= 1e-6);
  CHECK(xy.delta2 == 0.1);

  const TargetFunction constant{"c", [](double, double) { return 4.0; }};
  CHECK(omega_mixed(constant, unit, 0.3, 0.3, {50, 8}).value == 0.0);

  for (const TargetFunction &sep :
       {make_target("sin10x_cos5y"),
        TargetFunction{"sep", [](double x, double y) { return std::exp(x) + y * y * y; }}})
    CHECK(omega_mixed(sep, unit, 0.2, 0.1, {120, 8}).value <= 1e-12);

  const TargetFunction peak = make_target("gaussian_peak");
  const double search = omega_mixed(peak, unit, 0.1, 0.05, {60, 6}).value;
  const double pairs = lattice_pairs(unit, 60, 6, 3, [&](double x, double y, double x2, double y2) {
    if (x2 + y > 1.0 + 1e-12 || x + y2 > 1.0 + 1e-12)
      return 0.0; // rectangle leaves the triangle
    return std::abs(peak(x2, y) + peak(x, y2) - peak(x2, y2) - peak(x, y));
  });
  CHECK(std::abs(search - pairs) <= 1e-12);
  CHECK(search > 0.0);
}

TEST_CASE("2-D estimates are monotone under nested refinement") {
  const Triangle unit(1.0);
  const TargetFunction peak = make_target("gaussian_peak");
  const double base = omega_mixed(peak, unit, 0.1, 0.1, {50, 4}).value;
  CHECK(base <= omega_mixed(peak, unit, 0.1, 0.1, {100, 4}).value + 1e-12);
  CHECK(base <= omega_mixed(peak, unit, 0.1, 0.1, {50, 8}).value + 1e-12);
  CHECK(base <= omega_mixed(peak, unit, 0.2, 0.2, {50, 8}).value + 1e-12);

  const double b0 = omega_bivariate(peak, unit, 0.1, 0.05, {50, 4}).value;
  CHECK(b0 <= omega_bivariate(peak, unit, 0.1, 0.05, {100, 4}).value + 1e-12);
  CHECK(b0 <= omega_bivariate(peak, unit, 0.2, 0.1, {50, 8}).value + 1e-12);
}
