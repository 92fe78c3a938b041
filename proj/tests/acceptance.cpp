// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "cli.hpp"
#include "oracles.hpp"
#include "trinet/activation.hpp"
#include "trinet/analysis.hpp"
#include "trinet/errors.hpp"
#include "trinet/exprparse.hpp"
#include "trinet/geometry.hpp"
#include "trinet/moduli.hpp"
#include "trinet/operators.hpp"
#include "trinet/targets.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace trinet;

namespace {

const std::vector<std::string> kActivations{"ramp_smooth", "ramp", "piecewise_linear"};

struct Outcome {
  bool passed = true;
  std::string detail;
};

struct Criterion {
  std::string id;
  std::string title;
  double time_limit; // seconds, 0 = none
  std::function<Outcome()> body;
};

void fail(Outcome &o, const std::string &what) {
  o.passed = false;
  if (o.detail.size() < 300)
    o.detail += (o.detail.empty() ? "" : "; ") + what;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

OperatorSpec spec_for(OperatorKind kind, int n1, int n2, const std::string &act, double a = 1.0) {
  return OperatorSpec(kind, n1, n2, kernel_from(make_activation(act)), Triangle(a));
}

Outcome kernel_properties() {
  Outcome o;
  for (const auto &name : kActivations) {
    const auto report = verify_kernel_properties(kernel_from(make_activation(name)), 10001, 1e-12);
    for (const auto *c : {&report.monotone, &report.support, &report.partition})
      if (!c->passed || c->max_violation > 1e-12)
        fail(o, name + " " + c->name + " " + num(c->max_violation));
  }
  return o;
}

Outcome partition_of_unity() {
  Outcome o;
  double worst = 0.0;
  const auto points = random_points(Triangle(1.0), 1000, 7);
  for (const auto &name : kActivations)
    for (int n1 : {5, 100})
      for (int n2 : {5, 100}) {
        const auto spec = spec_for(OperatorKind::Prod, n1, n2, name);
        for (const Point &p : points) {
          worst = std::max({worst, std::abs(sx_weight_sum(spec, p) - 1.0),
                            std::abs(sy_weight_sum(spec, p) - 1.0),
                            std::abs(prod_weight_sum(spec, p) - 1.0)});
        }
      }
  if (worst > 1e-12)
    fail(o, "max violation " + num(worst));
  o.detail = o.detail.empty() ? "max violation " + num(worst) : o.detail;
  return o;
}

Outcome boundary_interpolation() {
  Outcome o;
  const TargetFunction f = make_target("sin10x_cos5y");
  const Triangle tri(1.0);
  struct Case {
    OperatorKind kind;
    std::vector<Edge> edges;
  };
  const std::vector<Case> cases{{OperatorKind::SX, {Edge::Gamma2, Edge::Gamma3}},
                                {OperatorKind::SY, {Edge::Gamma1, Edge::Gamma3}},
                                {OperatorKind::Prod, {Edge::Gamma3}},
                                {OperatorKind::GBS, {Edge::Gamma1, Edge::Gamma2, Edge::Gamma3}}};
  double worst = 0.0;
  for (const auto &name : kActivations)
    for (int n : {5, 15, 30, 50, 75, 100})
      for (const auto &c : cases) {
        const auto spec = spec_for(c.kind, n, n, name);
        for (Edge e : c.edges)
          for (const Point &p : boundary_samples(tri, e, 501)) {
            const double gap = std::abs(evaluate(spec, f, p) - f(p.x, p.y));
            worst = std::max(worst, gap);
            if (gap > 1e-12)
              fail(o, name + " " + to_string(c.kind) + " on " + to_string(e) + " " + num(gap));
          }
      }
  if (o.passed)
    o.detail = "max gap " + num(worst);
  return o;
}

Outcome agreement() {
  Outcome o;
  const TargetFunction f = make_target("sin10x_cos5y");
  const Triangle tri(1.0);
  double worst = 0.0;
  for (const auto &name : kActivations)
    for (int n : {5, 15, 30, 50, 75, 100}) {
      const auto spec = spec_for(OperatorKind::Prod, n, n + 3, name);
      for (const Point &p : boundary_samples(tri, Edge::Gamma1, 501))
        worst = std::max(worst, std::abs(eval_prod(spec, f, p.x, p.y) - eval_sx(spec, f, p.x, p.y)));
      for (const Point &p : boundary_samples(tri, Edge::Gamma2, 501))
        worst = std::max(worst, std::abs(eval_prod(spec, f, p.x, p.y) - eval_sy(spec, f, p.x, p.y)));
    }
  if (worst > 1e-13)
    fail(o, "max gap " + num(worst));
  else
    o.detail = "max gap " + num(worst);
  return o;
}

Outcome gbs_separable() {
  Outcome o;
  std::vector<TargetFunction> targets{make_target("sin10x_cos5y"),
                                      target_from_expr("exp(x) - 3*y^2"),
                                      target_from_expr("abs(x - 0.4) + sqrt(y + 1)")};
  double worst = 0.0;
  for (const auto &name : kActivations) {
    const auto start = std::chrono::steady_clock::now();
    for (const auto &f : targets)
      for (int n : {5, 15, 30, 50, 75, 100}) {
        const double e = sup_error(spec_for(OperatorKind::GBS, n, n, name), f, 300);
        worst = std::max(worst, e);
        if (e > 1e-12)
          fail(o, name + " " + f.name + " n=" + std::to_string(n) + " " + num(e));
      }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= 30.0)
      fail(o, name + " took " + num(secs) + " s");
  }
  if (o.passed)
    o.detail = "max error " + num(worst);
  return o;
}

Outcome table_reproduction() {
  Outcome o;
  int compared = 0;
  for (const std::string name : {"piecewise_linear", "ramp_smooth"}) {
    SweepConfig config;
    config.node_counts = {50, 75, 100};
    config.activation_name = name;
    const auto comparisons = compare_to_published(run_sweep(config), 2.0);
    for (const auto &c : comparisons) {
      if (c.excluded)
        continue;
      ++compared;
      if (!c.within_factor)
        fail(o, name + " " + to_string(c.kind) + " n=" + std::to_string(c.n) + " ratio " +
                    num(c.ratio));
    }
  }
  if (compared != 18)
    fail(o, "compared " + std::to_string(compared) + " entries, expected 18");
  if (o.passed)
    o.detail = std::to_string(compared) + " entries within factor 2";
  return o;
}

Outcome error_bounds() {
  Outcome o;
  int checked = 0;
  for (const auto &target : target_names()) {
    const TargetFunction f = make_target(target);
    for (const auto &name : kActivations)
      for (int n : {5, 15, 30})
        for (OperatorKind kind : kBivariateKinds) {
          const BoundCheck b = check_bound(spec_for(kind, n, n, name), f, 300);
          ++checked;
          if (!b.satisfied)
            fail(o, target + " " + name + " " + to_string(kind) + " n=" + std::to_string(n) +
                        " measured " + num(b.measured) + " > bound " + num(b.bound));
        }
  }
  if (o.passed)
    o.detail = std::to_string(checked) + " bounds satisfied";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  const TargetFunction f = make_target("sin10x_cos5y");
  const TargetFunction g = make_target("gaussian_peak");
  std::mt19937_64 gen(99);
  std::uniform_int_distribution<int> pick(1, 8);
  double worst = 0.0;
  for (const auto &name : kActivations) {
    const Kernel psi = kernel_from(make_activation(name));
    for (double a : {1.0, 0.7}) {
      const auto points = random_points(Triangle(a), 200, gen());
      for (const Point &p : points) {
        const int n1 = pick(gen);
        const int n2 = pick(gen);
        const OperatorSpec spec(OperatorKind::GBS, n1, n2, psi, Triangle(a));
        for (const TargetFunction *t : {&f, &g}) {
          worst = std::max({worst,
                            std::abs(eval_sx(spec, *t, p.x, p.y) - oracle::sx(psi, a, n1, *t, p.x, p.y)),
                            std::abs(eval_sy(spec, *t, p.x, p.y) - oracle::sy(psi, a, n2, *t, p.x, p.y)),
                            std::abs(eval_prod(spec, *t, p.x, p.y) -
                                     oracle::prod(psi, a, n1, n2, *t, p.x, p.y)),
                            std::abs(eval_gbs(spec, *t, p.x, p.y) -
                                     oracle::gbs(psi, a, n1, n2, *t, p.x, p.y))});
        }
      }
    }
  }
  if (worst > 1e-13)
    fail(o, "max gap " + num(worst));
  else
    o.detail = "max gap " + num(worst);
  return o;
}

Outcome moduli_suite() {
  Outcome o;
  const Triangle tri(1.0);
  const TargetFunction constant{"c", [](double, double) { return 2.5; }};
  const double c1 = omega_univariate([](double) { return -4.0; }, {0.0, 1.0}, 0.3).value;
  const double c2 = omega_bivariate(constant, tri, 0.2, 0.1, {100, 8}).value;
  const double c3 = omega_mixed(constant, tri, 0.2, 0.1, {100, 8}).value;
  if (c1 != 0.0 || c2 != 0.0 || c3 != 0.0)
    fail(o, "constant moduli " + num(c1) + " " + num(c2) + " " + num(c3));

  for (double delta : {0.25, 0.125, 0.5}) {
    const double w = omega_univariate([](double x) { return x; }, {0.0, 1.0}, delta, {64, 16}).value;
    if (std::abs(w - delta) > 1e-15)
      fail(o, "identity modulus at " + num(delta) + " gave " + num(w));
  }

  for (const char *expr : {"sin(10*x) + cos(5*y)", "exp(x) - y^3", "x^2 + abs(y - 0.5)"}) {
    const double w = omega_mixed(target_from_expr(expr), tri, 0.1, 0.2, {100, 8}).value;
    if (w > 1e-12)
      fail(o, std::string("mixed modulus of ") + expr + " " + num(w));
  }

  const TargetFunction product{"xy", [](double x, double y) { return x * y; }};
  const double xy = omega_mixed(product, tri, 0.1, 0.1, {100, 8}).value;
  if (std::abs(xy - 0.01) > 1e-6)
    fail(o, "mixed modulus of xy " + num(xy));
  if (o.passed)
    o.detail = "mixed(xy) = " + num(xy);
  return o;
}

Outcome parser_suite() {
  Outcome o;
  const double v1 = parse("sin(10*x) + cos(5*y)")(0.0, 0.0);
  const double v2 = parse("-(1/7)*exp(-(81/16)*((x-0.2)^2+(y-0.3)^2))")(0.2, 0.3);
  const double g = make_target("gaussian_peak")(0.2, 0.3);
  if (std::abs(v1 - 1.0) > 1e-15)
    fail(o, "first expression gave " + num(v1));
  if (std::abs(g - (-1.0 / 7.0)) > 1e-15)
    fail(o, "gaussian_peak gave " + num(g));
  if (std::abs(v2 - g) > 1e-15)
    fail(o, "parsed peak differs from built-in: " + num(v2 - g));

  struct Bad {
    const char *text;
    std::size_t position;
  };
  for (const Bad &b : {Bad{"x+", 2}, Bad{"", 0}, Bad{"(x", 2}, Bad{"x)", 1}, Bad{"2 $ 3", 2},
                       Bad{"sin x", 4}, Bad{"x + foo(2)", 4}, Bad{"1e999", 0}}) {
    try {
      parse(b.text);
      fail(o, std::string("accepted '") + b.text + "'");
    } catch (const ParseError &e) {
      if (e.position() != b.position)
        fail(o, std::string("'") + b.text + "' position " + std::to_string(e.position()));
    }
  }

  std::mt19937_64 gen(5);
  const std::string alphabet = "xy0123456789.+-*/^()e sincoexpqrtab,$";
  std::uniform_int_distribution<std::size_t> ch(0, alphabet.size() - 1), len(0, 40);
  int parsed = 0;
  for (int i = 0; i < 5000; ++i) {
    std::string s;
    for (std::size_t k = len(gen); k > 0; --k)
      s += alphabet[ch(gen)];
    try {
      const Expr e = parse(s);
      ++parsed;
      (void)e(0.3, 0.4);
    } catch (const ParseError &) {
    } catch (const EvalError &) {
    }
  }
  try {
    parse(std::string(5000, '(') + "x" + std::string(5000, ')'));
    fail(o, "deep nesting accepted");
  } catch (const ParseError &) {
  }
  if (o.passed)
    o.detail = "fuzz: " + std::to_string(parsed) + "/5000 parsed, rest rejected cleanly";
  return o;
}

std::string slurp(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome cli_determinism() {
  Outcome o;
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path();
  const fs::path first = dir / "trinet_acceptance_a.csv";
  const fs::path second = dir / "trinet_acceptance_b.csv";
  std::ostringstream sink;
  for (const auto &path : {first, second}) {
    const int code = cli::run({"table", "--activation", "ramp_smooth", "--nodes", "5,15,30",
                               "--resolution", "200", "--out", path.string()},
                              sink, sink);
    if (code != 0)
      fail(o, "table exited " + std::to_string(code));
  }
  const std::string a = slurp(first);
  if (a.empty() || a != slurp(second))
    fail(o, "table output differs between runs");
  fs::remove(first);
  fs::remove(second);

  std::ostringstream out, err;
  const int code = cli::run({"check"}, out, err);
  if (code != 0)
    fail(o, "check exited " + std::to_string(code));
  if (o.passed)
    o.detail = "identical " + std::to_string(a.size()) + "-byte tables, check exit 0";
  return o;
}

} // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "kernel properties", 1.0, kernel_properties},
      {"AC2", "partition of unity", 1.0, partition_of_unity},
      {"AC3", "boundary interpolation", 5.0, boundary_interpolation},
      {"AC4", "agreement on the legs", 0.0, agreement},
      {"AC5", "GBS separable exactness", 0.0, gbs_separable},
      {"AC6", "table reproduction", 0.0, table_reproduction},
      {"AC7", "error bounds", 60.0, error_bounds},
      {"AC8", "oracle equivalence", 0.0, oracle_equivalence},
      {"AC9", "moduli oracle suite", 0.0, moduli_suite},
      {"AC10", "parser suite", 0.0, parser_suite},
      {"AC11", "CLI determinism", 0.0, cli_determinism},
  };

  int failures = 0;
  for (const auto &c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      o = c.body();
    } catch (const std::exception &e) {
      fail(o, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit > 0.0 && secs >= c.time_limit)
      fail(o, "took " + num(secs) + " s, limit " + num(c.time_limit) + " s");
    if (!o.passed)
      ++failures;
    std::printf("%s %s: %s (%.2f s) %s\n", o.passed ? "PASS" : "FAIL", c.id.c_str(),
                c.title.c_str(), secs, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
