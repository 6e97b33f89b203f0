// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "zmeasure/measure.hpp"
#include "zmeasure/verify.hpp"

using namespace zmeasure;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

Outcome from_report(const VerificationReport& rep) {
  std::string detail = "worst err/tol " + num(rep.worst_ratio());
  for (const auto& c : rep.cases) {
    if (!c.pass) {
      detail += "; failed: " + c.input;
      break;
    }
  }
  for (const auto& c : rep.checks) {
    if (!c.pass) {
      detail += "; failed check: " + c.name + " " + c.detail;
      break;
    }
  }
  return {rep.pass(), detail};
}

Outcome both(const Outcome& a, const Outcome& b) { return {a.pass && b.pass, a.detail + " | " + b.detail}; }

const ZParams kReal{0.5, 1.0 / 3.0};
const ZParams kNegative{-0.4, -0.7};
const ZParams kComplex{Complex(0.5, 1.5), Complex(0.5, -1.5)};

Outcome normalization() {
  double worst = 0.0;
  for (const auto* zp : {&kReal, &kNegative, &kComplex}) {
    for (int n = 1; n <= 18; ++n) worst = std::max(worst, std::abs(total_mass(n, *zp) - 1.0));
  }
  return {worst <= 1e-11, "max |sum - 1| = " + num(worst) + " over n = 1..18, three parameter sets"};
}

Outcome spot_values() {
  const double a = z_measure_n(YoungDiagram({2}), kReal);
  const double b = z_measure_n(YoungDiagram({1, 1}), kReal);
  const double ea = std::abs(a - 6.0 / 7.0);
  const double eb = std::abs(b - 1.0 / 7.0);
  return {ea <= 1e-14 && eb <= 1e-14, "errors " + num(ea) + ", " + num(eb)};
}

Outcome fredholm() {
  return both(from_report(fredholm_check(GrandParams(kReal, 0.3), 60)),
              from_report(fredholm_check(GrandParams(kComplex, 0.5), 80)));
}

Outcome oracle() {
  return from_report(oracle_suite({GrandParams(kReal, 0.2), GrandParams(kNegative, 0.2), GrandParams(kComplex, 0.2)},
                                  26, 1e-15));
}

Outcome operator_identity() { return from_report(operator_check(GrandParams(kReal, 0.3), 80)); }

Outcome identities() {
  const std::vector<double> grid{-0.3, 0.4, 1.3, 2.3, 3.7};
  return both(from_report(identity_suite(GrandParams(kReal, 0.2), grid)),
              from_report(identity_suite(GrandParams(kComplex, 0.2), grid)));
}

Outcome meixner() { return from_report(meixner_suite(3, 0.5, 0.4, 100)); }

Outcome scaling() { return from_report(scaling_limit_check(kReal, 1.0, 2.0, {0.9, 0.99, 0.999}, 5e-2)); }

Outcome limit_relation() { return from_report(limit_relation_check(-0.5, -1.0 / 3.0, 2000.0, {0.5, 1.5, 5.0}, 1e-2)); }

Outcome montecarlo() { return from_report(montecarlo_suite(GrandParams(kReal, 0.5), 100'000, 42)); }

Outcome plancherel() {
  auto gap = [](double z) {
    const ZParams zp{z, z};
    double worst = 0.0;
    for (const auto& lam : enumerate_partitions(6)) {
      worst = std::max(worst, std::abs(z_measure_n(lam, zp) - plancherel_measure(lam)));
    }
    return worst;
  };
  const double g1 = gap(100.5);
  const double g2 = gap(1000.5);
  return {g1 <= 0.05 && g2 < g1, "gap at 100.5 = " + num(g1) + ", at 1000.5 = " + num(g2)};
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
  double budget_seconds;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "normalization", normalization, 10.0},
      {2, "closed-form spot values", spot_values, 1.0},
      {3, "fredholm determinant", fredholm, 2.0},
      {4, "kernel vs brute-force correlations", oracle, 60.0},
      {5, "operator identities", operator_identity, 30.0},
      {6, "stieltjes-series identities", identities, 30.0},
      {7, "meixner degeneration", meixner, 30.0},
      {8, "whittaker scaling limit", scaling, 10.0},
      {9, "gauss-to-whittaker limit relation", limit_relation, 30.0},
      {10, "monte carlo correlations", montecarlo, 60.0},
      {11, "plancherel limit", plancherel, 5.0},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o{false, ""};
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_seconds) {
      o.pass = false;
      o.detail += "; runtime budget exceeded";
    }
    all = all && o.pass;
    std::printf("%s criterion %d (%s): %s [%.2fs]\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
