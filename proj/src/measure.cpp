#include "zmeasure/measure.hpp"

#include <cmath>
#include <limits>

#include "zmeasure/errors.hpp"
#include "zmeasure/parallel.hpp"

namespace zmeasure {

namespace {

// log[(1 + sz)_k (1 + sz')_k / (k!)^2] with sign s = +-1. Each factor
// (j + 1 + sz)(j + 1 + sz') = (j + 1)^2 + s (z + z')(j + 1) + z z' is real.
double log_arm_weight(int k, double sign, const ZParams& zp) {
  double acc = 0.0;
  for (int j = 1; j <= k; ++j) {
    const double arg = sign * zp.sum() / j + zp.t() / (static_cast<double>(j) * j);
    if (!(arg > -1.0)) throw AdmissibilityError("non-positive Pochhammer factor in z-measure");
    acc += std::log1p(arg);
  }
  return acc;
}

double log_rising(double t, int n) {
  if (n <= 1000) {
    double acc = 0.0;
    for (int j = 0; j < n; ++j) acc += std::log(t + j);
    return acc;
  }
  return std::lgamma(t + n) - std::lgamma(t);
}

double log_factorial(int n) { return std::lgamma(n + 1.0); }

// Common diagram-dependent part: d log t + sum_i arm/leg weights + log det^2.
double log_diagram_core(const YoungDiagram& lambda, const ZParams& zp) {
  if (zp.meixner_mode()) throw AdmissibilityError("z-measure requires admissible (non-Meixner) parameters");
  const auto& fc = lambda.frobenius();
  double acc = lambda.diagonal() * std::log(zp.t());
  for (std::size_t i = 0; i < fc.p.size(); ++i) {
    acc += log_arm_weight(fc.p[i], 1.0, zp) + log_arm_weight(fc.q[i], -1.0, zp);
  }
  return acc + 2.0 * log_cauchy_determinant(fc);
}

}  // namespace

double log_z_measure_n(const YoungDiagram& lambda, const ZParams& zp) {
  const int n = lambda.size();
  if (n == 0) return 0.0;
  return log_factorial(n) - log_rising(zp.t(), n) + log_diagram_core(lambda, zp);
}

double z_measure_n(const YoungDiagram& lambda, const ZParams& zp) { return std::exp(log_z_measure_n(lambda, zp)); }

double log_neg_binomial_weight(int n, double t, double xi) {
  if (n < 0) throw DomainError("negative binomial weight needs n >= 0");
  if (!(t > 0.0)) throw DomainError("negative binomial weight needs t > 0");
  if (!(xi > 0.0 && xi < 1.0)) throw DomainError("negative binomial weight needs 0 < xi < 1");
  return t * std::log1p(-xi) + log_rising(t, n) - log_factorial(n) + n * std::log(xi);
}

double neg_binomial_weight(int n, double t, double xi) { return std::exp(log_neg_binomial_weight(n, t, xi)); }

double neg_binomial_tail_bound(int n_max, double t, double xi) {
  const int first = n_max + 1;
  const double head = neg_binomial_weight(first, t, xi);
  // pi(n+1)/pi(n) = xi (t + n) / (n + 1) is monotone in n with limit xi.
  const double ratio = std::max(xi * (t + first) / (first + 1.0), xi);
  if (ratio >= 1.0) return std::numeric_limits<double>::infinity();
  return head / (1.0 - ratio);
}

double mixed_measure_factored(const YoungDiagram& lambda, const GrandParams& gp) {
  return std::exp(log_z_measure_n(lambda, gp.zp()) + log_neg_binomial_weight(lambda.size(), gp.t(), gp.xi()));
}

double mixed_measure_direct(const YoungDiagram& lambda, const GrandParams& gp) {
  const double log_value =
      gp.t() * std::log1p(-gp.xi()) + lambda.size() * std::log(gp.xi()) + log_diagram_core(lambda, gp.zp());
  return std::exp(log_value);
}

double mixed_measure(const YoungDiagram& lambda, const GrandParams& gp) {
  const double a = mixed_measure_factored(lambda, gp);
  const double b = mixed_measure_direct(lambda, gp);
  if (std::abs(a - b) > 1e-10 * std::abs(b)) {
    throw PrecisionError("mixed measure routes disagree beyond 1e-10");
  }
  return b;
}

double plancherel_measure(const YoungDiagram& lambda) {
  const int n = lambda.size();
  if (n == 0) return 1.0;
  return std::exp(2.0 * log_dimension_ratio(lambda.frobenius()) + log_factorial(n));
}

std::vector<double> z_measures(const std::vector<YoungDiagram>& diagrams, const ZParams& zp) {
  return parallel::map_indexed<double>(diagrams.size(), [&](std::size_t i) { return z_measure_n(diagrams[i], zp); });
}

std::vector<double> z_measures_serial(const std::vector<YoungDiagram>& diagrams, const ZParams& zp) {
  return parallel::map_indexed_serial<double>(diagrams.size(),
                                              [&](std::size_t i) { return z_measure_n(diagrams[i], zp); });
}

double total_mass(int n, const ZParams& zp) { return parallel::stable_sum(z_measures(enumerate_partitions(n), zp)); }

double total_mass_serial(int n, const ZParams& zp) {
  return parallel::stable_sum(z_measures_serial(enumerate_partitions(n), zp));
}

}  // namespace zmeasure
