#include "zmeasure/meixner.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "zmeasure/errors.hpp"
#include "zmeasure/specfun.hpp"

namespace zmeasure {

namespace {

void check_args(int n_points, double alpha, double xi) {
  if (n_points < 1) throw DomainError("Meixner kernel: N must be positive");
  if (!(alpha > -1.0)) throw DomainError("Meixner kernel: alpha must exceed -1");
  if (!(xi > 0.0 && xi < 1.0)) throw DomainError("Meixner kernel: xi must lie in (0, 1)");
}

double log_rising(double a, int k) {
  double s = 0.0;
  for (int j = 0; j < k; ++j) s += std::log(a + j);
  return s;
}

struct SumParts {
  double value;
  double scale;  // same sum with absolute values
};

SumParts kernel_sum(int n_points, double alpha, double xi, int k, int l) {
  double acc = 0.0;
  double mag = 0.0;
  for (int n = 0; n < n_points; ++n) {
    const double term = specfun::meixner_polynomial(n, k, alpha, xi) * specfun::meixner_polynomial(n, l, alpha, xi) /
                        meixner_norm(n, alpha, xi);
    acc += term;
    mag += std::abs(term);
  }
  const double root = std::sqrt(meixner_weight(k, alpha, xi) * meixner_weight(l, alpha, xi));
  return {root * acc, root * mag};
}

template <bool Parallel>
Eigen::MatrixXd assemble(int n_points, double alpha, double xi, int size) {
  check_args(n_points, alpha, xi);
  Eigen::MatrixXd m(size, size);
#pragma omp parallel for schedule(dynamic, 4) if (Parallel)
  for (int k = 0; k < size; ++k) {
    for (int l = 0; l < size; ++l) m(k, l) = meixner_kernel_sum(n_points, alpha, xi, k, l);
  }
  return m;
}

}  // namespace

double meixner_weight(int k, double alpha, double xi) {
  return std::exp(log_rising(alpha + 1.0, k) + k * std::log(xi) - std::lgamma(k + 1.0));
}

double meixner_norm(int n, double alpha, double xi) {
  return std::exp(std::lgamma(n + 1.0) - n * std::log(xi) - (alpha + 1.0) * std::log1p(-xi) -
                  log_rising(alpha + 1.0, n));
}

double meixner_leading(int n, double alpha, double xi) {
  const double mag = std::exp(n * std::log((1.0 - xi) / xi) - log_rising(alpha + 1.0, n));
  return n % 2 == 0 ? mag : -mag;
}

double meixner_kernel_sum(int n_points, double alpha, double xi, int k, int l) {
  check_args(n_points, alpha, xi);
  return kernel_sum(n_points, alpha, xi, k, l).value;
}

double meixner_kernel_cd(int n_points, double alpha, double xi, int k, int l) {
  check_args(n_points, alpha, xi);
  if (k == l) throw DomainError("meixner_kernel_cd: needs k != l");
  const int n = n_points;
  const double coef = meixner_leading(n - 1, alpha, xi) / (meixner_leading(n, alpha, xi) * meixner_norm(n - 1, alpha, xi));
  const double mk1 = specfun::meixner_polynomial(n, k, alpha, xi);
  const double mk0 = specfun::meixner_polynomial(n - 1, k, alpha, xi);
  const double ml1 = specfun::meixner_polynomial(n, l, alpha, xi);
  const double ml0 = specfun::meixner_polynomial(n - 1, l, alpha, xi);
  const double root = std::sqrt(meixner_weight(k, alpha, xi) * meixner_weight(l, alpha, xi));
  return root * coef * (mk1 * ml0 - mk0 * ml1) / static_cast<double>(k - l);
}

double meixner_kernel(int n_points, double alpha, double xi, int k, int l) {
  check_args(n_points, alpha, xi);
  const auto sum = kernel_sum(n_points, alpha, xi, k, l);
  if (k != l) {
    const double cd = meixner_kernel_cd(n_points, alpha, xi, k, l);
    if (std::abs(cd - sum.value) > 1e-10 * std::max(std::abs(sum.value), sum.scale)) {
      throw PrecisionError("Meixner kernel: sum and Christoffel-Darboux forms disagree at (" + std::to_string(k) + ", " +
                           std::to_string(l) + ")");
    }
  }
  return sum.value;
}

Eigen::MatrixXd meixner_matrix(int n_points, double alpha, double xi, int size) {
  return assemble<true>(n_points, alpha, xi, size);
}

Eigen::MatrixXd meixner_matrix_serial(int n_points, double alpha, double xi, int size) {
  return assemble<false>(n_points, alpha, xi, size);
}

}  // namespace zmeasure
