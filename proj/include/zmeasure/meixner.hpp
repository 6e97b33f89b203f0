#pragma once

// Meixner orthogonal polynomials on Z_+ with weight (alpha+1)_k xi^k / k!,
// their norms, and the Christoffel-Darboux kernel M_N.

#include <Eigen/Dense>

namespace zmeasure {

double meixner_weight(int k, double alpha, double xi);
// h_n = n! / (xi^n (1 - xi)^(alpha+1) (alpha+1)_n)
double meixner_norm(int n, double alpha, double xi);
// Leading coefficient of M_n in k: ((xi - 1) / xi)^n / (alpha+1)_n (sign
// alternates with n).
double meixner_leading(int n, double alpha, double xi);

// sqrt(f(k) f(l)) sum_{n<N} M_n(k) M_n(l) / h_n
double meixner_kernel_sum(int n_points, double alpha, double xi, int k, int l);
// Two-term Christoffel-Darboux form; k != l.
double meixner_kernel_cd(int n_points, double alpha, double xi, int k, int l);
// Sum form, cross-checked against the Christoffel-Darboux form off the
// diagonal (PrecisionError past 1e-10 relative to the term scale).
double meixner_kernel(int n_points, double alpha, double xi, int k, int l);

// [M_N(k, l)] for 0 <= k, l < size.
Eigen::MatrixXd meixner_matrix(int n_points, double alpha, double xi, int size);
Eigen::MatrixXd meixner_matrix_serial(int n_points, double alpha, double xi, int size);

}  // namespace zmeasure
