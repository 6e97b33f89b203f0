#pragma once

// Oracles and identity suites. Every suite returns a VerificationReport; a
// report passes when every case is within its tolerance and every named
// check holds.

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "zmeasure/kernel.hpp"
#include "zmeasure/params.hpp"
#include "zmeasure/partition.hpp"

namespace zmeasure {

enum class Metric { Absolute, Relative };

std::string to_string(Metric m);

struct VerificationCase {
  std::string input;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;
  double tolerance = 0.0;
  Metric metric = Metric::Relative;
  bool pass = false;
};

struct VerificationCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerificationReport {
  std::string suite;
  std::vector<VerificationCase> cases;
  std::vector<VerificationCheck> checks;
  double runtime_seconds = 0.0;

  explicit VerificationReport(std::string name = {}) : suite(std::move(name)) {}

  const VerificationCase& add_case(std::string input, double lhs, double rhs, double tolerance, Metric metric);
  // Records the entry of largest |a - b| as a single absolute-error case.
  const VerificationCase& add_matrix_case(const std::string& input, const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                                          double tolerance);
  void add_check(std::string name, bool pass, std::string detail = {});
  // Appends the cases and checks of another report, prefixing their inputs.
  void absorb(const VerificationReport& other);

  bool pass() const;
  // Largest error in each case's own metric, divided by its tolerance.
  double worst_ratio() const;
};

// ---------------------------------------------------------------------------
// Brute-force correlation functions

struct OracleValue {
  double value = 0.0;
  double tail_bound = 0.0;  // certified bound on the omitted mass
};

// Mixed-measure weights of every diagram with |lambda| <= n_max. Throws
// ResourceError when the negative binomial tail past n_max exceeds
// tail_tol or the enumeration exceeds the cap.
class CorrelationOracle {
 public:
  CorrelationOracle(const GrandParams& gp, int n_max, double tail_tol, bool parallel = true);

  // rho(X) = sum over lambda whose configuration contains X.
  OracleValue operator()(const Configuration& x) const;

  double tail_bound() const { return tail_; }
  std::size_t size() const { return configs_.size(); }
  const std::vector<double>& weights() const { return weights_; }

 private:
  std::vector<Configuration> configs_;
  std::vector<double> weights_;
  double tail_ = 0.0;
};

OracleValue correlation_oracle(const Configuration& x, const GrandParams& gp, int n_max, double tail_tol);

// det K_X.
double correlation_det(const Configuration& x, const HypergeometricKernel& kernel);
double correlation_det(const Configuration& x, const GrandParams& gp);

// All subsets of {+-1/2, ..., +-(m - 1/2)} with at most max_size points.
std::vector<Configuration> small_configurations(int per_side, int max_size);

// ---------------------------------------------------------------------------
// Suites

VerificationReport normalization_suite();
VerificationReport oracle_suite(const std::vector<GrandParams>& params, int n_max = 26, double tail_tol = 1e-15);
// det(1 + L) on a truncation versus (1 - xi)^{-t}, in both forms.
VerificationReport fredholm_check(const GrandParams& gp, int trunc);
// K entrywise versus L(1 + L)^{-1}, the block relations through C and D,
// and the matrix relations for N = Psi_+^{1/2} C Psi_-^{1/2}.
VerificationReport operator_check(const GrandParams& gp, int trunc);
// Both decompositions of the Stieltjes-series decomposition, the product identity
// summing to 1, and the R-hat / S-hat relations, at each u.
VerificationReport identity_suite(const GrandParams& gp, const std::vector<double>& u_grid);
VerificationReport meixner_suite(int n_points, double alpha, double xi, int size);
// (1 - xi)^{-1} K(floor(u / (1 - xi)), floor(v / (1 - xi))) versus the
// Whittaker kernel for all four blocks; errors must decrease strictly along
// xi_list and end below final_tol.
VerificationReport scaling_limit_check(const ZParams& zp, double u, double v, const std::vector<double>& xi_list,
                                       double final_tol = 5e-2);
// F(a, b; u; 1 - u/x) versus x^{(a+b-1)/2} e^{x/2} W_{(1-a-b)/2, (a-b)/2}(x).
VerificationReport limit_relation_check(double a, double b, double u, const std::vector<double>& xs,
                                        double tol = 1e-2);
// psi_{+-}(k)^{1/2} versus its Gamma-function limit at k = floor(x / (1 - xi)).
VerificationReport prefactor_check(const ZParams& zp, double x, double xi, double tol = 2e-2);
VerificationReport montecarlo_suite(const GrandParams& gp, std::size_t count, std::uint64_t seed);

struct SuiteConfig {
  ZParams zp{0.5, 1.0 / 3.0};
  double xi = 0.2;
  int trunc = 60;
  int n_max = 26;
  std::uint64_t seed = 42;
  std::size_t draws = 100'000;
};

std::vector<std::string> suite_names();
// One of suite_names() or "all".
VerificationReport run_suite(const std::string& name, const SuiteConfig& config);

}  // namespace zmeasure
