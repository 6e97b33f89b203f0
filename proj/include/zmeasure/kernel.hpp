#pragma once

// The hypergeometric kernel on the half-integer lattice and the objects it is
// built from: the weights psi_{+-}, the functions R, S, P, Q, the L-operator,
// and the Stieltjes-type series R-hat, S-hat.
//
// Index convention: the positive point k + 1/2 is row/column k of the "+"
// blocks and the negative point -(k + 1/2) is index k of the "-" blocks.

#include <array>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "zmeasure/params.hpp"
#include "zmeasure/partition.hpp"

namespace zmeasure {

enum class Block { PP, PM, MP, MM };

std::string to_string(Block b);
Block parse_block(const std::string& text);  // "++", "+-", "-+", "--"
constexpr Sign row_sign(Block b) { return (b == Block::PP || b == Block::PM) ? Sign::Plus : Sign::Minus; }
constexpr Sign col_sign(Block b) { return (b == Block::PP || b == Block::MP) ? Sign::Plus : Sign::Minus; }
Block block_of(Sign row, Sign col);

struct RS {
  double r = 0.0;
  double s = 0.0;
};

struct PQ {
  double p = 0.0;
  double q = 0.0;
};

// psi_{+-}(k), computed in log space. Zero past the first vanishing factor in
// Meixner mode.
double psi(Sign sign, int k, const GrandParams& gp);
// Meromorphic continuation of psi to real u (through complex log-gamma).
double psi_at(Sign sign, double u, const GrandParams& gp);
// Smallest k past the maximum of psi with psi(k) < rel * max psi.
int psi_decay_index(Sign sign, const GrandParams& gp, double rel = 1e-16);

// F(-+z, -+z'; u + 1; w) and F(1 -+ z, 1 -+ z'; u + 2; w), w = xi / (xi - 1).
double hyp_first(Sign sign, double u, const GrandParams& gp);
double hyp_second(Sign sign, double u, const GrandParams& gp);

RS rs(Sign sign, int k, const GrandParams& gp);
RS rs_at(Sign sign, double u, const GrandParams& gp);
PQ pq(Sign sign, int k, const GrandParams& gp);

double l_entry(HalfInteger x, HalfInteger y, const GrandParams& gp);

// Off-diagonal block formulas from P, Q values at the two indices.
double block_formula(Block b, int k, int l, const PQ& at_k, const PQ& at_l);

struct FunctionTable {
  int size = 0;
  std::array<int, 2> decay_index{};
  std::array<std::vector<double>, 2> psi;
  std::array<std::vector<double>, 2> R;
  std::array<std::vector<double>, 2> S;
  std::array<std::vector<double>, 2> P;
  std::array<std::vector<double>, 2> Q;

  static constexpr std::size_t slot(Sign s) { return s == Sign::Plus ? 0 : 1; }
};

FunctionTable build_function_table(const GrandParams& gp, int min_size);
FunctionTable build_function_table_serial(const GrandParams& gp, int min_size);

struct KernelBlock {
  Block block = Block::PP;
  int trunc = 0;
  Eigen::MatrixXd entries;

  bool symmetric(double tol) const;
};

class HypergeometricKernel {
 public:
  explicit HypergeometricKernel(GrandParams gp, int min_table = 0);

  const GrandParams& params() const { return gp_; }
  const FunctionTable& table() const { return table_; }
  int table_size() const { return table_.size; }

  double psi(Sign sign, int k) const;
  RS rs(Sign sign, int k) const;
  PQ pq(Sign sign, int k) const;

  // K(x, y) for half-integers x, y.
  double operator()(HalfInteger x, HalfInteger y) const;
  double entry(Block b, int k, int l) const;

  // Diagonal of the ++ / -- blocks through K_{++} = C D, K_{--} = D C with
  // the sum over the intermediate index truncated at the table size.
  double diagonal_series(Sign sign, int k) const;
  // Same diagonal through the derivative of the block formula (derivatives
  // of the Gauss functions in their lower parameter).
  double diagonal_derivative(Sign sign, int k) const;

  KernelBlock block(Block b, int trunc) const;
  KernelBlock block_serial(Block b, int trunc) const;

  // (R-hat, S-hat)(u) = sum_k (R, S)(k) / (u + k + 1).
  RS rhat_shat(Sign sign, double u) const;

 private:
  void require_block(Block b) const;

  GrandParams gp_;
  FunctionTable table_;
};

double hyper_kernel(HalfInteger x, HalfInteger y, const GrandParams& gp);
RS rhat_shat(Sign sign, double u, const GrandParams& gp);

// Dense truncations on Z'_+ (+) Z'_- with N points per half: rows/columns
// 0..N-1 are the "+" indices, N..2N-1 the "-" indices.
Eigen::MatrixXd l_matrix(const GrandParams& gp, int trunc);
Eigen::MatrixXd k_matrix(const HypergeometricKernel& kernel, int trunc);
// D(k, l) = psi_-(k)^{1/2} psi_+(l)^{1/2} / (k + l + 1).
Eigen::MatrixXd d_matrix(const HypergeometricKernel& kernel, int trunc);

}  // namespace zmeasure
