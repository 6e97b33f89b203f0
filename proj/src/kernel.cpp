#include "zmeasure/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zmeasure/errors.hpp"
#include "zmeasure/parallel.hpp"
#include "zmeasure/specfun.hpp"

namespace zmeasure {

namespace {

constexpr int kMaxTable = 200'000;

double sgn(Sign s) { return s == Sign::Plus ? 1.0 : -1.0; }

// (j + s z)(j + s z') / j^2, real for admissible and Meixner parameters.
double psi_factor(Sign sign, int j, const ZParams& zp) {
  const double s = sgn(sign);
  const Complex f = (static_cast<double>(j) + s * zp.z()) * (static_cast<double>(j) + s * zp.zp());
  return realize(f) / (static_cast<double>(j) * j);
}

double log_psi_zero(Sign sign, const GrandParams& gp) {
  return 0.5 * std::log(gp.t()) + 0.5 * std::log(gp.xi()) + sgn(sign) * gp.zp().sum() * std::log1p(-gp.xi());
}

// sqrt(t xi) / (1 - xi), the constant in front of S.
double s_const(const GrandParams& gp) { return std::sqrt(gp.t() * gp.xi()) / (1.0 - gp.xi()); }

// psi(0..count-1) by the ratio recurrence, accumulated in log space.
std::vector<double> psi_sequence(Sign sign, int count, const GrandParams& gp) {
  std::vector<double> out(static_cast<std::size_t>(count), 0.0);
  double log_psi = log_psi_zero(sign, gp);
  const double log_xi = std::log(gp.xi());
  for (int k = 0; k < count; ++k) {
    if (k > 0) {
      const double f = psi_factor(sign, k, gp.zp());
      if (f == 0.0) break;  // Meixner mode: psi vanishes from here on
      if (f < 0.0) throw AdmissibilityError("psi: negative Pochhammer ratio; parameters are not admissible");
      log_psi += log_xi + std::log(f);
    }
    out[static_cast<std::size_t>(k)] = std::exp(log_psi);
  }
  return out;
}

Complex upper(Sign sign, const ZParams& zp, double shift, bool primed) {
  return shift - sgn(sign) * (primed ? zp.zp() : zp.z());
}

specfun::SeriesResult hyp_first_full(Sign sign, double u, const GrandParams& gp, bool with_dc) {
  const auto& zp = gp.zp();
  return specfun::gauss_2f1_w_full(upper(sign, zp, 0.0, false), upper(sign, zp, 0.0, true), u + 1.0, gp.xi(),
                                   with_dc);
}

specfun::SeriesResult hyp_second_full(Sign sign, double u, const GrandParams& gp, bool with_dc) {
  const auto& zp = gp.zp();
  return specfun::gauss_2f1_w_full(upper(sign, zp, 1.0, false), upper(sign, zp, 1.0, true), u + 2.0, gp.xi(),
                                   with_dc);
}

}  // namespace

// ---------------------------------------------------------------------------

std::string to_string(Block b) {
  switch (b) {
    case Block::PP: return "++";
    case Block::PM: return "+-";
    case Block::MP: return "-+";
    case Block::MM: return "--";
  }
  return "?";
}

Block parse_block(const std::string& text) {
  if (text == "++") return Block::PP;
  if (text == "+-") return Block::PM;
  if (text == "-+") return Block::MP;
  if (text == "--") return Block::MM;
  throw DomainError("unknown kernel block '" + text + "' (expected ++, +-, -+ or --)");
}

Block block_of(Sign row, Sign col) {
  if (row == Sign::Plus) return col == Sign::Plus ? Block::PP : Block::PM;
  return col == Sign::Plus ? Block::MP : Block::MM;
}

double psi(Sign sign, int k, const GrandParams& gp) {
  if (k < 0) throw DomainError("psi: index must be nonnegative");
  return psi_sequence(sign, k + 1, gp).back();
}

double psi_at(Sign sign, double u, const GrandParams& gp) {
  const auto& zp = gp.zp();
  const double s = sgn(sign);
  if (is_nonpositive_integer(Complex(u + 1.0))) return 0.0;  // 1 / Gamma(u + 1)^2 vanishes
  using specfun::log_gamma;
  const Complex log_ratio = log_gamma(u + 1.0 + s * zp.z()) + log_gamma(u + 1.0 + s * zp.zp()) -
                            log_gamma(1.0 + s * zp.z()) - log_gamma(1.0 + s * zp.zp()) - 2.0 * log_gamma(u + 1.0);
  const double scale = std::sqrt(gp.t()) * std::pow(gp.xi(), u + 0.5) * std::pow(1.0 - gp.xi(), s * zp.sum());
  return scale * realize(std::exp(log_ratio));
}

int psi_decay_index(Sign sign, const GrandParams& gp, double rel) {
  double log_psi = log_psi_zero(sign, gp);
  double log_max = log_psi;
  const double log_rel = std::log(rel);
  const double log_xi = std::log(gp.xi());
  for (int k = 1; k <= kMaxTable; ++k) {
    const double f = psi_factor(sign, k, gp.zp());
    if (f <= 0.0) return k;
    log_psi += log_xi + std::log(f);
    log_max = std::max(log_max, log_psi);
    const double next_ratio = gp.xi() * psi_factor(sign, k + 1, gp.zp());
    if (log_psi < log_max + log_rel && next_ratio < 1.0) return k;
  }
  throw ResourceError("psi does not decay within " + std::to_string(kMaxTable) + " terms");
}

double hyp_first(Sign sign, double u, const GrandParams& gp) {
  return realize(hyp_first_full(sign, u, gp, false).value);
}

double hyp_second(Sign sign, double u, const GrandParams& gp) {
  return realize(hyp_second_full(sign, u, gp, false).value);
}

RS rs(Sign sign, int k, const GrandParams& gp) {
  const double w = psi(sign, k, gp);
  return {w * hyp_first(sign, k, gp), s_const(gp) * w * hyp_second(sign, k, gp) / (k + 1.0)};
}

RS rs_at(Sign sign, double u, const GrandParams& gp) {
  const double w = psi_at(sign, u, gp);
  return {w * hyp_first(sign, u, gp), s_const(gp) * w * hyp_second(sign, u, gp) / (u + 1.0)};
}

PQ pq(Sign sign, int k, const GrandParams& gp) {
  const double root = std::sqrt(psi(sign, k, gp));
  return {root * hyp_first(sign, k, gp), s_const(gp) * root * hyp_second(sign, k, gp) / (k + 1.0)};
}

double l_entry(HalfInteger x, HalfInteger y, const GrandParams& gp) {
  if (x.sign() == y.sign()) return 0.0;
  const int k = x.index();
  const int l = y.index();
  const double value = std::sqrt(psi(x.sign(), k, gp) * psi(y.sign(), l, gp)) / (k + l + 1.0);
  return x.sign() == Sign::Plus ? value : -value;
}

double block_formula(Block b, int k, int l, const PQ& a, const PQ& c) {
  switch (b) {
    case Block::PP:
    case Block::MM:
      if (k == l) throw DomainError("block_formula: diagonal entries need the limit route");
      return (a.p * c.q - a.q * c.p) / static_cast<double>(k - l);
    case Block::PM:
      return (a.p * c.p + a.q * c.q) / (k + l + 1.0);
    case Block::MP:
      return -(a.p * c.p + a.q * c.q) / (k + l + 1.0);
  }
  return 0.0;
}

// ---------------------------------------------------------------------------
// Function table

namespace {

template <bool Parallel>
FunctionTable build_table(const GrandParams& gp, int min_size) {
  FunctionTable tab;
  for (Sign s : {Sign::Plus, Sign::Minus}) tab.decay_index[FunctionTable::slot(s)] = psi_decay_index(s, gp);
  tab.size = std::max({min_size, tab.decay_index[0] + 1, tab.decay_index[1] + 1});
  const double cs = s_const(gp);
  for (Sign s : {Sign::Plus, Sign::Minus}) {
    const auto i = FunctionTable::slot(s);
    tab.psi[i] = psi_sequence(s, tab.size, gp);
    auto eval = [&](std::size_t k) {
      const double kk = static_cast<double>(k);
      return std::pair<double, double>{hyp_first(s, kk, gp), hyp_second(s, kk, gp) / (kk + 1.0)};
    };
    const auto hyp = Parallel ? parallel::map_indexed<std::pair<double, double>>(tab.psi[i].size(), eval)
                              : parallel::map_indexed_serial<std::pair<double, double>>(tab.psi[i].size(), eval);
    tab.R[i].resize(hyp.size());
    tab.S[i].resize(hyp.size());
    tab.P[i].resize(hyp.size());
    tab.Q[i].resize(hyp.size());
    for (std::size_t k = 0; k < hyp.size(); ++k) {
      const double w = tab.psi[i][k];
      const double root = std::sqrt(w);
      tab.R[i][k] = w * hyp[k].first;
      tab.S[i][k] = cs * w * hyp[k].second;
      tab.P[i][k] = root * hyp[k].first;
      tab.Q[i][k] = cs * root * hyp[k].second;
    }
  }
  return tab;
}

}  // namespace

FunctionTable build_function_table(const GrandParams& gp, int min_size) { return build_table<true>(gp, min_size); }

FunctionTable build_function_table_serial(const GrandParams& gp, int min_size) {
  return build_table<false>(gp, min_size);
}

bool KernelBlock::symmetric(double tol) const {
  const double scale = std::max(1.0, entries.cwiseAbs().maxCoeff());
  return (entries - entries.transpose()).cwiseAbs().maxCoeff() <= tol * scale;
}

// ---------------------------------------------------------------------------
// HypergeometricKernel

HypergeometricKernel::HypergeometricKernel(GrandParams gp, int min_table)
    : gp_(std::move(gp)), table_(build_function_table(gp_, min_table)) {}

double HypergeometricKernel::psi(Sign sign, int k) const {
  const auto i = FunctionTable::slot(sign);
  if (k < table_.size) return table_.psi[i][static_cast<std::size_t>(k)];
  return zmeasure::psi(sign, k, gp_);
}

RS HypergeometricKernel::rs(Sign sign, int k) const {
  const auto i = FunctionTable::slot(sign);
  if (k < table_.size) return {table_.R[i][static_cast<std::size_t>(k)], table_.S[i][static_cast<std::size_t>(k)]};
  return zmeasure::rs(sign, k, gp_);
}

PQ HypergeometricKernel::pq(Sign sign, int k) const {
  const auto i = FunctionTable::slot(sign);
  if (k < table_.size) return {table_.P[i][static_cast<std::size_t>(k)], table_.Q[i][static_cast<std::size_t>(k)]};
  return zmeasure::pq(sign, k, gp_);
}

void HypergeometricKernel::require_block(Block b) const {
  if (gp_.zp().meixner_mode() && b != Block::PP) {
    throw DomainError("Meixner-mode kernels expose only the ++ block");
  }
}

double HypergeometricKernel::operator()(HalfInteger x, HalfInteger y) const {
  return entry(block_of(x.sign(), y.sign()), x.index(), y.index());
}

double HypergeometricKernel::entry(Block b, int k, int l) const {
  require_block(b);
  if (k < 0 || l < 0) throw DomainError("kernel indices must be nonnegative");
  if (k == l && (b == Block::PP || b == Block::MM)) return diagonal_series(row_sign(b), k);
  return block_formula(b, k, l, pq(row_sign(b), k), pq(col_sign(b), l));
}

double HypergeometricKernel::diagonal_series(Sign sign, int k) const {
  // K_{++}(k,k) = sum_j (R+(k) R-(j) + S+(k) S-(j)) / (k+j+1)^2, and the
  // mirror image for K_{--}; summed from the small tail upwards.
  const Sign other = sign == Sign::Plus ? Sign::Minus : Sign::Plus;
  const RS here = rs(sign, k);
  const auto o = FunctionTable::slot(other);
  double acc = 0.0;
  for (int j = table_.size - 1; j >= 0; --j) {
    const double den = static_cast<double>(k + j + 1);
    acc += (here.r * table_.R[o][static_cast<std::size_t>(j)] + here.s * table_.S[o][static_cast<std::size_t>(j)]) /
           (den * den);
  }
  return acc;
}

double HypergeometricKernel::diagonal_derivative(Sign sign, int k) const {
  const double u = k;
  const auto f1 = hyp_first_full(sign, u, gp_, true);
  const auto f2 = hyp_second_full(sign, u, gp_, true);
  const double a = realize(f1.value);
  const double da = realize(f1.dc);
  const double b = realize(f2.value);
  const double db = realize(f2.dc);
  return s_const(gp_) * psi(sign, k) * ((da * b - a * db) / (u + 1.0) + a * b / ((u + 1.0) * (u + 1.0)));
}

KernelBlock HypergeometricKernel::block(Block b, int trunc) const {
  require_block(b);
  KernelBlock out{b, trunc, Eigen::MatrixXd(trunc, trunc)};
#pragma omp parallel for schedule(dynamic, 4)
  for (int k = 0; k < trunc; ++k) {
    for (int l = 0; l < trunc; ++l) out.entries(k, l) = entry(b, k, l);
  }
  return out;
}

KernelBlock HypergeometricKernel::block_serial(Block b, int trunc) const {
  require_block(b);
  KernelBlock out{b, trunc, Eigen::MatrixXd(trunc, trunc)};
  for (int k = 0; k < trunc; ++k) {
    for (int l = 0; l < trunc; ++l) out.entries(k, l) = entry(b, k, l);
  }
  return out;
}

RS HypergeometricKernel::rhat_shat(Sign sign, double u) const {
  const double nearest = std::round(u);
  if (nearest <= -1.0 && std::abs(u - nearest) < 1e-8) {
    throw PoleError("rhat_shat: u is within 1e-8 of the pole " + std::to_string(nearest));
  }
  const auto i = FunctionTable::slot(sign);
  RS acc;
  for (int k = table_.size - 1; k >= 0; --k) {
    const double den = u + k + 1.0;
    acc.r += table_.R[i][static_cast<std::size_t>(k)] / den;
    acc.s += table_.S[i][static_cast<std::size_t>(k)] / den;
  }
  return acc;
}

double hyper_kernel(HalfInteger x, HalfInteger y, const GrandParams& gp) {
  const HypergeometricKernel kernel(gp, std::max(x.index(), y.index()) + 1);
  return kernel(x, y);
}

RS rhat_shat(Sign sign, double u, const GrandParams& gp) { return HypergeometricKernel(gp).rhat_shat(sign, u); }

Eigen::MatrixXd l_matrix(const GrandParams& gp, int trunc) {
  const auto plus = psi_sequence(Sign::Plus, trunc, gp);
  const auto minus = psi_sequence(Sign::Minus, trunc, gp);
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(2 * trunc, 2 * trunc);
  for (int k = 0; k < trunc; ++k) {
    for (int j = 0; j < trunc; ++j) {
      const double a = std::sqrt(plus[static_cast<std::size_t>(k)] * minus[static_cast<std::size_t>(j)]) / (k + j + 1.0);
      l(k, trunc + j) = a;   // L_{+-}(k, j)
      l(trunc + j, k) = -a;  // L_{-+}(j, k)
    }
  }
  return l;
}

Eigen::MatrixXd k_matrix(const HypergeometricKernel& kernel, int trunc) {
  Eigen::MatrixXd k(2 * trunc, 2 * trunc);
  for (Block b : {Block::PP, Block::PM, Block::MP, Block::MM}) {
    const auto blk = kernel.block(b, trunc);
    const int r0 = row_sign(b) == Sign::Plus ? 0 : trunc;
    const int c0 = col_sign(b) == Sign::Plus ? 0 : trunc;
    k.block(r0, c0, trunc, trunc) = blk.entries;
  }
  return k;
}

Eigen::MatrixXd d_matrix(const HypergeometricKernel& kernel, int trunc) {
  Eigen::MatrixXd d(trunc, trunc);
  for (int k = 0; k < trunc; ++k) {
    for (int l = 0; l < trunc; ++l) {
      d(k, l) = std::sqrt(kernel.psi(Sign::Minus, k) * kernel.psi(Sign::Plus, l)) / (k + l + 1.0);
    }
  }
  return d;
}

}  // namespace zmeasure
