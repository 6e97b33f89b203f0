#include "zmeasure/verify.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "zmeasure/errors.hpp"
#include "zmeasure/measure.hpp"
#include "zmeasure/meixner.hpp"
#include "zmeasure/parallel.hpp"
#include "zmeasure/sample.hpp"
#include "zmeasure/specfun.hpp"
#include "zmeasure/whittaker_kernel.hpp"

namespace zmeasure {

namespace {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

std::string describe(const GrandParams& gp) { return gp.zp().describe() + ", xi=" + fmt(gp.xi()); }

std::string describe(const Configuration& x) {
  std::string s = "{";
  for (std::size_t i = 0; i < x.points().size(); ++i) {
    if (i) s += ",";
    s += x.points()[i].to_string();
  }
  return s + "}";
}

}  // namespace

std::string to_string(Metric m) { return m == Metric::Absolute ? "abs" : "rel"; }

const VerificationCase& VerificationReport::add_case(std::string input, double lhs, double rhs, double tolerance,
                                                     Metric metric) {
  VerificationCase c;
  c.input = std::move(input);
  c.lhs = lhs;
  c.rhs = rhs;
  c.abs_err = std::abs(lhs - rhs);
  c.rel_err = rhs != 0.0 ? c.abs_err / std::abs(rhs) : c.abs_err;
  c.tolerance = tolerance;
  c.metric = metric;
  const double err = metric == Metric::Absolute ? c.abs_err : c.rel_err;
  c.pass = std::isfinite(err) && err <= tolerance;
  cases.push_back(std::move(c));
  return cases.back();
}

const VerificationCase& VerificationReport::add_matrix_case(const std::string& input, const Eigen::MatrixXd& a,
                                                            const Eigen::MatrixXd& b, double tolerance) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DomainError("add_matrix_case: shape mismatch");
  Eigen::Index i = 0;
  Eigen::Index j = 0;
  if (a.size() > 0) (a - b).cwiseAbs().maxCoeff(&i, &j);
  const double lhs = a.size() > 0 ? a(i, j) : 0.0;
  const double rhs = a.size() > 0 ? b(i, j) : 0.0;
  return add_case(input + " [max at (" + std::to_string(i) + "," + std::to_string(j) + ")]", lhs, rhs, tolerance,
                  Metric::Absolute);
}

void VerificationReport::add_check(std::string name, bool ok, std::string detail) {
  checks.push_back({std::move(name), ok, std::move(detail)});
}

void VerificationReport::absorb(const VerificationReport& other) {
  for (auto c : other.cases) {
    c.input = other.suite + ": " + c.input;
    cases.push_back(std::move(c));
  }
  for (auto c : other.checks) {
    c.name = other.suite + ": " + c.name;
    checks.push_back(std::move(c));
  }
  runtime_seconds += other.runtime_seconds;
}

bool VerificationReport::pass() const {
  return std::all_of(cases.begin(), cases.end(), [](const auto& c) { return c.pass; }) &&
         std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

double VerificationReport::worst_ratio() const {
  double worst = 0.0;
  for (const auto& c : cases) {
    const double err = c.metric == Metric::Absolute ? c.abs_err : c.rel_err;
    const double r = c.tolerance > 0.0 ? err / c.tolerance : (err > 0.0 ? std::numeric_limits<double>::infinity() : 0.0);
    worst = std::max(worst, std::isnan(r) ? std::numeric_limits<double>::infinity() : r);
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Oracle

CorrelationOracle::CorrelationOracle(const GrandParams& gp, int n_max, double tail_tol, bool parallel) {
  if (n_max < 0) throw DomainError("oracle: n_max must be nonnegative");
  tail_ = neg_binomial_tail_bound(n_max, gp.t(), gp.xi());
  if (!(tail_ <= tail_tol)) {
    throw ResourceError("oracle: negative binomial tail past n_max = " + std::to_string(n_max) + " is bounded by " +
                           fmt(tail_) + ", above the budget " + fmt(tail_tol));
  }
  std::uint64_t total = 0;
  for (int n = 0; n <= n_max; ++n) total += partition_count(n);
  if (total > kDefaultEnumerationCap) throw ResourceError("oracle: too many diagrams to enumerate");
  std::vector<YoungDiagram> diagrams;
  diagrams.reserve(total);
  for (int n = 0; n <= n_max; ++n) {
    auto part = enumerate_partitions(n);
    diagrams.insert(diagrams.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  auto weight = [&](std::size_t i) { return mixed_measure(diagrams[i], gp); };
  weights_ = parallel ? parallel::map_indexed<double>(diagrams.size(), weight)
                      : parallel::map_indexed_serial<double>(diagrams.size(), weight);
  configs_.reserve(diagrams.size());
  for (const auto& d : diagrams) configs_.push_back(to_configuration(d));
}

OracleValue CorrelationOracle::operator()(const Configuration& x) const {
  std::vector<double> hits;
  for (std::size_t i = 0; i < configs_.size(); ++i) {
    if (configs_[i].contains(x)) hits.push_back(weights_[i]);
  }
  return {parallel::stable_sum(hits), tail_};
}

OracleValue correlation_oracle(const Configuration& x, const GrandParams& gp, int n_max, double tail_tol) {
  return CorrelationOracle(gp, n_max, tail_tol)(x);
}

double correlation_det(const Configuration& x, const HypergeometricKernel& kernel) {
  const auto& pts = x.points();
  const auto n = static_cast<Eigen::Index>(pts.size());
  if (n == 0) return 1.0;
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      m(i, j) = kernel(pts[static_cast<std::size_t>(i)], pts[static_cast<std::size_t>(j)]);
    }
  }
  return n == 1 ? m(0, 0) : m.partialPivLu().determinant();
}

double correlation_det(const Configuration& x, const GrandParams& gp) {
  int top = 0;
  for (const auto& p : x.points()) top = std::max(top, p.index() + 1);
  return correlation_det(x, HypergeometricKernel(gp, top));
}

std::vector<Configuration> small_configurations(int per_side, int max_size) {
  std::vector<HalfInteger> pts;
  for (int k = 0; k < per_side; ++k) {
    pts.push_back(HalfInteger::at(Sign::Plus, k));
    pts.push_back(HalfInteger::at(Sign::Minus, k));
  }
  std::vector<Configuration> out;
  const auto m = pts.size();
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (std::popcount(mask) > max_size) continue;
    std::vector<HalfInteger> sel;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask & (1u << i)) sel.push_back(pts[i]);
    }
    out.emplace_back(std::move(sel));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

// ---------------------------------------------------------------------------
// Normalization and Plancherel

VerificationReport normalization_suite() {
  Stopwatch sw;
  VerificationReport rep("normalization");
  const std::vector<ZParams> sets = {ZParams(0.5, 1.0 / 3.0), ZParams(-0.4, -0.7),
                                     ZParams(Complex(0.5, 1.5), Complex(0.5, -1.5))};
  for (const auto& zp : sets) {
    for (int n = 1; n <= 18; ++n) {
      rep.add_case("sum M^(" + std::to_string(n) + ") " + zp.describe(), total_mass(n, zp), 1.0, 1e-11,
                   Metric::Absolute);
    }
  }
  const ZParams base(0.5, 1.0 / 3.0);
  rep.add_case("M^(2)((2)) " + base.describe(), z_measure_n(YoungDiagram({2}), base), 6.0 / 7.0, 1e-14,
               Metric::Absolute);
  rep.add_case("M^(2)((1,1)) " + base.describe(), z_measure_n(YoungDiagram({1, 1}), base), 1.0 / 7.0, 1e-14,
               Metric::Absolute);

  // Grand canonical mass over |lambda| <= 25 plus the certified tail.
  const GrandParams gp(base, 0.2);
  std::vector<double> weights;
  for (int n = 0; n <= 25; ++n) {
    for (const auto& d : enumerate_partitions(n)) weights.push_back(mixed_measure(d, gp));
  }
  const double mass = parallel::stable_sum(weights);
  const double tail = neg_binomial_tail_bound(25, gp.t(), gp.xi());
  rep.add_case("sum_{|lambda|<=25} mixed measure " + describe(gp), mass, 1.0, 1e-15 + tail, Metric::Absolute);

  // Plancherel limit on Y_6.
  const auto y6 = enumerate_partitions(6);
  auto gap = [&](double z) {
    const ZParams zp(z, z);
    double worst = 0.0;
    for (const auto& d : y6) worst = std::max(worst, std::abs(z_measure_n(d, zp) - plancherel_measure(d)));
    return worst;
  };
  const double g100 = gap(100.5);
  const double g1000 = gap(1000.5);
  rep.add_case("max_Y6 |M - Plancherel| at z=z'=100.5", g100, 0.0, 0.05, Metric::Absolute);
  rep.add_check("Plancherel gap decreases from z=100.5 to z=1000.5", g1000 < g100,
                "gap(100.5)=" + fmt(g100) + ", gap(1000.5)=" + fmt(g1000));
  rep.runtime_seconds = sw.seconds();
  return rep;
}

// ---------------------------------------------------------------------------
// Oracle suite

VerificationReport oracle_suite(const std::vector<GrandParams>& params, int n_max, double tail_tol) {
  Stopwatch sw;
  VerificationReport rep("oracle");
  const auto configs = small_configurations(4, 3);
  for (const auto& gp : params) {
    const CorrelationOracle oracle(gp, n_max, tail_tol);
    int top = 4;
    const HypergeometricKernel kernel(gp, top);
    rep.add_check("tail certified " + describe(gp), oracle.tail_bound() <= tail_tol,
                  "bound " + fmt(oracle.tail_bound()));
    for (const auto& x : configs) {
      const auto o = oracle(x);
      rep.add_case("rho" + describe(x) + " " + describe(gp), correlation_det(x, kernel), o.value, 1e-6,
                   Metric::Relative);
    }
  }
  rep.runtime_seconds = sw.seconds();
  return rep;
}

// ---------------------------------------------------------------------------
// Fredholm determinant

VerificationReport fredholm_check(const GrandParams& gp, int trunc) {
  Stopwatch sw;
  VerificationReport rep("fredholm");
  const int cert = std::max(psi_decay_index(Sign::Plus, gp), psi_decay_index(Sign::Minus, gp));
  rep.add_check("truncation covers the psi-decay certificate", trunc >= cert,
                "trunc=" + std::to_string(trunc) + ", certificate=" + std::to_string(cert));
  const auto l = l_matrix(gp, trunc);
  const Eigen::MatrixXd one = Eigen::MatrixXd::Identity(2 * trunc, 2 * trunc);
  const auto lu = (one + l).partialPivLu();
  const double det_full = lu.determinant();
  const auto piv = lu.matrixLU().diagonal().cwiseAbs();
  rep.add_check("LU pivots well conditioned", piv.minCoeff() > 1e-12 * piv.maxCoeff(),
                "min/max pivot " + fmt(piv.minCoeff() / piv.maxCoeff()));

  const Eigen::MatrixXd a = l.topRightCorner(trunc, trunc);       // Psi+^{1/2} W Psi-^{1/2}
  const Eigen::MatrixXd b = -l.bottomLeftCorner(trunc, trunc);    // Psi-^{1/2} W Psi+^{1/2}
  const Eigen::MatrixXd small = Eigen::MatrixXd::Identity(trunc, trunc) + a * b;
  const double det_block = small.partialPivLu().determinant();
  const double scale = std::exp(gp.t() * std::log1p(-gp.xi()));

  const std::string in = describe(gp) + ", trunc=" + std::to_string(trunc);
  rep.add_case("det(1+L) (1-xi)^t, " + in, det_full * scale, 1.0, 1e-10, Metric::Absolute);
  rep.add_case("det(1+Psi+^1/2 W Psi- W Psi+^1/2) vs det(1+L), " + in, det_block, det_full, 1e-11,
               Metric::Relative);
  rep.runtime_seconds = sw.seconds();
  return rep;
}

// ---------------------------------------------------------------------------
// Operator relations

VerificationReport operator_check(const GrandParams& gp, int trunc) {
  Stopwatch sw;
  VerificationReport rep("operator");
  const HypergeometricKernel kernel(gp, trunc);
  const int big = std::max(trunc, kernel.table_size());
  const HypergeometricKernel wide(gp, big);
  const std::string in = describe(gp) + ", trunc=" + std::to_string(trunc);

  const auto l = l_matrix(gp, big);
  const Eigen::MatrixXd one = Eigen::MatrixXd::Identity(2 * big, 2 * big);
  const Eigen::MatrixXd k_dense = (one + l).partialPivLu().solve(l);  // (1+L)^{-1} L = L (1+L)^{-1}
  const auto k_entry = k_matrix(wide, big);
  for (Block b : {Block::PP, Block::PM, Block::MP, Block::MM}) {
    const int r0 = row_sign(b) == Sign::Plus ? 0 : big;
    const int c0 = col_sign(b) == Sign::Plus ? 0 : big;
    rep.add_matrix_case("K" + to_string(b) + " entrywise vs L(1+L)^-1, " + in,
                        k_entry.block(r0, c0, trunc, trunc), k_dense.block(r0, c0, trunc, trunc), 1e-8);
  }

  const Eigen::MatrixXd c = k_entry.block(0, big, big, big);
  const Eigen::MatrixXd d = d_matrix(wide, big);
  const Eigen::MatrixXd kpp = k_entry.block(0, 0, big, big);
  const Eigen::MatrixXd kmm = k_entry.block(big, big, big, big);
  const Eigen::MatrixXd kmp = k_entry.block(big, 0, big, big);
  const Eigen::MatrixXd cd = c * d;
  const Eigen::MatrixXd dc = d * c;
  const Eigen::MatrixXd dcd_d = d * c * d - d;
  rep.add_matrix_case("K++ = CD, " + in, kpp.topLeftCorner(trunc, trunc), cd.topLeftCorner(trunc, trunc), 1e-8);
  rep.add_matrix_case("K-- = DC, " + in, kmm.topLeftCorner(trunc, trunc), dc.topLeftCorner(trunc, trunc), 1e-8);
  rep.add_matrix_case("K-+ = DCD - D, " + in, kmp.topLeftCorner(trunc, trunc), dcd_d.topLeftCorner(trunc, trunc),
                      1e-8);

  // N = Psi+^{1/2} C Psi-^{1/2} in closed form and the relations for NW,
  // WN, WNW - W on a small corner.
  const auto& tab = wide.table();
  const int m = std::min(16, trunc);
  Eigen::MatrixXd w(big, big);
  Eigen::MatrixXd n_closed(big, big);
  Eigen::MatrixXd n_conj(big, big);
  for (int k = 0; k < big; ++k) {
    for (int j = 0; j < big; ++j) {
      const auto ku = static_cast<std::size_t>(k);
      const auto ju = static_cast<std::size_t>(j);
      w(k, j) = 1.0 / (k + j + 1.0);
      n_closed(k, j) = (tab.R[0][ku] * tab.R[1][ju] + tab.S[0][ku] * tab.S[1][ju]) / (k + j + 1.0);
      n_conj(k, j) = std::sqrt(tab.psi[0][ku]) * c(k, j) * std::sqrt(tab.psi[1][ju]);
    }
  }
  rep.add_matrix_case("N closed form vs Psi+^1/2 C Psi-^1/2, " + in, n_closed.topLeftCorner(m, m),
                      n_conj.topLeftCorner(m, m), 1e-12);

  const Eigen::MatrixXd nw = n_closed * w;
  const Eigen::MatrixXd wn = w * n_closed;
  const Eigen::MatrixXd wnw_w = w * n_closed * w - w;
  Eigen::MatrixXd nw_closed(m, m);
  Eigen::MatrixXd wn_closed(m, m);
  Eigen::MatrixXd wnw_closed(m, m);
  for (int k = 0; k < m; ++k) {
    for (int j = 0; j < m; ++j) {
      const auto ku = static_cast<std::size_t>(k);
      const auto ju = static_cast<std::size_t>(j);
      const double pk = tab.psi[0][ku];
      const double pj = tab.psi[0][ju];
      const double mk = tab.psi[1][ku];
      const double mj = tab.psi[1][ju];
      if (k == j) {
        nw_closed(k, j) = kpp(k, k);
        wn_closed(k, j) = kmm(k, k);
      } else {
        nw_closed(k, j) = (tab.R[0][ku] * tab.S[0][ju] - tab.S[0][ku] * tab.R[0][ju]) / ((k - j) * pj);
        wn_closed(k, j) = (tab.R[1][ku] * tab.S[1][ju] - tab.S[1][ku] * tab.R[1][ju]) / ((k - j) * mk);
      }
      (void)pk;
      (void)mj;
      wnw_closed(k, j) = -(tab.R[1][ku] * tab.R[0][ju] + tab.S[1][ku] * tab.S[0][ju]) / ((k + j + 1.0) * mk * pj);
    }
  }
  rep.add_matrix_case("NW closed form, " + in, nw.topLeftCorner(m, m), nw_closed, 1e-8);
  rep.add_matrix_case("WN closed form, " + in, wn.topLeftCorner(m, m), wn_closed, 1e-8);
  rep.add_matrix_case("WNW - W closed form, " + in, wnw_w.topLeftCorner(m, m), wnw_closed, 1e-8);

  // Diagonal: product-series route versus derivative route.
  for (Sign s : {Sign::Plus, Sign::Minus}) {
    for (int k = 0; k <= 10; ++k) {
      rep.add_case(std::string("K") + (s == Sign::Plus ? "++" : "--") + "(" + std::to_string(k) + "," +
                       std::to_string(k) + ") series vs derivative, " + describe(gp),
                   wide.diagonal_series(s, k), wide.diagonal_derivative(s, k), 1e-7, Metric::Relative);
    }
  }

  bool sym = true;
  for (Block b : {Block::PP, Block::MM}) sym = sym && wide.block(b, trunc).symmetric(1e-12);
  rep.add_check("++ and -- blocks symmetric", sym);
  const Eigen::MatrixXd pm = k_entry.block(0, big, trunc, trunc);
  const Eigen::MatrixXd mp = k_entry.block(big, 0, trunc, trunc);
  rep.add_check("J-symmetry K-+(k,l) = -K+-(l,k)",
                (mp + pm.transpose()).cwiseAbs().maxCoeff() <= 1e-14 * std::max(1.0, pm.cwiseAbs().maxCoeff()));
  rep.runtime_seconds = sw.seconds();
  return rep;
}

// ---------------------------------------------------------------------------
// Identities

namespace {

// sum_k (a)_k (b)_k xi^k (1-xi)^{a+b-1} / (k! k! (u + k)) F(1-a, 1-b; k+1; w)
// and the companion series with (a)_{k+1} (b)_{k+1} xi^{k+1} / (k+1) and
// F(1-a, 1-b; k+2; w).
Complex stieltjes_series(Complex a, Complex b, double u, double xi, bool second) {
  const double pre_exp = realize(a + b) - 1.0;
  const double pre = std::exp(pre_exp * std::log1p(-xi));
  Complex coef = second ? a * b * xi : Complex(1.0);  // (a)_k (b)_k xi^k / k!^2, shifted by one for the second
  Complex sum = 0.0;
  for (int k = 0; k < 5000; ++k) {
    const double kk = k;
    Complex term;
    if (second) {
      term = coef / (u + kk) * specfun::gauss_2f1_w(1.0 - a, 1.0 - b, kk + 2.0, xi) / (kk + 1.0);
      coef *= (a + kk + 1.0) * (b + kk + 1.0) * xi / ((kk + 1.0) * (kk + 1.0));
    } else {
      term = coef / (u + kk) * specfun::gauss_2f1_w(1.0 - a, 1.0 - b, kk + 1.0, xi);
      coef *= (a + kk) * (b + kk) * xi / ((kk + 1.0) * (kk + 1.0));
    }
    sum += term;
    if (k > 10 && std::abs(term) <= 1e-18 * std::abs(sum) && std::abs(coef) <= 1e-18 * std::abs(sum)) break;
    if (coef == 0.0) break;
  }
  return pre * sum;
}

}  // namespace

VerificationReport identity_suite(const GrandParams& gp, const std::vector<double>& u_grid) {
  Stopwatch sw;
  VerificationReport rep("identities");
  const auto& zp = gp.zp();
  const double xi = gp.xi();
  const double w = xi / (xi - 1.0);
  const HypergeometricKernel kernel(gp);
  for (double u : u_grid) {
    if (std::abs(u - std::round(u)) < 1e-3) {
      throw PoleError("identity_suite: u = " + fmt(u) + " is within 1e-3 of an integer");
    }
    const std::string at = " at u=" + fmt(u) + ", " + describe(gp);
    for (int flip = 0; flip < 2; ++flip) {
      const Complex a = flip == 0 ? -zp.z() : zp.z();
      const Complex b = flip == 0 ? -zp.zp() : zp.zp();
      const std::string ab = flip == 0 ? "(a,b)=(-z,-z')" : "(a,b)=(z,z')";
      const double lhs1 = realize(specfun::gauss_2f1_w(a, b, u + 1.0, xi) / u);
      const double rhs1 = realize(stieltjes_series(a, b, u, xi, false));
      rep.add_case("Stieltjes decomposition of F(a,b;u+1;w)/u " + ab + at, rhs1, lhs1, 1e-12, Metric::Relative);
      const double lhs2 = realize(1.0 - specfun::gauss_2f1_w(a, b, u, xi));
      const double rhs2 = realize(stieltjes_series(a, b, u, xi, true));
      rep.add_case("Stieltjes decomposition of 1-F(a,b;u;w) " + ab + at, rhs2, lhs2, 1e-12, Metric::Relative);
    }

    using specfun::gauss_2f1_w;
    const Complex z = zp.z();
    const Complex zq = zp.zp();
    const Complex prod = gauss_2f1_w(-z, -zq, u + 1.0, xi) * gauss_2f1_w(z, zq, -u, xi) +
                         zp.t() * w * (1.0 - w) * gauss_2f1_w(1.0 - z, 1.0 - zq, u + 2.0, xi) / (u + 1.0) *
                             gauss_2f1_w(1.0 + z, 1.0 + zq, 1.0 - u, xi) / u;
    rep.add_case("F(-z,-z';u+1;w)F(z,z';-u;w) + zz'w(1-w)(...) = 1" + at, realize(prod), 1.0, 1e-12,
                 Metric::Relative);

    for (Sign s : {Sign::Plus, Sign::Minus}) {
      const Sign o = s == Sign::Plus ? Sign::Minus : Sign::Plus;
      const char* tag = s == Sign::Plus ? "+" : "-";
      const char* otag = s == Sign::Plus ? "-" : "+";
      const RS hat = kernel.rhat_shat(s, u);
      const RS other = rs_at(o, u, gp);
      const double psi_o = psi_at(o, u, gp);
      rep.add_case(std::string("Rhat") + tag + "(u) = S" + otag + "(u)/psi" + otag + "(u)" + at, hat.r,
                   other.s / psi_o, 1e-11, Metric::Relative);
      rep.add_case(std::string("Shat") + tag + "(u) = 1 - R" + otag + "(u)/psi" + otag + "(u)" + at, hat.s,
                   1.0 - other.r / psi_o, 1e-11, Metric::Relative);
    }
    const RS plus = rs_at(Sign::Plus, u, gp);
    const RS minus = rs_at(Sign::Minus, -u - 1.0, gp);
    rep.add_case("R+(u)R-(-u-1) + S+(u)S-(-u-1) = psi+(u)psi-(-u-1)" + at, plus.r * minus.r + plus.s * minus.s,
                 psi_at(Sign::Plus, u, gp) * psi_at(Sign::Minus, -u - 1.0, gp), 1e-11, Metric::Relative);
  }
  rep.runtime_seconds = sw.seconds();
  return rep;
}

// ---------------------------------------------------------------------------
// Meixner

VerificationReport meixner_suite(int n_points, double alpha, double xi, int size) {
  Stopwatch sw;
  VerificationReport rep("meixner");
  const GrandParams gp(ZParams::meixner(n_points, alpha), xi);
  const HypergeometricKernel kernel(gp);
  const std::string in = "N=" + std::to_string(n_points) + ", alpha=" + fmt(alpha) + ", xi=" + fmt(xi);
  for (int k = 0; k <= 10; ++k) {
    for (int l = 0; l <= 10; ++l) {
      rep.add_case("K++(" + std::to_string(k) + "," + std::to_string(l) + ") vs M_N(k+N,l+N), " + in,
                   kernel.entry(Block::PP, k, l), meixner_kernel(n_points, alpha, xi, k + n_points, l + n_points),
                   1e-10, Metric::Relative);
    }
  }
  const auto m = meixner_matrix(n_points, alpha, xi, size);
  rep.add_case("trace M_N on K=" + std::to_string(size) + ", " + in, m.trace(), n_points, 1e-8, Metric::Absolute);
  rep.add_matrix_case("M^2 vs M on K=" + std::to_string(size) + ", " + in, m * m, m, 1e-8);

  // Orthogonality and norms by direct weighted summation.
  auto inner = [&](int a, int b) {
    std::vector<double> terms;
    for (int k = 0; k < 4000; ++k) {
      const double f = meixner_weight(k, alpha, xi);
      terms.push_back(specfun::meixner_polynomial(a, k, alpha, xi) * specfun::meixner_polynomial(b, k, alpha, xi) * f);
      if (k > 50 && f < 1e-300) break;
    }
    return parallel::stable_sum(terms);
  };
  for (int n = 0; n <= 4; ++n) {
    rep.add_case("||M_" + std::to_string(n) + "||^2 = h_n, " + in, inner(n, n), meixner_norm(n, alpha, xi), 1e-10,
                 Metric::Relative);
  }
  const double h2 = meixner_norm(2, alpha, xi);
  const double h3 = meixner_norm(3, alpha, xi);
  rep.add_case("<M_2, M_3> = 0, " + in, inner(2, 3), 0.0, 1e-10 * std::sqrt(h2 * h3), Metric::Absolute);
  rep.runtime_seconds = sw.seconds();
  return rep;
}

// ---------------------------------------------------------------------------
// Scaling limit

VerificationReport scaling_limit_check(const ZParams& zp, double u, double v, const std::vector<double>& xi_list,
                                       double final_tol) {
  Stopwatch sw;
  VerificationReport rep("scaling");
  if (!(u > 0.0 && v > 0.0) || u == v) throw DomainError("scaling_limit_check: needs distinct u, v > 0");
  for (Block b : {Block::PP, Block::PM, Block::MP, Block::MM}) {
    const double limit = whittaker_block_entry(b, u, v, zp);
    std::vector<double> errors;
    for (std::size_t i = 0; i < xi_list.size(); ++i) {
      const double xi = xi_list[i];
      const GrandParams gp(zp, xi);
      // The 1e-9 guards against 1/(1 - xi) landing just below an integer.
      const int k = static_cast<int>(std::floor(u / (1.0 - xi) + 1e-9));
      const int l = static_cast<int>(std::floor(v / (1.0 - xi) + 1e-9));
      const double scaled =
          block_formula(b, k, l, pq(row_sign(b), k, gp), pq(col_sign(b), l, gp)) / (1.0 - xi);
      const bool last = i + 1 == xi_list.size();
      const auto& c = rep.add_case("K" + to_string(b) + "(" + std::to_string(k) + "," + std::to_string(l) +
                                       ")/(1-xi) vs Whittaker K" + to_string(b) + "(" + fmt(u) + "," + fmt(v) +
                                       "), xi=" + fmt(xi) + ", " + zp.describe(),
                                   scaled, limit, last ? final_tol : std::numeric_limits<double>::infinity(),
                                   Metric::Absolute);
      errors.push_back(c.abs_err);
    }
    bool decreasing = true;
    std::string trail;
    for (std::size_t i = 0; i < errors.size(); ++i) {
      if (i > 0 && !(errors[i] < errors[i - 1])) decreasing = false;
      trail += (i ? ", " : "") + fmt(errors[i]);
    }
    rep.add_check("errors strictly decrease for block " + to_string(b), decreasing, trail);
  }
  rep.runtime_seconds = sw.seconds();
  return rep;
}

VerificationReport limit_relation_check(double a, double b, double u, const std::vector<double>& xs, double tol) {
  Stopwatch sw;
  VerificationReport rep("limit-relation");
  for (double x : xs) {
    // 1 - u/x = xi'/(xi' - 1) with xi' = 1 - x/u.
    const double xi = 1.0 - x / u;
    specfun::SeriesOptions opts;
    opts.max_terms = 2'000'000;  // xi' is within x/u of 1
    const double lhs = realize(specfun::gauss_2f1_w(a, b, u, xi, opts));
    const double rhs = std::pow(x, (a + b - 1.0) / 2.0) * std::exp(x / 2.0) *
                       specfun::whittaker_w((1.0 - a - b) / 2.0, (a - b) / 2.0, x);
    rep.add_case("F(a,b;u;1-u/x) vs x^((a+b-1)/2) e^(x/2) W(x), a=" + fmt(a) + ", b=" + fmt(b) + ", u=" + fmt(u) +
                     ", x=" + fmt(x),
                 lhs, rhs, tol, Metric::Relative);
  }
  rep.runtime_seconds = sw.seconds();
  return rep;
}

VerificationReport prefactor_check(const ZParams& zp, double x, double xi, double tol) {
  Stopwatch sw;
  VerificationReport rep("prefactor");
  const GrandParams gp(zp, xi);
  const int k = static_cast<int>(std::floor(x / (1.0 - xi) + 1e-9));
  for (Sign s : {Sign::Plus, Sign::Minus}) {
    const double sg = s == Sign::Plus ? 1.0 : -1.0;
    const double g = realize(specfun::gamma(1.0 + sg * zp.z()) * specfun::gamma(1.0 + sg * zp.zp()));
    const double limit = std::sqrt(std::sqrt(zp.t()) * std::exp(-x) * std::pow(x, sg * zp.sum()) / g);
    rep.add_case(std::string("psi") + (s == Sign::Plus ? "+" : "-") + "(" + std::to_string(k) +
                     ")^1/2 vs Gamma-form limit, x=" + fmt(x) + ", xi=" + fmt(xi) + ", " + zp.describe(),
                 std::sqrt(psi(s, k, gp)), limit, tol, Metric::Relative);
  }
  rep.runtime_seconds = sw.seconds();
  return rep;
}

// ---------------------------------------------------------------------------
// Monte Carlo

VerificationReport montecarlo_suite(const GrandParams& gp, std::size_t count, std::uint64_t seed) {
  Stopwatch sw;
  VerificationReport rep("montecarlo");
  const auto batch = draw_batch(gp, count, seed);
  const HypergeometricKernel kernel(gp, 2);
  std::vector<HalfInteger> pts;
  for (int k = 0; k < 2; ++k) {
    pts.push_back(HalfInteger::at(Sign::Plus, k));
    pts.push_back(HalfInteger::at(Sign::Minus, k));
  }
  std::vector<Configuration> configs;
  for (std::size_t i = 0; i < pts.size(); ++i) configs.emplace_back(std::vector<HalfInteger>{pts[i]});
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) configs.emplace_back(std::vector<HalfInteger>{pts[i], pts[j]});
  }
  const std::string in = describe(gp) + ", " + std::to_string(count) + " draws, seed " + std::to_string(seed);
  for (const auto& x : configs) {
    const auto est = empirical_correlation(batch, x);
    const double exact = correlation_det(x, kernel);
    // Three binomial standard errors (one count's worth when the estimate is 0 or 1).
    const double tol = 3.0 * std::max(est.std_err, 1.0 / static_cast<double>(count));
    rep.add_case("empirical rho" + describe(x) + " vs det K_X, " + in, est.estimate, exact, tol, Metric::Absolute);
  }
  const auto again = draw_batch(gp, count, seed);
  const auto serial = draw_batch_serial(gp, count, seed);
  rep.add_check("rerun with the same seed is identical", again.draws == batch.draws);
  rep.add_check("serial and parallel batches are identical", serial.draws == batch.draws);
  rep.runtime_seconds = sw.seconds();
  return rep;
}

// ---------------------------------------------------------------------------
// Dispatch

std::vector<std::string> suite_names() {
  return {"normalization", "oracle", "fredholm", "operator", "identities", "meixner", "scaling", "montecarlo"};
}

VerificationReport run_suite(const std::string& name, const SuiteConfig& cfg) {
  const GrandParams gp(cfg.zp, cfg.xi);
  if (name == "normalization") return normalization_suite();
  if (name == "oracle") return oracle_suite({gp}, cfg.n_max);
  if (name == "fredholm") {
    const int cert = std::max(psi_decay_index(Sign::Plus, gp), psi_decay_index(Sign::Minus, gp));
    return fredholm_check(gp, std::max(cfg.trunc, cert));
  }
  if (name == "operator") return operator_check(gp, cfg.trunc);
  if (name == "identities") return identity_suite(gp, {-0.3, 0.4, 1.3, 2.3, 3.7});
  if (name == "meixner") return meixner_suite(3, 0.5, 0.4, 100);
  if (name == "scaling") {
    if (cfg.zp.meixner_mode()) throw DomainError("scaling suite needs admissible parameters");
    VerificationReport rep("scaling");
    rep.absorb(scaling_limit_check(cfg.zp, 1.0, 2.0, {0.9, 0.99, 0.999}));
    rep.absorb(prefactor_check(cfg.zp, 1.5, 0.999));
    rep.absorb(limit_relation_check(-0.5, -1.0 / 3.0, 2000.0, {0.5, 1.5, 5.0}));
    return rep;
  }
  if (name == "montecarlo") return montecarlo_suite(GrandParams(cfg.zp, 0.5), cfg.draws, cfg.seed);
  if (name == "all") {
    VerificationReport rep("all");
    for (const auto& s : suite_names()) rep.absorb(run_suite(s, cfg));
    return rep;
  }
  throw DomainError("unknown suite '" + name + "'");
}

}  // namespace zmeasure
