#include "zmeasure/whittaker_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zmeasure/errors.hpp"

namespace zmeasure {

namespace {

double sgn(Sign s) { return s == Sign::Plus ? 1.0 : -1.0; }

double gamma_pair(Sign sign, const ZParams& zp) {
  const double s = sgn(sign);
  return realize(specfun::gamma(1.0 + s * zp.z()) * specfun::gamma(1.0 + s * zp.zp()));
}

double pq_common(Sign sign, double x, const ZParams& zp, double t_power, double kappa_shift,
                 const specfun::WhittakerOptions& opts) {
  if (!(x > 0.0)) throw DomainError("Whittaker kernel functions need x > 0");
  const double g = gamma_pair(sign, zp);
  if (!(g > 0.0)) throw AdmissibilityError("Gamma(1 +- z) Gamma(1 +- z') is not positive");
  const double kappa = (sgn(sign) * zp.sum() + kappa_shift) / 2.0;
  const Complex mu = (zp.z() - zp.zp()) / 2.0;
  return std::pow(zp.t(), t_power) / std::sqrt(g * x) * specfun::whittaker_w(kappa, mu, x, opts);
}

double off_diagonal(Block b, double x, double y, const ZParams& zp, const specfun::WhittakerOptions& opts) {
  const Sign rs = row_sign(b);
  const Sign cs = col_sign(b);
  const double px = whittaker_p(rs, x, zp, opts);
  const double qx = whittaker_q(rs, x, zp, opts);
  const double py = whittaker_p(cs, y, zp, opts);
  const double qy = whittaker_q(cs, y, zp, opts);
  switch (b) {
    case Block::PP:
    case Block::MM:
      return (px * qy - qx * py) / (x - y);
    case Block::PM:
      return (px * py + qx * qy) / (x + y);
    case Block::MP:
      return -(px * py + qx * qy) / (x + y);
  }
  return 0.0;
}

double diagonal_limit(Block b, double x, const ZParams& zp, const specfun::WhittakerOptions& opts) {
  // A(h) = K(x + h, x - h) is even in h; eliminate the h^2 term.
  const double h = 1e-3 * std::max(1.0, x) * std::min(1.0, x);
  auto a = [&](double step) { return off_diagonal(b, x + step, x - step, zp, opts); };
  const double a1 = a(h);
  const double a2 = a(h / 2.0);
  const double a4 = a(h / 4.0);
  const double r1 = (4.0 * a2 - a1) / 3.0;
  const double r2 = (4.0 * a4 - a2) / 3.0;
  if (std::abs(r1 - r2) > kWhittakerDiagonalTolerance * std::max(1.0, std::abs(r2))) {
    throw PrecisionError("Whittaker kernel diagonal limit did not settle at x = " + std::to_string(x));
  }
  return r2;
}

}  // namespace

double whittaker_p(Sign sign, double x, const ZParams& zp, const specfun::WhittakerOptions& opts) {
  return pq_common(sign, x, zp, 0.25, 1.0, opts);
}

double whittaker_q(Sign sign, double x, const ZParams& zp, const specfun::WhittakerOptions& opts) {
  return pq_common(sign, x, zp, 0.75, -1.0, opts);
}

double whittaker_block_entry(Block b, double x, double y, const ZParams& zp, const specfun::WhittakerOptions& opts) {
  if (zp.meixner_mode()) throw DomainError("the Whittaker kernel needs admissible (z, z')");
  if (!(x > 0.0 && y > 0.0)) throw DomainError("Whittaker block entries need x, y > 0");
  if (x == y && (b == Block::PP || b == Block::MM)) return diagonal_limit(b, x, zp, opts);
  return off_diagonal(b, x, y, zp, opts);
}

double whittaker_kernel(double u, double v, const ZParams& zp, const specfun::WhittakerOptions& opts) {
  if (u == 0.0 || v == 0.0) throw DomainError("whittaker_kernel: arguments must be nonzero");
  const Sign su = u > 0.0 ? Sign::Plus : Sign::Minus;
  const Sign sv = v > 0.0 ? Sign::Plus : Sign::Minus;
  return whittaker_block_entry(block_of(su, sv), std::abs(u), std::abs(v), zp, opts);
}

}  // namespace zmeasure
