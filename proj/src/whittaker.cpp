#include <algorithm>
#include <limits>
#include <cmath>
#include <numbers>
#include <string>

#include "zmeasure/errors.hpp"
#include "zmeasure/specfun.hpp"

namespace zmeasure::specfun {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

// int_0^inf exp(-x t) t^(a-1) (1+t)^(b-a-1) dt for Re a >= 1, by the
// exp-sinh substitution t = exp(pi/2 sinh s) and trapezoidal refinement.
Complex laplace_integral(Complex a, Complex b, double x) {
  const Complex pa = a - 1.0;
  const Complex pb = b - a - 1.0;
  auto g = [&](double s) -> Complex {
    const double log_t = kHalfPi * std::sinh(s);
    if (log_t > 700.0) return 0.0;
    const double t = std::exp(log_t);
    const double log_jac = log_t + std::log(kHalfPi * std::cosh(s));
    const Complex lg = -x * t + pa * log_t + pb * std::log1p(t) + log_jac;
    if (lg.real() < -745.0) return 0.0;
    return std::exp(lg);
  };

  constexpr double kSMax = 6.5;
  double h = 0.5;
  // Level 0: walk outwards until the integrand is negligible.
  Complex sum = g(0.0);
  double s_hi = 0.0;
  double s_lo = 0.0;
  for (int k = 1; k * h <= kSMax; ++k) {
    const Complex v = g(k * h);
    sum += v;
    s_hi = k * h;
    if (std::abs(v) < 1e-20 * std::abs(sum) && k > 2) break;
  }
  for (int k = 1; k * h <= kSMax; ++k) {
    const Complex v = g(-k * h);
    sum += v;
    s_lo = -k * h;
    if (std::abs(v) < 1e-20 * std::abs(sum) && k > 2) break;
  }
  Complex estimate = sum * h;
  for (int level = 1; level <= 14; ++level) {
    h *= 0.5;
    Complex added = 0.0;
    for (double s = s_lo + h; s < s_hi; s += 2.0 * h) added += g(s);
    sum += added;
    const Complex next = sum * h;
    const double change = std::abs(next - estimate);
    estimate = next;
    if (level >= 3 && change <= 1e-14 * std::abs(next)) return estimate;
  }
  throw ConvergenceError("Laplace integral for U(a, b, x) did not converge");
}

bool near_integer(Complex v, double eps) {
  return std::abs(v - std::round(v.real())) < eps;
}

struct ConnectionValue {
  Complex value;
  double cancellation;  // max |term| / |value|
};

// W = Gamma(-2mu)/Gamma(1/2-mu-kappa) M_{kappa,mu} + (mu -> -mu).
ConnectionValue connection_raw(double kappa, Complex mu, double x) {
  auto m_fun = [&](Complex m) {
    const Complex pre = std::exp(-0.5 * x + (m + 0.5) * std::log(x));
    return pre * hyp1f1(0.5 + m - kappa, 1.0 + 2.0 * m, x);
  };
  const Complex t1 = gamma(-2.0 * mu) * rgamma(0.5 - mu - kappa) * m_fun(mu);
  const Complex t2 = gamma(2.0 * mu) * rgamma(0.5 + mu - kappa) * m_fun(-mu);
  const Complex w = t1 + t2;
  const double scale = std::max(std::abs(t1), std::abs(t2));
  return {w, std::abs(w) > 0.0 ? scale / std::abs(w) : std::numeric_limits<double>::infinity()};
}

ConnectionValue connection_route(double kappa, Complex mu, double x, const WhittakerOptions& opts) {
  if (!near_integer(2.0 * mu, opts.eps_int)) return connection_raw(kappa, mu, x);
  // W is even and analytic in mu: average mu0 +- e, then Richardson on e, 2e.
  const Complex mu0 = std::round(2.0 * mu.real()) / 2.0;
  auto sym = [&](double e, double& cancel) {
    const auto up = connection_raw(kappa, mu0 + e, x);
    const auto dn = connection_raw(kappa, mu0 - e, x);
    cancel = std::max({cancel, up.cancellation, dn.cancellation});
    return 0.5 * (up.value + dn.value);
  };
  double cancel = 0.0;
  const Complex a1 = sym(opts.eps_pert, cancel);
  const Complex a2 = sym(2.0 * opts.eps_pert, cancel);
  return {(4.0 * a1 - a2) / 3.0, cancel};
}

Complex integral_route(double kappa, Complex mu, double x) {
  const Complex pre = std::exp(-0.5 * x + (mu + 0.5) * std::log(x));
  return pre * tricomi_u(0.5 + mu - kappa, 1.0 + 2.0 * mu, x);
}

}  // namespace

Complex tricomi_u(Complex a, Complex b, double x) {
  if (!(x > 0.0)) throw DomainError("tricomi_u: x must be positive");
  const int shift = a.real() >= 1.0 ? 0 : static_cast<int>(std::ceil(1.0 - a.real()));
  const Complex top = a + static_cast<double>(shift);
  Complex u_hi = laplace_integral(top + 1.0, b, x) * rgamma(top + 1.0);
  Complex u_cur = laplace_integral(top, b, x) * rgamma(top);
  // U(c-1) = -(b - 2c - x) U(c) - c (c - b + 1) U(c+1)
  for (int j = 0; j < shift; ++j) {
    const Complex c = top - static_cast<double>(j);
    const Complex u_lo = -(b - 2.0 * c - x) * u_cur - c * (c - b + 1.0) * u_hi;
    u_hi = u_cur;
    u_cur = u_lo;
  }
  return u_cur;
}

double whittaker_w(double kappa, Complex mu, double x, const WhittakerOptions& opts) {
  if (!(x > 0.0)) throw DomainError("whittaker_w: x must be positive, got " + std::to_string(x));
  if (mu.real() != 0.0 && mu.imag() != 0.0) {
    throw DomainError("whittaker_w: mu must be real or purely imaginary");
  }
  switch (opts.method) {
    case WhittakerMethod::Integral:
      return realize(integral_route(kappa, mu, x));
    case WhittakerMethod::Connection: {
      const auto cv = connection_route(kappa, mu, x, opts);
      if (cv.cancellation > opts.cancel_budget) {
        throw PrecisionError("whittaker_w: connection terms cancel by a factor " + std::to_string(cv.cancellation) +
                             " at x = " + std::to_string(x));
      }
      return realize(cv.value);
    }
    case WhittakerMethod::Auto:
      break;
  }
  if (x <= 30.0 && !near_integer(2.0 * mu, opts.eps_int)) {
    const auto cv = connection_raw(kappa, mu, x);
    if (cv.cancellation <= opts.auto_budget) return realize(cv.value);
  }
  return realize(integral_route(kappa, mu, x));
}

}  // namespace zmeasure::specfun
