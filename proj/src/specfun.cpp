#include "zmeasure/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "zmeasure/errors.hpp"

namespace zmeasure {

double realize(Complex v, double eps) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw PrecisionError("non-finite value");
  if (std::abs(v.imag()) > eps * std::max(1.0, std::abs(v.real()))) {
    throw PrecisionError("value expected to be real has imaginary part " + std::to_string(v.imag()) +
                         " (real part " + std::to_string(v.real()) + ")");
  }
  return v.real();
}

bool is_nonpositive_integer(Complex a) {
  return a.imag() == 0.0 && a.real() <= 0.0 && a.real() == std::round(a.real());
}

}  // namespace zmeasure

namespace zmeasure::specfun {

namespace {

constexpr double kPi = std::numbers::pi;

// B_{2k} / (2k (2k - 1)) for the Stirling series.
constexpr std::array<double, 10> kStirling = {
    1.0 / 12.0,         -1.0 / 360.0,        1.0 / 1260.0,         -1.0 / 1680.0,
    1.0 / 1188.0,       -691.0 / 360360.0,   1.0 / 156.0,          -3617.0 / 122400.0,
    43867.0 / 244188.0, -174611.0 / 125400.0};

Complex stirling_log_gamma(Complex z) {
  const Complex inv = 1.0 / z;
  const Complex inv2 = inv * inv;
  Complex series = 0.0;
  Complex pw = inv;
  for (double coef : kStirling) {
    series += coef * pw;
    pw *= inv2;
  }
  return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi) + series;
}

}  // namespace

Complex log_gamma(Complex z) {
  if (is_nonpositive_integer(z)) throw PoleError("log_gamma: pole at " + std::to_string(z.real()));
  if (z.imag() == 0.0 && z.real() > 0.0) return {std::lgamma(z.real()), 0.0};
  if (z.real() < -20.0) {
    // Reflection keeps the shift below bounded.
    return std::log(kPi) - std::log(std::sin(kPi * z)) - log_gamma(1.0 - z);
  }
  Complex shift = 0.0;
  while (z.real() < 15.0) {
    shift += std::log(z);
    z += 1.0;
  }
  return stirling_log_gamma(z) - shift;
}

Complex rgamma(Complex z) {
  if (is_nonpositive_integer(z)) return 0.0;
  return std::exp(-log_gamma(z));
}

Complex gamma(Complex z) { return std::exp(log_gamma(z)); }

Complex pochhammer(Complex a, int k) {
  Complex r = 1.0;
  for (int j = 0; j < k; ++j) r *= a + static_cast<double>(j);
  return r;
}

Complex log_pochhammer(Complex a, int k) {
  if (k == 0) return 0.0;
  if (is_nonpositive_integer(a) && -a.real() < k) return {-std::numeric_limits<double>::infinity(), 0.0};
  if (k <= 256 || is_nonpositive_integer(a)) {
    Complex s = 0.0;
    for (int j = 0; j < k; ++j) s += std::log(a + static_cast<double>(j));
    return s;
  }
  return log_gamma(a + static_cast<double>(k)) - log_gamma(a);
}

// ---------------------------------------------------------------------------
// Gauss series

SeriesResult gauss_series(Complex a, Complex b, Complex c, Complex x, bool with_dc, double b_dc,
                          const SeriesOptions& opts) {
  SeriesResult res;
  const double ax = std::abs(x);
  Complex term = 1.0;
  Complex sum = 1.0;
  Complex dsum = 0.0;
  // d/dc log term_m = b_dc * sum_{j<m} 1/(b+j) - sum_{j<m} 1/(c+j)
  Complex dlog = 0.0;
  const bool a_term = is_nonpositive_integer(a);
  const bool b_term = is_nonpositive_integer(b);
  for (int m = 0;; ++m) {
    if (m >= opts.max_terms) {
      throw ConvergenceError("Gauss series did not converge within " + std::to_string(opts.max_terms) + " terms");
    }
    const Complex am = a + static_cast<double>(m);
    const Complex bm = b + static_cast<double>(m);
    const Complex cm = c + static_cast<double>(m);
    if ((a_term && am == 0.0) || (b_term && bm == 0.0)) {
      res.terms = m + 1;
      res.tail_bound = 0.0;
      break;
    }
    if (cm == 0.0) throw PoleError("Gauss series: lower parameter reaches a nonpositive integer");
    const Complex ratio = am * bm / (cm * static_cast<double>(m + 1)) * x;
    const Complex next = term * ratio;
    if (with_dc) {
      if (b_dc != 0.0) dlog += b_dc / bm;
      dlog -= 1.0 / cm;
    }
    term = next;
    sum += term;
    if (with_dc) dsum += term * dlog;
    const double r = std::max(std::abs(ratio), ax);
    if (r < 1.0) {
      // Remaining terms are dominated by a geometric series with ratio r once
      // |ratio_m| has settled near |x|.
      const double mag = std::abs(term) * r / (1.0 - r);
      const double scale = std::abs(sum) + std::numeric_limits<double>::min();
      const double dmag = with_dc ? std::abs(term * dlog) * r / (1.0 - r) : 0.0;
      const double dscale = std::abs(dsum) + std::numeric_limits<double>::min();
      if (mag <= opts.rel_tol * scale && (!with_dc || dmag <= opts.rel_tol * dscale || dmag == 0.0) &&
          std::abs(term) > 0.0 && m > 2) {
        res.terms = m + 2;
        res.tail_bound = mag;
        break;
      }
      if (term == 0.0) {
        res.terms = m + 2;
        break;
      }
    }
  }
  res.value = sum;
  res.dc = dsum;
  return res;
}

SeriesResult gauss_2f1_w_full(Complex a, Complex b, Complex c, double xi, bool with_dc, const SeriesOptions& opts) {
  if (!(xi >= 0.0 && xi < 1.0)) throw DomainError("gauss_2f1_w: xi must lie in [0, 1)");
  if (a == 0.0 || b == 0.0) return SeriesResult{1.0, 0.0, 1, 0.0};
  // Pfaff around a nonpositive integer parameter when there is one, so that
  // a terminating function stays a finite sum.
  const bool a_int = is_nonpositive_integer(a);
  const bool b_int = is_nonpositive_integer(b);
  if (b_int && (!a_int || b.real() > a.real())) std::swap(a, b);
  const Complex prefactor = std::exp(a * std::log1p(-xi));
  SeriesResult r = gauss_series(a, c - b, c, xi, with_dc, 1.0, opts);
  r.value *= prefactor;
  r.dc *= prefactor;
  r.tail_bound *= std::abs(prefactor);
  return r;
}

Complex gauss_2f1_w(Complex a, Complex b, Complex c, double xi, const SeriesOptions& opts) {
  return gauss_2f1_w_full(a, b, c, xi, false, opts).value;
}

Complex gauss_2f1_w_dc(Complex a, Complex b, Complex c, double xi, const SeriesOptions& opts) {
  return gauss_2f1_w_full(a, b, c, xi, true, opts).dc;
}

// ---------------------------------------------------------------------------
// Kummer

Complex hyp1f1(Complex a, Complex b, double x, const SeriesOptions& opts) {
  Complex term = 1.0;
  Complex sum = 1.0;
  const bool a_term = is_nonpositive_integer(a);
  for (int m = 0; m < opts.max_terms; ++m) {
    const Complex am = a + static_cast<double>(m);
    const Complex bm = b + static_cast<double>(m);
    if (a_term && am == 0.0) return sum;
    if (bm == 0.0) throw PoleError("hyp1f1: lower parameter reaches a nonpositive integer");
    term *= am / (bm * static_cast<double>(m + 1)) * x;
    sum += term;
    if (static_cast<double>(m) > std::abs(x) + std::abs(a) && std::abs(term) <= opts.rel_tol * std::abs(sum)) {
      return sum;
    }
  }
  throw ConvergenceError("hyp1f1 did not converge");
}

// ---------------------------------------------------------------------------
// Meixner polynomials

double meixner_polynomial(int n, double k, double alpha, double xi) {
  if (n < 0) throw DomainError("meixner_polynomial: degree must be nonnegative");
  if (!(alpha > -1.0)) throw DomainError("meixner_polynomial: alpha must exceed -1");
  if (!(xi > 0.0 && xi < 1.0)) throw DomainError("meixner_polynomial: xi must lie in (0, 1)");
  const double x = (xi - 1.0) / xi;
  double term = 1.0;
  double sum = 1.0;
  for (int m = 0; m < n; ++m) {
    term *= (m - n) * (m - k) / ((alpha + 1.0 + m) * (m + 1.0)) * x;
    sum += term;
  }
  return sum;
}

}  // namespace zmeasure::specfun
