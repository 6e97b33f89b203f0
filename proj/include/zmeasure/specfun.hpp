#pragma once

// Special-function primitives: complex log-gamma, Pochhammer symbols, the
// Gauss function at the argument xi / (xi - 1), Kummer and Whittaker
// functions, Meixner polynomials.

#include <complex>

namespace zmeasure {

using Complex = std::complex<double>;

inline constexpr double kRealTolerance = 1e-9;

// Returns v.real(); throws PrecisionError when |imag| > eps * max(1, |real|).
double realize(Complex v, double eps = kRealTolerance);

bool is_nonpositive_integer(Complex a);

}  // namespace zmeasure

namespace zmeasure::specfun {

// Principal-ish branch of log Gamma(z). The imaginary part is only defined
// modulo 2*pi; use it through exp() or differences of exp(). Throws PoleError
// at nonpositive integers.
Complex log_gamma(Complex z);
// 1 / Gamma(z); zero at the poles of Gamma.
Complex rgamma(Complex z);
Complex gamma(Complex z);

Complex pochhammer(Complex a, int k);
// log (a)_k with the same branch caveat as log_gamma. Returns -inf real part
// when the product vanishes.
Complex log_pochhammer(Complex a, int k);

struct SeriesOptions {
  double rel_tol = 1e-17;
  int max_terms = 100'000;
};

struct SeriesResult {
  Complex value;
  Complex dc;  // derivative in the lower parameter c, when requested
  int terms = 0;
  double tail_bound = 0.0;
};

// Plain Gauss series sum_m (a)_m (b)_m / ((c)_m m!) x^m for |x| < 1. When
// with_dc is set, also differentiates in c where b is allowed to depend on c
// through db/dc = b_dc (0 or 1).
SeriesResult gauss_series(Complex a, Complex b, Complex c, Complex x, bool with_dc = false, double b_dc = 0.0,
                          const SeriesOptions& opts = {});

// F(a, b; c; xi / (xi - 1)) for xi in [0, 1), evaluated through the Pfaff
// transformation F(a, b; c; w) = (1 - xi)^a F(a, c - b; c; xi). When one upper
// parameter is a nonpositive integer the transformation is taken around that
// parameter so the series stays finite.
Complex gauss_2f1_w(Complex a, Complex b, Complex c, double xi, const SeriesOptions& opts = {});
// d/dc of gauss_2f1_w, term-wise on the transformed series.
Complex gauss_2f1_w_dc(Complex a, Complex b, Complex c, double xi, const SeriesOptions& opts = {});
// Both at once (shares the series walk).
SeriesResult gauss_2f1_w_full(Complex a, Complex b, Complex c, double xi, bool with_dc,
                              const SeriesOptions& opts = {});

// Kummer M(a, b, x) = 1F1(a; b; x) by direct summation.
Complex hyp1f1(Complex a, Complex b, double x, const SeriesOptions& opts = {});

// Tricomi U(a, b, x) for x > 0 through the Laplace integral (double
// exponential quadrature) and the downward recurrence in a.
Complex tricomi_u(Complex a, Complex b, double x);

enum class WhittakerMethod {
  Auto,        // connection formula where it is well conditioned, integral otherwise
  Connection,  // M-function connection formula only (perturbed at integer 2 mu)
  Integral,    // Laplace integral for U only
};

struct WhittakerOptions {
  WhittakerMethod method = WhittakerMethod::Auto;
  double eps_int = 1e-6;       // 2 mu closer than this to an integer triggers perturbation
  double eps_pert = 1e-6;      // perturbation size in mu
  double cancel_budget = 1e8;  // max allowed |term| / |result| in Connection mode
  double auto_budget = 1e4;    // Auto switches to the integral route above this ratio
};

// W_{kappa, mu}(x) for real kappa, mu real or purely imaginary, x > 0.
double whittaker_w(double kappa, Complex mu, double x, const WhittakerOptions& opts = {});

// Meixner polynomial M_n(k; alpha + 1, xi) = F(-n, -k; alpha + 1; (xi - 1) / xi)
// as a terminating sum.
double meixner_polynomial(int n, double k, double alpha, double xi);

}  // namespace zmeasure::specfun
