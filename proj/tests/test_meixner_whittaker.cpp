#include <doctest.h>

#include <cmath>

#include "zmeasure/errors.hpp"
#include "zmeasure/kernel.hpp"
#include "zmeasure/meixner.hpp"
#include "zmeasure/specfun.hpp"
#include "zmeasure/whittaker_kernel.hpp"

using namespace zmeasure;

TEST_CASE("meixner norms by direct summation") {
  const double alpha = 0.5, xi = 0.4;
  for (int n = 0; n <= 4; ++n) {
    double sum = 0.0;
    for (int k = 0; k < 400; ++k) {
      const double m = specfun::meixner_polynomial(n, k, alpha, xi);
      sum += m * m * meixner_weight(k, alpha, xi);
    }
    CHECK(sum == doctest::Approx(meixner_norm(n, alpha, xi)).epsilon(1e-12));
  }
  double cross = 0.0;
  for (int k = 0; k < 400; ++k) {
    cross += specfun::meixner_polynomial(2, k, alpha, xi) * specfun::meixner_polynomial(3, k, alpha, xi) *
             meixner_weight(k, alpha, xi);
  }
  CHECK(std::abs(cross) <= 1e-10 * std::sqrt(meixner_norm(2, alpha, xi) * meixner_norm(3, alpha, xi)));
}

TEST_CASE("meixner leading coefficient") {
  // Leading coefficient of the terminating series in k.
  const double alpha = 1.2, xi = 0.3;
  for (int n = 1; n <= 5; ++n) {
    // n-th finite difference of a degree-n polynomial is n! times its leading coefficient.
    double diff = 0.0;
    double binom = 1.0;
    for (int j = 0; j <= n; ++j) {
      diff += ((n - j) % 2 == 0 ? 1.0 : -1.0) * binom * specfun::meixner_polynomial(n, j, alpha, xi);
      binom = binom * (n - j) / (j + 1.0);
    }
    double nf = 1.0;
    for (int j = 2; j <= n; ++j) nf *= j;
    CHECK(diff / nf == doctest::Approx(meixner_leading(n, alpha, xi)).epsilon(1e-11));
  }
}

TEST_CASE("christoffel-darboux form") {
  for (int k = 0; k < 8; ++k) {
    for (int l = 0; l < 8; ++l) {
      if (k == l) continue;
      const double a = meixner_kernel_sum(4, 0.7, 0.35, k, l);
      const double b = meixner_kernel_cd(4, 0.7, 0.35, k, l);
      CHECK(std::abs(a - b) <= 1e-12);
    }
  }
}

TEST_CASE("meixner kernel is a rank-N projection") {
  const auto m = meixner_matrix(3, 0.5, 0.4, 100);
  CHECK(m.trace() == doctest::Approx(3.0).epsilon(1e-12));
  CHECK((m * m - m).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK(m == meixner_matrix_serial(3, 0.5, 0.4, 100));
}

TEST_CASE("hypergeometric ++ block degenerates to the meixner kernel") {
  const HypergeometricKernel kernel(GrandParams(ZParams::meixner(3, 0.5), 0.4));
  for (int k = 0; k <= 6; ++k) {
    for (int l = 0; l <= 6; ++l) {
      const double ref = meixner_kernel(3, 0.5, 0.4, k + 3, l + 3);
      CHECK(std::abs(kernel.entry(Block::PP, k, l) - ref) <= 1e-10 * std::abs(ref));
    }
  }
}

TEST_CASE("whittaker P, Q against mpmath") {
  const ZParams zp(0.5, 1.0 / 3.0);
  CHECK(whittaker_p(Sign::Plus, 1.5, zp) == doctest::Approx(0.36056815778714037696).epsilon(1e-11));
  CHECK(whittaker_q(Sign::Plus, 1.5, zp) == doctest::Approx(0.094380253283121784233).epsilon(1e-11));
  CHECK(whittaker_p(Sign::Minus, 1.5, zp) == doctest::Approx(0.1523118054840157729).epsilon(1e-11));
  CHECK(whittaker_p(Sign::Plus, 4.0, zp) == doctest::Approx(0.16623440930487294559).epsilon(1e-11));
  CHECK(whittaker_q(Sign::Plus, 4.0, zp) == doctest::Approx(0.0165141988919205962).epsilon(1e-11));
  CHECK(whittaker_p(Sign::Minus, 4.0, zp) == doctest::Approx(0.030249975514995517348).epsilon(1e-11));
}

TEST_CASE("whittaker kernel symmetries") {
  for (const ZParams& zp : {ZParams(0.5, 1.0 / 3.0), ZParams(Complex(0.5, 1.5), Complex(0.5, -1.5))}) {
    CHECK(whittaker_kernel(1.0, 2.5, zp) == doctest::Approx(whittaker_kernel(2.5, 1.0, zp)).epsilon(1e-12));
    CHECK(whittaker_kernel(-1.0, -2.5, zp) == doctest::Approx(whittaker_kernel(-2.5, -1.0, zp)).epsilon(1e-12));
    CHECK(whittaker_kernel(1.0, -2.5, zp) == doctest::Approx(-whittaker_kernel(-2.5, 1.0, zp)).epsilon(1e-12));
    const double d = whittaker_kernel(1.3, 1.3, zp);
    CHECK(d > 0.0);
    // The diagonal is the limit of nearby off-diagonal values.
    CHECK(d == doctest::Approx(whittaker_kernel(1.3, 1.3 + 1e-4, zp)).epsilon(1e-3));
  }
  CHECK_THROWS_AS(whittaker_kernel(0.0, 1.0, ZParams(0.5, 1.0 / 3.0)), DomainError);
}
