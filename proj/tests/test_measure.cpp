#include <doctest.h>

#include <cmath>

#include "zmeasure/errors.hpp"
#include "zmeasure/measure.hpp"

using namespace zmeasure;

namespace {

const ZParams kReal{0.5, 1.0 / 3.0};
const ZParams kComplex{Complex(0.5, 1.5), Complex(0.5, -1.5)};

// Content form: n! / (t)_n * prod_boxes (z + c)(z' + c) * (dim / n!)^2.
double content_form(const YoungDiagram& lam, const ZParams& zp) {
  const int n = lam.size();
  double value = 1.0;
  for (int i = 0; i < lam.length(); ++i) {
    for (int j = 0; j < lam.parts()[i]; ++j) {
      const double c = j - i;
      value *= ((zp.z() + c) * (zp.zp() + c)).real();
    }
  }
  double nf = 1.0;
  for (int k = 1; k <= n; ++k) {
    value /= zp.t() + k - 1;
    nf *= k;
  }
  const double d = static_cast<double>(dimension_exact(lam)) / nf;
  return value * nf * d * d;
}

}  // namespace

TEST_CASE("closed-form values at n = 2") {
  CHECK(std::abs(z_measure_n(YoungDiagram({2}), kReal) - 6.0 / 7.0) <= 1e-14);
  CHECK(std::abs(z_measure_n(YoungDiagram({1, 1}), kReal) - 1.0 / 7.0) <= 1e-14);
  CHECK(z_measure_n(YoungDiagram(), kReal) == 1.0);
  CHECK(z_measure_n(YoungDiagram({1}), kComplex) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("agrees with the content-product form") {
  for (const auto* zp : {&kReal, &kComplex}) {
    for (int n = 1; n <= 10; ++n) {
      for (const auto& lam : enumerate_partitions(n)) {
        const double ref = content_form(lam, *zp);
        CHECK(std::abs(z_measure_n(lam, *zp) - ref) <= 1e-12 * ref);
      }
    }
  }
}

TEST_CASE("normalization") {
  const ZParams neg{-0.4, -0.7};
  for (const auto* zp : {&kReal, &neg, &kComplex}) {
    for (int n = 1; n <= 14; ++n) {
      CHECK(std::abs(total_mass(n, *zp) - 1.0) <= 1e-11);
    }
  }
}

TEST_CASE("transposition flips the sign of z, z'") {
  const ZParams pos{0.4, 0.7};
  const ZParams neg{-0.4, -0.7};
  for (const auto& lam : enumerate_partitions(9)) {
    CHECK(z_measure_n(lam.transpose(), pos) == doctest::Approx(z_measure_n(lam, neg)).epsilon(1e-12));
  }
}

TEST_CASE("parallel and serial agree bitwise") {
  const auto ys = enumerate_partitions(16);
  CHECK(z_measures(ys, kComplex) == z_measures_serial(ys, kComplex));
  CHECK(total_mass(16, kReal) == total_mass_serial(16, kReal));
}

TEST_CASE("negative binomial weight") {
  const double t = 1.0 / 6.0, xi = 0.2;
  CHECK(neg_binomial_weight(0, t, xi) == doctest::Approx(std::pow(0.8, t)).epsilon(1e-15));
  CHECK(neg_binomial_weight(1, t, xi) == doctest::Approx(std::pow(0.8, t) * t * xi).epsilon(1e-15));
  for (int n_max : {5, 10, 26}) {
    double head = 0.0;
    for (int n = 0; n <= n_max; ++n) head += neg_binomial_weight(n, t, xi);
    double rest = 0.0;
    for (int n = n_max + 1; n <= 400; ++n) rest += neg_binomial_weight(n, t, xi);
    CHECK(std::abs(head + rest - 1.0) <= 1e-15);
    CHECK(neg_binomial_tail_bound(n_max, t, xi) >= rest);
    CHECK(neg_binomial_tail_bound(n_max, t, xi) <= 2.0 * rest);
  }
  CHECK_THROWS_AS(neg_binomial_weight(3, t, 1.0), DomainError);
}

TEST_CASE("mixed measure routes") {
  const GrandParams gp(kComplex, 0.5);
  for (int n = 0; n <= 8; ++n) {
    for (const auto& lam : enumerate_partitions(n)) {
      const double a = mixed_measure_factored(lam, gp);
      const double b = mixed_measure_direct(lam, gp);
      CHECK(std::abs(a - b) <= 1e-12 * b);
      CHECK(mixed_measure(lam, gp) == b);
    }
  }
}

TEST_CASE("plancherel") {
  double sum = 0.0;
  for (const auto& lam : enumerate_partitions(6)) sum += plancherel_measure(lam);
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(plancherel_measure(YoungDiagram({2, 1})) == doctest::Approx(4.0 / 6.0).epsilon(1e-15));

  auto gap = [](double z) {
    const ZParams zp{z, z};
    double worst = 0.0;
    for (const auto& lam : enumerate_partitions(6)) {
      worst = std::max(worst, std::abs(z_measure_n(lam, zp) - plancherel_measure(lam)));
    }
    return worst;
  };
  const double g1 = gap(100.5);
  CHECK(g1 <= 0.05);
  CHECK(gap(1000.5) < g1);
}

TEST_CASE("admissibility") {
  CHECK_THROWS_AS(ZParams(0.5, 1.5), AdmissibilityError);
  CHECK_THROWS_AS(ZParams(Complex(0.5, 1.0), Complex(0.5, 2.0)), AdmissibilityError);
  CHECK_THROWS_AS(ZParams(2.0, 2.0), AdmissibilityError);
  CHECK_THROWS_AS(GrandParams(kReal, 1.0), AdmissibilityError);
  CHECK_NOTHROW(ZParams(2.3, 2.9));
  CHECK_THROWS_AS(z_measure_n(YoungDiagram({1}), ZParams::meixner(3, 0.5)), AdmissibilityError);
}
