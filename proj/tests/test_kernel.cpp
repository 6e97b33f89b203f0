#include <doctest.h>

#include <cmath>

#include "zmeasure/errors.hpp"
#include "zmeasure/kernel.hpp"
#include "zmeasure/verify.hpp"

using namespace zmeasure;

namespace {

const ZParams kReal{0.5, 1.0 / 3.0};
const ZParams kComplex{Complex(0.5, 1.5), Complex(0.5, -1.5)};

bool close(double a, double b, double rel) { return std::abs(a - b) <= rel * std::abs(b); }

HalfInteger pt(int twice) { return HalfInteger::from_twice(twice); }

}  // namespace

TEST_CASE("psi against mpmath") {
  const GrandParams gp(kReal, 0.2);
  CHECK(close(psi(Sign::Plus, 5, gp), 0.00026227574102626212987, 1e-13));
  CHECK(close(psi(Sign::Minus, 7, gp), 2.2405019783559683354e-7, 1e-13));
  CHECK(close(psi(Sign::Plus, 4, GrandParams(kComplex, 0.5)), 0.75694531373341116966, 1e-13));
  for (int k : {0, 3, 11}) {
    CHECK(close(psi_at(Sign::Minus, k, gp), psi(Sign::Minus, k, gp), 1e-12));
  }
}

TEST_CASE("R and S against mpmath") {
  const GrandParams gp(kReal, 0.2);
  const RS p0 = rs(Sign::Plus, 0, gp);
  CHECK(close(p0.r, 0.14540055269242392928, 1e-13));
  CHECK(close(p0.s, 0.033286999208372462692, 1e-13));
  const RS m3 = rs(Sign::Minus, 3, gp);
  CHECK(close(m3.r, 0.00026876752839605845268, 1e-13));
  CHECK(close(m3.s, 0.000014104927629323327446, 1e-12));
}

TEST_CASE("R / psi tends to 1") {
  const GrandParams gp(kReal, 0.2);
  for (Sign s : {Sign::Plus, Sign::Minus}) {
    const double ratio = rs(s, 200, gp).r / psi(s, 200, gp);
    CHECK(std::abs(ratio - 1.0) < 1e-3);
  }
}

TEST_CASE("Meixner-mode weights vanish past N") {
  const GrandParams gp(ZParams::meixner(3, 0.5), 0.4);
  CHECK(psi(Sign::Minus, 2, gp) != 0.0);
  CHECK(psi(Sign::Minus, 3, gp) == 0.0);
  CHECK(psi(Sign::Minus, 9, gp) == 0.0);
  CHECK(psi(Sign::Plus, 9, gp) > 0.0);
}

TEST_CASE("block names") {
  CHECK(parse_block("+-") == Block::PM);
  CHECK(to_string(Block::MP) == "-+");
  CHECK_THROWS_AS(parse_block("+"), DomainError);
}

TEST_CASE("kernel structure") {
  for (const auto* zp : {&kReal, &kComplex}) {
    const HypergeometricKernel kernel(GrandParams(*zp, 0.3));
    const auto pp = kernel.block(Block::PP, 12);
    const auto mm = kernel.block(Block::MM, 12);
    CHECK(pp.symmetric(1e-13));
    CHECK(mm.symmetric(1e-13));
    const auto pm = kernel.block(Block::PM, 12);
    const auto mp = kernel.block(Block::MP, 12);
    CHECK((mp.entries + pm.entries.transpose()).cwiseAbs().maxCoeff() <= 1e-15);

    for (int k = 0; k < 10; ++k) {
      for (Sign s : {Sign::Plus, Sign::Minus}) {
        const double rho = kernel(HalfInteger::at(s, k), HalfInteger::at(s, k));
        CHECK(rho >= 0.0);
        CHECK(rho <= 1.0);
      }
    }
    CHECK(kernel.block(Block::PM, 9).entries == kernel.block_serial(Block::PM, 9).entries);
    CHECK(build_function_table(kernel.params(), 40).R[0] == build_function_table_serial(kernel.params(), 40).R[0]);
  }
}

TEST_CASE("diagonal by series and by derivative") {
  const HypergeometricKernel kernel(GrandParams(kComplex, 0.5));
  for (Sign s : {Sign::Plus, Sign::Minus}) {
    for (int k = 0; k <= 8; ++k) {
      CHECK(close(kernel.diagonal_series(s, k), kernel.diagonal_derivative(s, k), 1e-9));
    }
  }
}

TEST_CASE("kernel minors against brute force") {
  const GrandParams gp(kReal, 0.2);
  const CorrelationOracle oracle(gp, 22, 1e-13);
  const HypergeometricKernel kernel(gp);
  const std::vector<Configuration> xs = {
      Configuration({pt(1)}),
      Configuration({pt(-1)}),
      Configuration({pt(3), pt(-1)}),
      Configuration({pt(1), pt(-3), pt(-5)}),
  };
  for (const auto& x : xs) {
    const auto ref = oracle(x);
    CHECK(close(correlation_det(x, kernel), ref.value, 1e-6));
  }
  CHECK(correlation_det(Configuration(), kernel) == 1.0);
}

TEST_CASE("L operator") {
  const GrandParams gp(kReal, 0.3);
  CHECK(l_entry(pt(1), pt(3), gp) == 0.0);
  CHECK(l_entry(pt(1), pt(-3), gp) == doctest::Approx(-l_entry(pt(-3), pt(1), gp)));
  const auto l = l_matrix(gp, 6);
  CHECK(l.rows() == 12);
  CHECK((l + l.transpose()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("Stieltjes series") {
  const HypergeometricKernel kernel(GrandParams(kReal, 0.2));
  CHECK_THROWS_AS(kernel.rhat_shat(Sign::Plus, -1.0), PoleError);
  const RS v = kernel.rhat_shat(Sign::Plus, 0.4);
  double r = 0.0;
  for (int k = 0; k < kernel.table_size(); ++k) r += kernel.rs(Sign::Plus, k).r / (0.4 + k + 1.0);
  CHECK(close(v.r, r, 1e-13));
}
