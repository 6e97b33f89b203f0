#include <doctest.h>

#include <cmath>

#include "zmeasure/errors.hpp"
#include "zmeasure/kernel.hpp"
#include "zmeasure/sample.hpp"

using namespace zmeasure;

namespace {

const ZParams kReal{0.5, 1.0 / 3.0};

}  // namespace

TEST_CASE("uniform01 range and determinism") {
  Rng a(7), b(7);
  for (int i = 0; i < 1000; ++i) {
    const double u = uniform01(a);
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    CHECK(u == uniform01(b));
  }
}

TEST_CASE("sample size mean and variance") {
  const GrandParams gp(kReal, 0.5);
  Rng rng(123);
  const int draws = 100000;
  double sum = 0.0, sq = 0.0;
  for (int i = 0; i < draws; ++i) {
    const double n = sample_size(gp, rng);
    sum += n;
    sq += n * n;
  }
  const double mean = sum / draws;
  const double var = sq / draws - mean * mean;
  const double expect = gp.t() * gp.xi() / (1.0 - gp.xi());
  CHECK(std::abs(mean - expect) <= 3.0 * std::sqrt(var / draws));

  const GrandParams tiny(kReal, 1e-9);
  Rng r2(1);
  for (int i = 0; i < 100; ++i) CHECK(sample_size(tiny, r2) == 0);
}

TEST_CASE("diagram sampler") {
  Rng rng(5);
  CHECK(sample_diagram(0, kReal, rng).empty());
  CHECK(sample_diagram(1, kReal, rng) == YoungDiagram({1}));

  const DiagramSampler sampler(kReal, 6);
  CHECK_THROWS_AS(sampler.draw(7, rng), ResourceError);
  const int draws = 100000;
  int hits = 0;
  for (int i = 0; i < draws; ++i) hits += sampler.draw(2, rng) == YoungDiagram({2});
  const double p = 6.0 / 7.0;
  CHECK(std::abs(static_cast<double>(hits) / draws - p) <= 3.0 * std::sqrt(p * (1 - p) / draws));
}

TEST_CASE("batches are reproducible and independent of threads") {
  const GrandParams gp(kReal, 0.5);
  const auto a = draw_batch(gp, 5000, 99);
  const auto b = draw_batch(gp, 5000, 99);
  const auto c = draw_batch_serial(gp, 5000, 99);
  CHECK(a.draws == b.draws);
  CHECK(a.draws == c.draws);
  CHECK(a.rng == std::string(kRngName));
  const auto d = draw_batch(gp, 5000, 100);
  CHECK_FALSE(a.draws == d.draws);
}

TEST_CASE("empirical correlations") {
  const GrandParams gp(kReal, 0.5);
  const auto batch = draw_batch(gp, 100000, 42);
  const auto empty = empirical_correlation(batch, Configuration());
  CHECK(empty.estimate == 1.0);
  CHECK(empty.std_err == 0.0);

  const HypergeometricKernel kernel(gp);
  const auto x = HalfInteger::from_twice(1);
  const auto single = empirical_correlation(batch, Configuration({x}));
  CHECK(std::abs(single.estimate - kernel(x, x)) <= 3.0 * single.std_err);
}
