#include <doctest.h>

#include <cmath>
#include <set>

#include "zmeasure/errors.hpp"
#include "zmeasure/partition.hpp"

using namespace zmeasure;

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

TEST_CASE("partition counts") {
  CHECK(partition_count(0) == 1);
  CHECK(partition_count(4) == 5);
  CHECK(partition_count(10) == 42);
  CHECK(partition_count(100) == 190569292ULL);
  for (int n = 0; n <= 20; ++n) {
    CHECK(enumerate_partitions(n).size() == partition_count(n));
  }
}

TEST_CASE("enumeration order is descending lexicographic") {
  const auto ys = enumerate_partitions(4);
  REQUIRE(ys.size() == 5);
  CHECK(ys[0].parts() == std::vector<int>{4});
  CHECK(ys[1].parts() == std::vector<int>{3, 1});
  CHECK(ys[2].parts() == std::vector<int>{2, 2});
  CHECK(ys[3].parts() == std::vector<int>{2, 1, 1});
  CHECK(ys[4].parts() == std::vector<int>{1, 1, 1, 1});
  CHECK_THROWS_AS(enumerate_partitions(30, 100), ResourceError);
}

TEST_CASE("diagram validation") {
  CHECK_THROWS_AS(YoungDiagram({1, 2}), DomainError);
  CHECK_THROWS_AS(YoungDiagram({2, 0}), DomainError);
  CHECK(YoungDiagram().size() == 0);
}

TEST_CASE("frobenius coordinates") {
  const YoungDiagram lam({3, 2, 2});
  CHECK(lam.frobenius().p == std::vector<int>{2, 0});
  CHECK(lam.frobenius().q == std::vector<int>{2, 1});
  CHECK(lam.column_lengths() == std::vector<int>{3, 3, 1});
  CHECK(YoungDiagram::from_frobenius(lam.frobenius()) == lam);

  const auto x = to_configuration(lam);
  const Configuration expect({HalfInteger::from_twice(5), HalfInteger::from_twice(1), HalfInteger::from_twice(-3),
                              HalfInteger::from_twice(-5)});
  CHECK(x == expect);
  CHECK(x.balanced());
  CHECK(to_configuration(YoungDiagram()).empty());
}

TEST_CASE("configuration round trip and transposition") {
  for (int n = 0; n <= 12; ++n) {
    for (const auto& lam : enumerate_partitions(n)) {
      CHECK(to_diagram(to_configuration(lam)) == lam);
      CHECK(lam.transpose().transpose() == lam);
      const YoungDiagram tr = lam.transpose();
      const auto& f = lam.frobenius();
      const auto& g = tr.frobenius();
      CHECK(f.p == g.q);
      CHECK(f.q == g.p);
    }
  }
  CHECK_THROWS_AS(to_diagram(Configuration({HalfInteger::from_twice(1)})), DomainError);
}

TEST_CASE("half-integer parsing") {
  CHECK(HalfInteger::parse("5/2").twice() == 5);
  CHECK(HalfInteger::parse("-1/2").twice() == -1);
  CHECK(HalfInteger::parse("-1.5").twice() == -3);
  CHECK(HalfInteger::from_twice(-7).index() == 3);
  CHECK(HalfInteger::from_twice(-7).to_string() == "-7/2");
  CHECK_THROWS_AS(HalfInteger::from_twice(4), DomainError);
  CHECK_THROWS_AS(HalfInteger::parse("1"), DomainError);
}

TEST_CASE("dimensions") {
  CHECK(dimension_exact(YoungDiagram({2, 1})) == 2);
  CHECK(dimension_exact(YoungDiagram({3, 2, 2})) == 21);
  CHECK(dimension_exact(YoungDiagram({1})) == 1);
  CHECK(dimension(YoungDiagram({4, 3, 1})) == doctest::Approx(70.0));
  for (int n = 1; n <= 12; ++n) {
    double sum = 0.0;
    for (const auto& lam : enumerate_partitions(n)) {
      CHECK(dimension_hook_exact(lam) == dimension_determinant_exact(lam));
      const double d = dimension(lam);
      sum += d * d;
    }
    CHECK(sum == doctest::Approx(factorial(n)).epsilon(1e-14));
  }
}

TEST_CASE("dimension ratio agrees with exact dimension") {
  for (const auto& lam : enumerate_partitions(15)) {
    const double exact = static_cast<double>(dimension_exact(lam));
    CHECK(std::exp(log_dimension_ratio(lam.frobenius()) + std::lgamma(16.0)) ==
          doctest::Approx(exact).epsilon(1e-11));
  }
}
