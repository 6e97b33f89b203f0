#include "zmeasure/partition.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>

#include <Eigen/Dense>

#include "zmeasure/errors.hpp"

namespace zmeasure {

namespace {

using i128 = __int128;

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const i128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

// Exact rational in lowest terms; only used for the tiny (d <= 4) Cauchy
// matrices that arise for |lambda| <= 20.
struct Rational {
  i128 num = 0;
  i128 den = 1;

  static Rational make(i128 n, i128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const i128 g = gcd128(n, d);
    return g > 1 ? Rational{n / g, d / g} : Rational{n, d};
  }
  Rational operator-(const Rational& o) const { return make(num * o.den - o.num * den, den * o.den); }
  Rational operator*(const Rational& o) const { return make(num * o.num, den * o.den); }
  Rational operator/(const Rational& o) const { return make(num * o.den, den * o.num); }
};

i128 factorial128(int n) {
  i128 f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// det[1 / ((p_i + q_j + 1) p_i! q_j!)] = dim lambda / |lambda|!.
Rational exact_cauchy_determinant(const FrobeniusCoordinates& fc) {
  const std::size_t d = fc.p.size();
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      m[i][j] = Rational::make(1, (fc.p[i] + fc.q[j] + 1) * factorial128(fc.p[i]) * factorial128(fc.q[j]));
    }
  }
  Rational det = Rational::make(1, 1);
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t pivot = col;
    while (pivot < d && m[pivot][col].num == 0) ++pivot;
    if (pivot == d) return Rational::make(0, 1);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = det * Rational::make(-1, 1);
    }
    det = det * m[col][col];
    for (std::size_t r = col + 1; r < d; ++r) {
      const Rational factor = m[r][col] / m[col][col];
      for (std::size_t c = col; c < d; ++c) m[r][c] = m[r][c] - factor * m[col][c];
    }
  }
  return det;
}

std::vector<int> hook_lengths(const YoungDiagram& lambda) {
  const auto cols = lambda.column_lengths();
  std::vector<int> hooks;
  hooks.reserve(static_cast<std::size_t>(lambda.size()));
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda.parts()[static_cast<std::size_t>(i)]; ++j) {
      const int arm = lambda.parts()[static_cast<std::size_t>(i)] - j - 1;
      const int leg = cols[static_cast<std::size_t>(j)] - i - 1;
      hooks.push_back(arm + leg + 1);
    }
  }
  return hooks;
}

constexpr int kExactLimit = 20;

}  // namespace

// ---------------------------------------------------------------------------
// HalfInteger

HalfInteger HalfInteger::from_twice(int twice) {
  if (twice % 2 == 0) throw DomainError("half-integer requires an odd numerator, got " + std::to_string(twice));
  HalfInteger h;
  h.twice_ = twice;
  return h;
}

std::string HalfInteger::to_string() const { return std::to_string(twice_) + "/2"; }

HalfInteger HalfInteger::parse(const std::string& text) {
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    int num = 0;
    const char* first = text.data();
    const char* mid = first + slash;
    auto [ptr, ec] = std::from_chars(first, mid, num);
    if (ec != std::errc{} || ptr != mid || text.substr(slash + 1) != "2") {
      throw DomainError("cannot parse half-integer '" + text + "'");
    }
    return from_twice(num);
  }
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw DomainError("cannot parse half-integer '" + text + "'");
  }
  const double twice = 2.0 * v;
  if (twice != std::round(twice)) throw DomainError("not a half-integer: '" + text + "'");
  return from_twice(static_cast<int>(twice));
}

// ---------------------------------------------------------------------------
// YoungDiagram

YoungDiagram::YoungDiagram(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw DomainError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be weakly decreasing");
  }
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  const auto cols = column_lengths();
  for (int i = 0; i < length() && parts_[static_cast<std::size_t>(i)] > i; ++i) {
    frobenius_.p.push_back(parts_[static_cast<std::size_t>(i)] - i - 1);
    frobenius_.q.push_back(cols[static_cast<std::size_t>(i)] - i - 1);
  }
}

YoungDiagram YoungDiagram::from_frobenius(const FrobeniusCoordinates& fc) {
  const std::size_t d = fc.p.size();
  if (fc.q.size() != d) throw DomainError("Frobenius lists must have equal length");
  for (std::size_t i = 0; i < d; ++i) {
    if (fc.p[i] < 0 || fc.q[i] < 0) throw DomainError("Frobenius coordinates must be nonnegative");
    if (i > 0 && (fc.p[i] >= fc.p[i - 1] || fc.q[i] >= fc.q[i - 1])) {
      throw DomainError("Frobenius coordinates must be strictly decreasing");
    }
  }
  // Rows i < d have length p_i + i + 1; below the diagonal block, row r has
  // #{j : q_j + j >= r} boxes (j counted from 0).
  std::vector<int> parts;
  for (std::size_t i = 0; i < d; ++i) parts.push_back(fc.p[i] + static_cast<int>(i) + 1);
  const int rows = d == 0 ? 0 : fc.q[0] + 1;
  for (int r = static_cast<int>(d); r < rows; ++r) {
    int len = 0;
    for (std::size_t j = 0; j < d; ++j) {
      if (fc.q[j] + static_cast<int>(j) >= r) ++len;
    }
    parts.push_back(len);
  }
  return YoungDiagram(std::move(parts));
}

std::vector<int> YoungDiagram::column_lengths() const {
  std::vector<int> cols(parts_.empty() ? 0 : static_cast<std::size_t>(parts_.front()), 0);
  for (int part : parts_) {
    for (int j = 0; j < part; ++j) ++cols[static_cast<std::size_t>(j)];
  }
  return cols;
}

YoungDiagram YoungDiagram::transpose() const { return YoungDiagram(column_lengths()); }

FrobeniusCoordinates frobenius_coordinates(const YoungDiagram& lambda) { return lambda.frobenius(); }

// ---------------------------------------------------------------------------
// Configuration

Configuration::Configuration(std::vector<HalfInteger> points) : points_(std::move(points)) {
  std::sort(points_.begin(), points_.end(), std::greater<>());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

int Configuration::count(Sign sign) const {
  return static_cast<int>(std::count_if(points_.begin(), points_.end(),
                                        [sign](HalfInteger h) { return h.sign() == sign; }));
}

bool Configuration::contains(const Configuration& subset) const {
  return std::includes(points_.begin(), points_.end(), subset.points_.begin(), subset.points_.end(),
                       std::greater<>());
}

bool Configuration::contains(HalfInteger x) const {
  return std::binary_search(points_.begin(), points_.end(), x, std::greater<>());
}

Configuration to_configuration(const YoungDiagram& lambda) {
  const auto& fc = lambda.frobenius();
  std::vector<HalfInteger> pts;
  pts.reserve(2 * fc.p.size());
  for (int p : fc.p) pts.push_back(HalfInteger::at(Sign::Plus, p));
  for (int q : fc.q) pts.push_back(HalfInteger::at(Sign::Minus, q));
  return Configuration(std::move(pts));
}

YoungDiagram to_diagram(const Configuration& x) {
  if (!x.balanced()) throw DomainError("configuration is not balanced; it is not the image of a diagram");
  FrobeniusCoordinates fc;
  for (const auto& h : x.points()) {
    if (h.sign() == Sign::Plus) fc.p.push_back(h.index());
  }
  // Points are sorted descending by value, so negative indices come out
  // ascending; reverse them.
  for (auto it = x.points().rbegin(); it != x.points().rend(); ++it) {
    if (it->sign() == Sign::Minus) fc.q.push_back(it->index());
  }
  return YoungDiagram::from_frobenius(fc);
}

// ---------------------------------------------------------------------------
// Counting and enumeration

std::uint64_t partition_count(int n) {
  if (n < 0) return 0;
  std::vector<std::uint64_t> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    std::int64_t acc = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      const int g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      const std::int64_t sign = (k % 2 == 1) ? 1 : -1;
      acc += sign * static_cast<std::int64_t>(p[static_cast<std::size_t>(m - g1)]);
      if (g2 <= m) acc += sign * static_cast<std::int64_t>(p[static_cast<std::size_t>(m - g2)]);
    }
    p[static_cast<std::size_t>(m)] = static_cast<std::uint64_t>(acc);
  }
  return p[static_cast<std::size_t>(n)];
}

std::vector<YoungDiagram> enumerate_partitions(int n, std::uint64_t cap) {
  if (n < 0) throw DomainError("enumerate_partitions: n must be nonnegative");
  const auto count = partition_count(n);
  if (count > cap) {
    throw ResourceError("enumerate_partitions: p(" + std::to_string(n) + ") = " + std::to_string(count) +
                        " exceeds cap " + std::to_string(cap));
  }
  std::vector<YoungDiagram> out;
  out.reserve(count);
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int> a{n};
  while (true) {
    out.emplace_back(a);
    // Rightmost part larger than one.
    int idx = static_cast<int>(a.size()) - 1;
    while (idx >= 0 && a[static_cast<std::size_t>(idx)] == 1) --idx;
    if (idx < 0) break;
    int remainder = static_cast<int>(a.size()) - idx;  // ones after idx, plus one removed below
    const int v = --a[static_cast<std::size_t>(idx)];
    a.resize(static_cast<std::size_t>(idx) + 1);
    while (remainder > 0) {
      const int part = std::min(v, remainder);
      a.push_back(part);
      remainder -= part;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Dimensions

double log_dimension_ratio(const FrobeniusCoordinates& fc) {
  double acc = log_cauchy_determinant(fc);
  for (std::size_t i = 0; i < fc.p.size(); ++i) acc -= std::lgamma(fc.p[i] + 1.0) + std::lgamma(fc.q[i] + 1.0);
  return acc;
}

double log_cauchy_determinant(const FrobeniusCoordinates& fc) {
  const std::size_t d = fc.p.size();
  double acc = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      acc += std::log(static_cast<double>(fc.p[i] - fc.p[j])) + std::log(static_cast<double>(fc.q[i] - fc.q[j]));
    }
    for (std::size_t j = 0; j < d; ++j) acc -= std::log(static_cast<double>(fc.p[i] + fc.q[j] + 1));
  }
  return acc;
}

std::uint64_t dimension_hook_exact(const YoungDiagram& lambda) {
  if (lambda.size() > kExactLimit) throw ResourceError("exact dimension only for |lambda| <= 20");
  i128 denom = 1;
  for (int h : hook_lengths(lambda)) denom *= h;
  return static_cast<std::uint64_t>(factorial128(lambda.size()) / denom);
}

std::uint64_t dimension_determinant_exact(const YoungDiagram& lambda) {
  if (lambda.size() > kExactLimit) throw ResourceError("exact dimension only for |lambda| <= 20");
  const Rational det = exact_cauchy_determinant(lambda.frobenius());
  const i128 scaled = factorial128(lambda.size()) * det.num;
  if (scaled % det.den != 0) throw PrecisionError("determinant route produced a non-integer dimension");
  return static_cast<std::uint64_t>(scaled / det.den);
}

std::uint64_t dimension_exact(const YoungDiagram& lambda) {
  const auto by_det = dimension_determinant_exact(lambda);
  const auto by_hook = dimension_hook_exact(lambda);
  if (by_det != by_hook) {
    throw PrecisionError("dimension routes disagree: determinant " + std::to_string(by_det) + " vs hook " +
                         std::to_string(by_hook));
  }
  return by_det;
}

double dimension(const YoungDiagram& lambda) {
  if (lambda.size() <= kExactLimit) return static_cast<double>(dimension_exact(lambda));

  const auto& fc = lambda.frobenius();
  const auto d = static_cast<Eigen::Index>(fc.p.size());
  using MatrixL = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  MatrixL m(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    const int p = fc.p[static_cast<std::size_t>(i)];
    for (Eigen::Index j = 0; j < d; ++j) {
      const int q = fc.q[static_cast<std::size_t>(j)];
      m(i, j) = std::exp(-std::lgamma(p + 1.0L) - std::lgamma(q + 1.0L)) / (p + q + 1);
    }
  }
  const long double det = m.partialPivLu().determinant();
  const long double log_fact = std::lgamma(static_cast<long double>(lambda.size()) + 1.0L);
  const long double by_det = std::exp(log_fact + std::log(det));

  long double log_hooks = 0.0L;
  for (int h : hook_lengths(lambda)) log_hooks += std::log(static_cast<long double>(h));
  const long double by_hook = std::exp(log_fact - log_hooks);

  if (std::abs(by_det - by_hook) > 1e-10L * by_hook) {
    throw PrecisionError("dimension routes disagree beyond 1e-10 for |lambda| = " + std::to_string(lambda.size()));
  }
  return static_cast<double>(by_hook);
}

}  // namespace zmeasure
