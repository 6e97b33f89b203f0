#pragma once

// Integer partitions (Young diagrams), Frobenius coordinates, dimensions and
// the embedding of diagrams into configurations on the half-integer lattice.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace zmeasure {

// A point k + 1/2 of the half-integer lattice, stored as the odd integer
// 2k + 1. The positive point k + 1/2 and the negative point -(k + 1/2) both
// map to lattice index k.
class HalfInteger {
 public:
  enum class Sign { Plus, Minus };

  constexpr HalfInteger() = default;
  static HalfInteger from_twice(int twice);
  static constexpr HalfInteger at(Sign sign, int index) {
    HalfInteger h;
    h.twice_ = sign == Sign::Plus ? 2 * index + 1 : -(2 * index + 1);
    return h;
  }

  constexpr int twice() const { return twice_; }
  constexpr Sign sign() const { return twice_ > 0 ? Sign::Plus : Sign::Minus; }
  constexpr int index() const { return (twice_ > 0 ? twice_ - 1 : -twice_ - 1) / 2; }
  constexpr double value() const { return 0.5 * twice_; }
  constexpr HalfInteger operator-() const {
    HalfInteger h;
    h.twice_ = -twice_;
    return h;
  }

  // Exact fraction "k/2", e.g. "5/2" or "-1/2".
  std::string to_string() const;
  static HalfInteger parse(const std::string& text);

  constexpr auto operator<=>(const HalfInteger&) const = default;

 private:
  int twice_ = 1;
};

using Sign = HalfInteger::Sign;

struct FrobeniusCoordinates {
  std::vector<int> p;  // arm lengths, strictly decreasing
  std::vector<int> q;  // leg lengths, strictly decreasing
  bool operator==(const FrobeniusCoordinates&) const = default;
};

class YoungDiagram {
 public:
  YoungDiagram() = default;
  // Throws DomainError unless parts are weakly decreasing and positive.
  explicit YoungDiagram(std::vector<int> parts);

  static YoungDiagram from_frobenius(const FrobeniusCoordinates& fc);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return n_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int diagonal() const { return static_cast<int>(frobenius_.p.size()); }
  const FrobeniusCoordinates& frobenius() const { return frobenius_; }
  bool empty() const { return parts_.empty(); }

  YoungDiagram transpose() const;
  std::vector<int> column_lengths() const;

  bool operator==(const YoungDiagram& other) const { return parts_ == other.parts_; }

 private:
  std::vector<int> parts_;
  int n_ = 0;
  FrobeniusCoordinates frobenius_;
};

// Finite subset of the half-integer lattice, kept sorted in descending order
// of value without duplicates.
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(std::vector<HalfInteger> points);

  const std::vector<HalfInteger>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  int count(Sign sign) const;
  bool balanced() const { return count(Sign::Plus) == count(Sign::Minus); }
  bool contains(const Configuration& subset) const;
  bool contains(HalfInteger x) const;

  bool operator==(const Configuration&) const = default;

 private:
  std::vector<HalfInteger> points_;
};

FrobeniusCoordinates frobenius_coordinates(const YoungDiagram& lambda);

Configuration to_configuration(const YoungDiagram& lambda);
// Inverse of to_configuration; throws DomainError for unbalanced input.
YoungDiagram to_diagram(const Configuration& x);

// Number of partitions of n via Euler's pentagonal recurrence. Exact up to
// n = 400 (fits in 64 bits well beyond that).
std::uint64_t partition_count(int n);

inline constexpr std::uint64_t kDefaultEnumerationCap = 20'000'000;

// All partitions of n in lexicographically descending order of part lists:
// (n), (n-1, 1), ..., (1, ..., 1). Throws ResourceError above the cap.
std::vector<YoungDiagram> enumerate_partitions(
    int n, std::uint64_t cap = kDefaultEnumerationCap);

// Number of standard tableaux. Exact for |lambda| <= 20 (both routes in
// integer/rational arithmetic), extended precision above; the determinant
// route and the hook-length route must agree or PrecisionError is thrown.
double dimension(const YoungDiagram& lambda);
std::uint64_t dimension_exact(const YoungDiagram& lambda);
std::uint64_t dimension_hook_exact(const YoungDiagram& lambda);
std::uint64_t dimension_determinant_exact(const YoungDiagram& lambda);

// log det[1 / (p_i + q_j + 1)] through the Cauchy product form.
double log_cauchy_determinant(const FrobeniusCoordinates& fc);
// log(dim lambda / |lambda|!) = log det[1 / ((p_i + q_j + 1) p_i! q_j!)].
double log_dimension_ratio(const FrobeniusCoordinates& fc);

}  // namespace zmeasure
