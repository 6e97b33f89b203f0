#pragma once

// Exact sampling from the mixed measure: the size n from the negative
// binomial weight by inverse CDF, then the diagram from M^(n) by inverse CDF
// over the enumeration of Y_n.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "zmeasure/params.hpp"
#include "zmeasure/partition.hpp"

namespace zmeasure {

using Rng = std::mt19937_64;
inline constexpr const char* kRngName = "mt19937_64";
inline constexpr int kDefaultSizeCap = 30;
inline constexpr int kSampleStreams = 16;

// Uniform in [0, 1) from the top 53 bits; identical on every platform.
double uniform01(Rng& rng);

// Draws n with probability pi_{t,xi}(n).
int sample_size(const GrandParams& gp, Rng& rng);

class DiagramSampler {
 public:
  // CDFs of M^(n) for n <= size_cap are built up front.
  explicit DiagramSampler(const ZParams& zp, int size_cap = kDefaultSizeCap);

  // Throws ResourceError when n exceeds the cap.
  const YoungDiagram& draw(int n, Rng& rng) const;
  int size_cap() const { return size_cap_; }

 private:
  struct Table {
    std::vector<YoungDiagram> diagrams;
    std::vector<double> cdf;
  };
  int size_cap_;
  std::vector<Table> tables_;
};

YoungDiagram sample_diagram(int n, const ZParams& zp, Rng& rng);

struct SampleBatch {
  std::uint64_t seed = 0;
  GrandParams gp;
  std::vector<YoungDiagram> draws;
  std::string rng = kRngName;
  int streams = kSampleStreams;

  std::size_t count() const { return draws.size(); }
};

// Draw i belongs to stream floor(i * streams / count); stream s is seeded
// with seed_seq{seed, s}. The result does not depend on the thread count.
SampleBatch draw_batch(const GrandParams& gp, std::size_t count, std::uint64_t seed, int size_cap = kDefaultSizeCap);
SampleBatch draw_batch_serial(const GrandParams& gp, std::size_t count, std::uint64_t seed,
                              int size_cap = kDefaultSizeCap);

struct Estimate {
  double estimate = 0.0;
  double std_err = 0.0;
};

// Fraction of draws whose configuration contains x, with the binomial
// standard error.
Estimate empirical_correlation(const SampleBatch& batch, const Configuration& x);

}  // namespace zmeasure
