#include "zmeasure/sample.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zmeasure/errors.hpp"
#include "zmeasure/measure.hpp"

namespace zmeasure {

double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

int sample_size(const GrandParams& gp, Rng& rng) {
  const double u = uniform01(rng);
  const double t = gp.t();
  const double xi = gp.xi();
  double p = std::exp(t * std::log1p(-xi));
  double cum = p;
  int n = 0;
  while (cum <= u) {
    p *= xi * (t + n) / (n + 1.0);
    ++n;
    const double next = cum + p;
    // Rounding can leave the total a few ulps short of 1.
    if (next == cum) break;
    cum = next;
  }
  return n;
}

DiagramSampler::DiagramSampler(const ZParams& zp, int size_cap) : size_cap_(size_cap) {
  if (size_cap < 0) throw DomainError("sampler size cap must be nonnegative");
  tables_.resize(static_cast<std::size_t>(size_cap) + 1);
  for (int n = 0; n <= size_cap; ++n) {
    auto& tab = tables_[static_cast<std::size_t>(n)];
    tab.diagrams = enumerate_partitions(n);
    const auto probs = z_measures(tab.diagrams, zp);
    tab.cdf.resize(probs.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
      acc += probs[i];
      tab.cdf[i] = acc;
    }
  }
}

const YoungDiagram& DiagramSampler::draw(int n, Rng& rng) const {
  if (n < 0 || n > size_cap_) {
    throw ResourceError("sampled size " + std::to_string(n) + " exceeds the enumeration cap " +
                        std::to_string(size_cap_));
  }
  const auto& tab = tables_[static_cast<std::size_t>(n)];
  const double u = uniform01(rng) * tab.cdf.back();
  const auto it = std::upper_bound(tab.cdf.begin(), tab.cdf.end(), u);
  const auto idx = std::min<std::size_t>(static_cast<std::size_t>(it - tab.cdf.begin()), tab.cdf.size() - 1);
  return tab.diagrams[idx];
}

YoungDiagram sample_diagram(int n, const ZParams& zp, Rng& rng) {
  if (n > kDefaultSizeCap) {
    throw ResourceError("sample_diagram: n = " + std::to_string(n) + " exceeds the cap " +
                        std::to_string(kDefaultSizeCap));
  }
  const auto diagrams = enumerate_partitions(n);
  const auto probs = z_measures(diagrams, zp);
  double total = 0.0;
  for (double p : probs) total += p;
  double u = uniform01(rng) * total;
  for (std::size_t i = 0; i < diagrams.size(); ++i) {
    if (u < probs[i]) return diagrams[i];
    u -= probs[i];
  }
  return diagrams.back();
}

namespace {

template <bool Parallel>
SampleBatch batch(const GrandParams& gp, std::size_t count, std::uint64_t seed, int size_cap) {
  const DiagramSampler sampler(gp.zp(), size_cap);
  SampleBatch out{seed, gp, std::vector<YoungDiagram>(count)};
  const auto streams = static_cast<std::size_t>(kSampleStreams);
#pragma omp parallel for schedule(static, 1) if (Parallel)
  for (std::size_t s = 0; s < streams; ++s) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffu), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(s)};
    Rng rng(seq);
    const std::size_t lo = s * count / streams;
    const std::size_t hi = (s + 1) * count / streams;
    for (std::size_t i = lo; i < hi; ++i) {
      const int n = sample_size(gp, rng);
      out.draws[i] = sampler.draw(n, rng);
    }
  }
  return out;
}

}  // namespace

SampleBatch draw_batch(const GrandParams& gp, std::size_t count, std::uint64_t seed, int size_cap) {
  return batch<true>(gp, count, seed, size_cap);
}

SampleBatch draw_batch_serial(const GrandParams& gp, std::size_t count, std::uint64_t seed, int size_cap) {
  return batch<false>(gp, count, seed, size_cap);
}

Estimate empirical_correlation(const SampleBatch& batch, const Configuration& x) {
  if (batch.draws.empty()) throw DomainError("empirical_correlation: empty batch");
  if (x.empty()) return {1.0, 0.0};
  std::size_t hits = 0;
  for (const auto& d : batch.draws) {
    if (to_configuration(d).contains(x)) ++hits;
  }
  const double n = static_cast<double>(batch.draws.size());
  const double p = static_cast<double>(hits) / n;
  return {p, std::sqrt(p * (1.0 - p) / n)};
}

}  // namespace zmeasure
