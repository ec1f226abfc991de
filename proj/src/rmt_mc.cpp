#include "holocrit/rmt_mc.hpp"

#include <numbers>
#include <string>

#include "holocrit/exactnum.hpp"
#include "holocrit/parallel.hpp"

namespace holocrit {

void IndexHistogram::add(const Classification& c) {
  ++samples;
  if (c.degenerate) {
    ++excluded;
    return;
  }
  auto& bin = per_index[static_cast<std::size_t>(c.index)];
  bin.sum_absdet += c.absdet;
  bin.sum_sq += c.absdet * c.absdet;
  ++bin.count;
}

void IndexHistogram::merge(const IndexHistogram& other) {
  if (other.m != m) throw DomainError("cannot merge histograms of different dimension");
  for (std::size_t k = 0; k < per_index.size(); ++k) {
    per_index[k].sum_absdet += other.per_index[k].sum_absdet;
    per_index[k].sum_sq += other.per_index[k].sum_sq;
    per_index[k].count += other.per_index[k].count;
  }
  samples += other.samples;
  excluded += other.excluded;
}

IndexHistogram sample_histogram(int m, std::int64_t samples, std::uint64_t seed, unsigned jobs) {
  if (m < 1) throw DomainError("sample_histogram: m must be >= 1");
  if (samples < 0) throw DomainError("sample_histogram: negative sample count");
  const std::int64_t blocks = (samples + kBlockSize - 1) / kBlockSize;
  std::vector<IndexHistogram> partial(static_cast<std::size_t>(blocks), IndexHistogram(m));
  parallel_for(blocks, jobs, [&](std::int64_t b) {
    auto rng = stream_engine(seed, static_cast<std::uint64_t>(b));
    const std::int64_t n = std::min(kBlockSize, samples - b * kBlockSize);
    auto& hist = partial[static_cast<std::size_t>(b)];
    for (std::int64_t i = 0; i < n; ++i) hist.add(classify(sample_matrix<double>(m, rng)));
  });
  IndexHistogram total(m);
  for (const auto& h : partial) total.merge(h);
  return total;
}

double b0q_constant(int m) {
  // dH is Lebesgue measure for the metric Tr HH^*, under which each
  // off-diagonal coordinate carries volume factor 2; the Gaussian mass is
  // then exactly pi^(d_m) and only pi^-m survives.
  return 1.0 / std::pow(std::numbers::pi, m);
}

B0qEstimate estimate_from_histogram(const IndexHistogram& hist, int q, std::uint64_t seed) {
  const int m = hist.m;
  if (q < m || q > 2 * m)
    throw DomainError("estimate_b0q: q=" + std::to_string(q) + " outside [m, 2m]");
  B0qEstimate e;
  e.m = m;
  e.q = q;
  e.samples = hist.samples;
  e.excluded = hist.excluded;
  e.seed = seed;
  const auto n = static_cast<double>(hist.used());
  if (n < 2) return e;
  const auto& bin = hist.per_index[static_cast<std::size_t>(q - m)];
  const double mean = bin.sum_absdet / n;
  const double var = std::max(0.0, (bin.sum_sq / n - mean * mean) * n / (n - 1.0));
  const double scale = b0q_constant(m);
  e.estimate = scale * mean;
  e.std_error = scale * std::sqrt(var / n);
  return e;
}

B0qEstimate estimate_b0q(int m, int q, std::int64_t samples, std::uint64_t seed, unsigned jobs) {
  if (m < 1) throw DomainError("estimate_b0q: m must be >= 1");
  if (q < m || q > 2 * m)
    throw DomainError("estimate_b0q: q=" + std::to_string(q) + " outside [m, 2m]");
  if (samples < kMinSamples)
    throw DomainError("estimate_b0q: need at least " + std::to_string(kMinSamples) + " samples");
  return estimate_from_histogram(sample_histogram(m, samples, seed, jobs), q, seed);
}

namespace {
double leading_scale(int m) {
  double f = std::pow(std::numbers::pi, m);
  for (int j = 2; j <= m; ++j) f /= j;
  return f;
}
}  // namespace

double B0qEstimate::leading_estimate() const { return leading_scale(m) * estimate; }
double B0qEstimate::leading_stderr() const { return leading_scale(m) * std_error; }

}  // namespace holocrit
