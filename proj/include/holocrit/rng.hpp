#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace holocrit {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Independent engine for stream `stream` of a run seeded with `seed`.
inline std::mt19937_64 stream_engine(std::uint64_t seed, std::uint64_t stream) {
  return std::mt19937_64(splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632be59bd9b4e019ULL)));
}

/// Standard complex Gaussian: E|z|^2 = 1, real and imaginary parts N(0, 1/2).
template <typename Scalar, typename Rng>
std::complex<Scalar> complex_gaussian(Rng& rng) {
  std::normal_distribution<Scalar> normal(Scalar(0), Scalar(0.70710678118654752440));
  const Scalar re = normal(rng);
  const Scalar im = normal(rng);
  return {re, im};
}

}  // namespace holocrit
