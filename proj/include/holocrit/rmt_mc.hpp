#pragma once

// Monte Carlo estimation of the universal constants b_{0q} from the
// random-matrix integral over Sym(m, C) x C,
//
//   b_{0q} ~ int_{index(2HH^* - |x|^2 I) = q - m} |det(2HH^* - |x|^2 I)| e^{-Tr HH^* - |x|^2},
//
// by i.i.d. sampling of (H, x) under that Gaussian weight.

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "holocrit/rng.hpp"

namespace holocrit {

template <typename Scalar = double>
struct MatrixSample {
  using Complex = std::complex<Scalar>;
  using Matrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;

  Matrix H;  // complex symmetric, H == H^T
  Complex x;
};

/// Draws (H, x) with E|H_jj|^2 = 1, E|H_jk|^2 = 1/2 (j != k), E|x|^2 = 1.
template <typename Scalar = double, typename Rng>
MatrixSample<Scalar> sample_matrix(int m, Rng& rng) {
  using Complex = std::complex<Scalar>;
  MatrixSample<Scalar> s;
  s.H.resize(m, m);
  const Scalar off_diag = Scalar(1) / std::sqrt(Scalar(2));
  for (int j = 0; j < m; ++j) {
    s.H(j, j) = complex_gaussian<Scalar>(rng);
    for (int k = j + 1; k < m; ++k) {
      const Complex h = complex_gaussian<Scalar>(rng) * off_diag;
      s.H(j, k) = h;
      s.H(k, j) = h;
    }
  }
  s.x = complex_gaussian<Scalar>(rng);
  return s;
}

/// The Hermitian matrix 2 H H^* - |x|^2 I.
template <typename Scalar>
typename MatrixSample<Scalar>::Matrix index_form(const MatrixSample<Scalar>& s) {
  using Matrix = typename MatrixSample<Scalar>::Matrix;
  Matrix a = Scalar(2) * s.H * s.H.adjoint();
  a.diagonal().array() -= std::norm(s.x);
  return a;
}

struct Classification {
  int index = 0;          // number of negative eigenvalues
  double absdet = 0.0;    // |prod of eigenvalues|
  bool degenerate = false;
};

inline constexpr double kDefaultDegeneracy = 1e-12;

/// Eigenvalues of 2HH^* - |x|^2 I, ascending.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> index_form_eigenvalues(const MatrixSample<Scalar>& s) {
  using Matrix = typename MatrixSample<Scalar>::Matrix;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(index_form(s), Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

/// Samples with min|eig| < degeneracy * max|eig| are flagged degenerate.
template <typename Scalar>
Classification classify(const MatrixSample<Scalar>& s, Scalar degeneracy = Scalar(kDefaultDegeneracy)) {
  const auto eig = index_form_eigenvalues(s);
  Classification c;
  const Scalar max_abs = eig.cwiseAbs().maxCoeff();
  const Scalar min_abs = eig.cwiseAbs().minCoeff();
  if (!(max_abs > Scalar(0)) || min_abs < degeneracy * max_abs) {
    c.degenerate = true;
    return c;
  }
  Scalar det = Scalar(1);
  for (Eigen::Index i = 0; i < eig.size(); ++i) {
    if (eig(i) < Scalar(0)) ++c.index;
    det *= eig(i);
  }
  c.absdet = static_cast<double>(std::abs(det));
  return c;
}

struct IndexBin {
  double sum_absdet = 0.0;
  double sum_sq = 0.0;
  std::int64_t count = 0;
};

/// Per-index accumulators of |det| over a batch of samples.
struct IndexHistogram {
  int m = 1;
  std::vector<IndexBin> per_index;  // k = 0..m
  std::int64_t samples = 0;         // drawn, including excluded
  std::int64_t excluded = 0;

  explicit IndexHistogram(int dim = 1) : m(dim), per_index(static_cast<std::size_t>(dim) + 1) {}

  void add(const Classification& c);
  void merge(const IndexHistogram& other);
  std::int64_t used() const { return samples - excluded; }
};

/// Runs `samples` draws in fixed blocks, each with its own RNG stream from
/// (seed, block); blocks are merged in order so the result does not depend
/// on `jobs`.
IndexHistogram sample_histogram(int m, std::int64_t samples, std::uint64_t seed, unsigned jobs = 1);

struct B0qEstimate {
  int m = 1;
  int q = 1;
  std::int64_t samples = 0;
  double estimate = 0.0;
  double std_error = 0.0;
  std::int64_t excluded = 0;
  std::uint64_t seed = 0;

  /// pi^m / m! * b_{0q}, the estimate of n_q(m), and its standard error.
  double leading_estimate() const;
  double leading_stderr() const;
};

/// pi^-m, so that b_{0q} = pi^-m E[|det| 1{index = q - m}].
double b0q_constant(int m);

B0qEstimate estimate_from_histogram(const IndexHistogram& hist, int q, std::uint64_t seed);
B0qEstimate estimate_b0q(int m, int q, std::int64_t samples, std::uint64_t seed, unsigned jobs = 1);

inline constexpr std::int64_t kMinSamples = 1000;
inline constexpr std::int64_t kBlockSize = 8192;

}  // namespace holocrit
