#include <doctest.h>

#include <cmath>
#include <numbers>

#include "holocrit/counts.hpp"
#include "holocrit/rmt_mc.hpp"

using namespace holocrit;

namespace {

MatrixSample<double> fixed_sample(Eigen::MatrixXcd H, std::complex<double> x) {
  MatrixSample<double> s;
  s.H = std::move(H);
  s.x = x;
  return s;
}

}  // namespace

TEST_CASE("classification examples") {
  Eigen::MatrixXcd one(1, 1);
  one(0, 0) = 1.0;
  auto c = classify(fixed_sample(one, 0.0));
  CHECK(c.index == 0);
  CHECK(c.absdet == doctest::Approx(2.0));
  CHECK_FALSE(c.degenerate);

  c = classify(fixed_sample(Eigen::MatrixXcd::Zero(3, 3), {1.0, 1.0}));
  CHECK(c.index == 3);
  CHECK(c.absdet == doctest::Approx(8.0));

  c = classify(fixed_sample(Eigen::MatrixXcd::Identity(2, 2), 0.0));
  CHECK(c.index == 0);
  CHECK(c.absdet == doctest::Approx(4.0));

  CHECK(classify(fixed_sample(Eigen::MatrixXcd::Zero(2, 2), 0.0)).degenerate);
  // 2|h|^2 == |x|^2 puts an eigenvalue on zero
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(2, 2);
  h(0, 0) = 1.0;
  h(1, 1) = 2.0;
  CHECK(classify(fixed_sample(h, {1.0, 1.0})).degenerate);
}

TEST_CASE("samples are complex symmetric") {
  auto rng = stream_engine(1, 0);
  for (int i = 0; i < 100; ++i) {
    const auto s = sample_matrix<double>(4, rng);
    CHECK((s.H - s.H.transpose()).norm() == 0.0);
  }
}

TEST_CASE("sample second moments") {
  auto rng = stream_engine(2, 0);
  const int n = 100000;
  double off = 0, off_sq = 0, diag = 0, xs = 0;
  for (int i = 0; i < n; ++i) {
    const auto s = sample_matrix<double>(2, rng);
    const double v = std::norm(s.H(0, 1));
    off += v;
    off_sq += v * v;
    diag += std::norm(s.H(0, 0));
    xs += std::norm(s.x);
  }
  const double mean = off / n;
  const double sigma = std::sqrt((off_sq / n - mean * mean) / n);
  CHECK(std::abs(mean - 0.5) <= 3 * sigma);
  CHECK(diag / n == doctest::Approx(1.0).epsilon(0.02));
  CHECK(xs / n == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("eigenvalues agree with trace and LU determinant") {
  auto rng = stream_engine(3, 0);
  for (int m = 1; m <= 4; ++m)
    for (int i = 0; i < 50; ++i) {
      const auto s = sample_matrix<double>(m, rng);
      const Eigen::MatrixXcd a = index_form(s);
      const Eigen::VectorXd eig = index_form_eigenvalues(s);
      const double trace = a.trace().real();
      CHECK(std::abs(eig.sum() - trace) <= 1e-9 * std::max(1.0, eig.cwiseAbs().sum()));
      const double det = Eigen::PartialPivLU<Eigen::MatrixXcd>(a).determinant().real();
      CHECK(eig.prod() == doctest::Approx(det).epsilon(1e-6));
    }
}

TEST_CASE("histogram partitions the samples") {
  const IndexHistogram h = sample_histogram(3, 20000, 11);
  std::int64_t binned = 0;
  for (const auto& bin : h.per_index) binned += bin.count;
  CHECK(h.samples == 20000);
  CHECK(binned + h.excluded == h.samples);
  CHECK(binned == h.used());
}

TEST_CASE("histogram merge") {
  IndexHistogram a(2), b(2);
  a.add(Classification{1, 2.0, false});
  b.add(Classification{1, 3.0, false});
  b.add(Classification{0, 0.0, true});
  a.merge(b);
  CHECK(a.samples == 3);
  CHECK(a.excluded == 1);
  CHECK(a.per_index[1].count == 2);
  CHECK(a.per_index[1].sum_absdet == 5.0);
  CHECK(a.per_index[1].sum_sq == 13.0);
  CHECK_THROWS_AS(a.merge(IndexHistogram(3)), std::domain_error);
}

TEST_CASE("estimates are reproducible and independent of the worker count") {
  const auto a = estimate_b0q(2, 3, 50000, 99, 1);
  const auto b = estimate_b0q(2, 3, 50000, 99, 1);
  const auto c = estimate_b0q(2, 3, 50000, 99, 4);
  CHECK(a.estimate == b.estimate);
  CHECK(a.std_error == b.std_error);
  CHECK(a.estimate == c.estimate);
  CHECK(a.std_error == c.std_error);
  CHECK(estimate_b0q(2, 3, 50000, 100, 1).estimate != a.estimate);
}

TEST_CASE("estimator domain") {
  CHECK_THROWS_AS(estimate_b0q(0, 0, 10000, 1), std::domain_error);
  CHECK_THROWS_AS(estimate_b0q(2, 1, 10000, 1), std::domain_error);
  CHECK_THROWS_AS(estimate_b0q(2, 5, 10000, 1), std::domain_error);
  CHECK_THROWS_AS(estimate_b0q(1, 1, 999, 1), std::domain_error);
}

TEST_CASE("estimator constant") {
  CHECK(b0q_constant(1) == doctest::Approx(1.0 / std::numbers::pi));
  CHECK(b0q_constant(3) == doctest::Approx(std::pow(std::numbers::pi, -3)));
}

TEST_CASE("leading estimates sum to the exact total") {
  for (int m = 1; m <= 2; ++m) {
    const IndexHistogram h = sample_histogram(m, 200000, 5, 2);
    double sum = 0, sum_sq = 0;
    for (const auto& bin : h.per_index) {
      sum += bin.sum_absdet;
      sum_sq += bin.sum_sq;
    }
    const double n = double(h.used());
    const double mean = sum / n;
    const double scale = b0q_constant(m) * std::pow(std::numbers::pi, m) / std::tgamma(m + 1.0);
    const double sigma = scale * std::sqrt((sum_sq / n - mean * mean) / n);
    double by_index = 0;
    for (int q = m; q <= 2 * m; ++q) by_index += estimate_from_histogram(h, q, 5).leading_estimate();
    CHECK(by_index == doctest::Approx(scale * mean).epsilon(1e-12));
    CAPTURE(m);
    CHECK(std::abs(scale * mean - leading_total(m).to_double()) <= 3 * sigma);
  }
}

TEST_CASE("m = 1 estimates match 4/3 and 1/3") {
  const auto q1 = estimate_b0q(1, 1, 200000, 20240611, 2);
  const auto q2 = estimate_b0q(1, 2, 200000, 20240611, 2);
  CHECK(std::abs(q1.leading_estimate() - 4.0 / 3.0) <= 3 * q1.leading_stderr());
  CHECK(std::abs(q2.leading_estimate() - 1.0 / 3.0) <= 3 * q2.leading_stderr());
  CHECK(q1.excluded == 0);
}
