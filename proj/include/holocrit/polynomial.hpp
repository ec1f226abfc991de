#pragma once

// Dense univariate polynomials with complex coefficients stored low-to-high
// in Eigen column vectors.

#include <algorithm>
#include <complex>

#include <Eigen/Dense>

namespace holocrit {

template <typename Scalar>
using CPoly = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;

template <typename Scalar>
std::complex<Scalar> poly_eval(const CPoly<Scalar>& p, std::complex<Scalar> z) {
  std::complex<Scalar> acc(0);
  for (Eigen::Index k = p.size() - 1; k >= 0; --k) acc = acc * z + p(k);
  return acc;
}

template <typename Scalar>
CPoly<Scalar> poly_derivative(const CPoly<Scalar>& p) {
  if (p.size() <= 1) return CPoly<Scalar>::Zero(1);
  CPoly<Scalar> d(p.size() - 1);
  for (Eigen::Index k = 1; k < p.size(); ++k) d(k - 1) = Scalar(k) * p(k);
  return d;
}

template <typename Scalar>
CPoly<Scalar> poly_mul(const CPoly<Scalar>& a, const CPoly<Scalar>& b) {
  CPoly<Scalar> out = CPoly<Scalar>::Zero(a.size() + b.size() - 1);
  for (Eigen::Index i = 0; i < a.size(); ++i)
    out.segment(i, b.size()) += a(i) * b;
  return out;
}

/// a + b with the shorter operand zero-padded.
template <typename Scalar>
CPoly<Scalar> poly_add(const CPoly<Scalar>& a, const CPoly<Scalar>& b) {
  CPoly<Scalar> out = CPoly<Scalar>::Zero(std::max(a.size(), b.size()));
  out.head(a.size()) += a;
  out.head(b.size()) += b;
  return out;
}

/// Multiplication by z.
template <typename Scalar>
CPoly<Scalar> poly_shift(const CPoly<Scalar>& p) {
  CPoly<Scalar> out(p.size() + 1);
  out(0) = 0;
  out.tail(p.size()) = p;
  return out;
}

/// Drops leading coefficients with |c| <= rel * max|c|. Returns a length-1
/// zero polynomial when everything is dropped.
template <typename Scalar>
CPoly<Scalar> poly_trim(const CPoly<Scalar>& p, Scalar rel) {
  const Scalar scale = p.size() ? p.cwiseAbs().maxCoeff() : Scalar(0);
  Eigen::Index n = p.size();
  while (n > 0 && std::abs(p(n - 1)) <= rel * scale) --n;
  if (n == 0) return CPoly<Scalar>::Zero(1);
  return p.head(n);
}

/// All roots, as eigenvalues of the companion matrix of the monic rescaling.
template <typename Scalar>
CPoly<Scalar> companion_roots(const CPoly<Scalar>& p) {
  using Complex = std::complex<Scalar>;
  using Matrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;
  const Eigen::Index degree = p.size() - 1;
  if (degree < 1) return CPoly<Scalar>(0);
  if (degree == 1) {
    CPoly<Scalar> r(1);
    r(0) = -p(0) / p(1);
    return r;
  }
  Matrix companion = Matrix::Zero(degree, degree);
  companion.diagonal(-1).setOnes();
  companion.col(degree - 1) = -p.head(degree) / p(degree);
  Eigen::ComplexEigenSolver<Matrix> solver(companion, false);
  return solver.eigenvalues();
}

}  // namespace holocrit
