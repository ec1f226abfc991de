#pragma once

// Direct simulation of Gaussian random sections of O(N) -> CP^1.
//
// In the affine chart a section is f(z) = sum_j c_j sqrt(C(N,j)) z^j with
// i.i.d. standard complex Gaussian c_j, and the Fubini-Study Chern
// connection makes its critical points the solutions of
//
//   A(z, conj z) = (1 + z conj z) f'(z) - N conj(z) f(z) = 0.
//
// Treating w = conj z as an independent unknown, A is linear in w; solving
// for w and substituting into the conjugate equation B(z, w) = 0 leaves one
// univariate eliminant whose roots contain every critical point. Each
// candidate is then refined on the real system and classified by the Morse
// index of log|s|^2 = log|f|^2 - N log(1 + |z|^2).

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "holocrit/exactnum.hpp"
#include "holocrit/polynomial.hpp"
#include "holocrit/rng.hpp"

namespace holocrit {

using Complex = std::complex<double>;

struct Section {
  int degree = 1;            // N
  Eigen::VectorXcd coeffs;   // c_0 .. c_N

  Section() = default;
  Section(int n, Eigen::VectorXcd c);

  /// a_j = c_j sqrt(C(N, j)), the coefficients of f in the affine frame.
  Eigen::VectorXcd frame_coeffs() const;
  /// The same section in the chart zeta = 1/z: zeta^N f(1/zeta).
  Section other_chart() const;
  double norm() const { return coeffs.norm(); }
};

template <typename Rng>
Section sample_section(int N, Rng& rng) {
  if (N < 1) throw DomainError("sample_section: N must be >= 1");
  Eigen::VectorXcd c(N + 1);
  for (int j = 0; j <= N; ++j) c(j) = complex_gaussian<double>(rng);
  return Section(N, std::move(c));
}

/// Polynomial in (z, w) stored as coefficients of w^k, each a polynomial in z.
struct BivariatePoly {
  std::vector<Eigen::VectorXcd> by_w;

  int degree_w() const;
  Complex operator()(Complex z, Complex w) const;
};

struct CriticalSystem {
  BivariatePoly a;  // (1 + zw) f'(z) - N w f(z)
  BivariatePoly b;  // (1 + zw) g'(w) - N z g(w), g = conjugate-coefficient f
};

CriticalSystem critical_system(const Section& section);

/// Univariate eliminant Q^(N-1) B(z, P/Q) with P = f', Q = N f - z f',
/// of degree <= (N-1)^2 + 1. Every critical point is among its roots.
Eigen::VectorXcd eliminant(const Section& section);

enum class Chart : int { z = 0, zeta = 1 };

/// Raised when a critical point is too close to an index transition to
/// classify reliably.
class MarginalIndex : public DomainError {
 public:
  using DomainError::DomainError;
};

struct HessianInfo {
  int index = 0;
  std::array<double, 2> eigs{};  // ascending
  double u_zzbar = 0.0;
  Complex u_zz{};
};

/// Hessian of log|f|^2 - N log(1+|z|^2) at a critical point z of the chart.
HessianInfo morse_index(const Section& section, Complex z, double marginal_tol = 1e-8);

struct CriticalPointRecord {
  Complex z;                 // coordinate in `chart`
  Chart chart = Chart::z;
  int morse_index = 0;
  std::array<double, 2> hessian_eigs{};
  double residual = 0.0;     // |A(z, conj z)| in its chart, unnormalized section

  /// Point on the Riemann sphere as a unit vector in R^3.
  Eigen::Vector3d sphere_point() const;
};

double chordal_distance(const CriticalPointRecord& a, const CriticalPointRecord& b);

struct SolverOptions {
  double tol = 1e-8;             // Newton acceptance; sqrt(tol) for the conjugacy filter
  double dedupe = 1e-6;          // chordal distance
  double degeneracy = 1e-10;     // |f| relative to the coefficient norm
  double marginal = 1e-8;
  double chart_overlap = 1e-3;   // each chart keeps |coordinate| <= 1 + overlap
  int max_newton = 50;
  bool swap_charts = false;      // solve in zeta first
};

struct SolveResult {
  std::vector<CriticalPointRecord> points;
  bool solver_ok = true;     // false when a candidate failed to converge
  bool degenerate = false;   // a candidate sat on a zero of the section
  bool marginal = false;     // a point could not be classified

  int count(int q) const;
};

SolveResult find_critical_points(const Section& section, const SolverOptions& options = {});

struct TrialStats {
  std::array<int, 2> counts{};  // index 1, index 2
  int signed_count = 0;         // counts[1] - counts[2] in index order q = 1, 2
  bool solver_ok = true;
  bool degenerate = false;
  bool marginal = false;
  bool identity_ok = true;      // signed_count == N - 2

  bool ok() const { return solver_ok && !degenerate && !marginal && identity_ok; }
};

TrialStats run_trial(int N, std::uint64_t seed, std::int64_t trial, const SolverOptions& options = {});

struct EnsembleStats {
  int N = 2;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  double mean_q1 = 0.0;
  double stderr_q1 = 0.0;
  double mean_q2 = 0.0;
  double stderr_q2 = 0.0;
  double failure_rate = 0.0;
  std::int64_t excluded = 0;             // degenerate trials
  std::int64_t identity_violations = 0;
  std::int64_t failed = 0;
  bool unreliable = false;               // failure_rate above kMaxFailureRate
  std::vector<TrialStats> per_trial;
};

inline constexpr double kMaxFailureRate = 0.05;

EnsembleStats run_trials(int N, std::int64_t trials, std::uint64_t seed, unsigned jobs = 1,
                         const SolverOptions& options = {});

}  // namespace holocrit
