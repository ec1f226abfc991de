#include "holocrit/cp1_sim.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "holocrit/parallel.hpp"

namespace holocrit {

namespace {

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Working polynomials of one chart for a normalized section.
struct ChartPolys {
  int N = 1;
  Eigen::VectorXcd f, df, d2f, q, dq;  // q = N f - z f'

  explicit ChartPolys(const Section& s) : N(s.degree), f(s.frame_coeffs()) {
    df = poly_derivative<double>(f);
    d2f = poly_derivative<double>(df);
    q.resize(N + 1);
    for (int k = 0; k <= N; ++k) q(k) = double(N - k) * f(k);
    q = q.head(std::max(N, 1)).eval();  // the z^N coefficient always cancels
    dq = poly_derivative<double>(q);
  }

  // A(z, conj z) = f'(z) - conj(z) q(z)
  Complex residual(Complex z) const {
    return poly_eval<double>(df, z) - std::conj(z) * poly_eval<double>(q, z);
  }
};

// B(z, w) has w-degree <= N-1, so Q^(N-1) B(z, P/Q) is a polynomial:
//   rho(z) = sum_k b_k(z) P^k Q^(N-1-k),  b_k = (k+1) gbar_{k+1} + (k-N) gbar_k z.
template <typename Scalar>
CPoly<Scalar> reduced_eliminant(const Eigen::VectorXcd& frame) {
  const int N = static_cast<int>(frame.size()) - 1;
  const CPoly<Scalar> f = frame.cast<std::complex<Scalar>>();
  const CPoly<Scalar> p = poly_derivative<Scalar>(f);
  CPoly<Scalar> q(std::max(N, 1));
  for (int k = 0; k < q.size(); ++k) q(k) = Scalar(N - k) * f(k);
  std::vector<CPoly<Scalar>> p_pow{CPoly<Scalar>::Ones(1)}, q_pow{CPoly<Scalar>::Ones(1)};
  for (int k = 1; k < N; ++k) {
    p_pow.push_back(poly_mul<Scalar>(p_pow.back(), p));
    q_pow.push_back(poly_mul<Scalar>(q_pow.back(), q));
  }
  CPoly<Scalar> rho = CPoly<Scalar>::Zero(1);
  for (int k = 0; k < N; ++k) {
    CPoly<Scalar> b(2);
    b(0) = Scalar(k + 1) * std::conj(f(k + 1));
    b(1) = Scalar(k - N) * std::conj(f(k));
    rho = poly_add<Scalar>(rho, poly_mul<Scalar>(b, poly_mul<Scalar>(p_pow[static_cast<std::size_t>(k)],
                                                                     q_pow[static_cast<std::size_t>(N - 1 - k)])));
  }
  return rho;
}

struct ChartSolve {
  std::vector<CriticalPointRecord> points;
  bool solver_ok = true;
  bool degenerate = false;
  bool marginal = false;
};

// Damped Newton on the real 2x2 system Re/Im F(z) = 0 with
// F = f' - conj(z) q. In Wirtinger form dF = F_z dz + F_zbar conj(dz).
bool refine(const ChartPolys& cp, Complex& z, double tol, int max_steps) {
  Complex F = cp.residual(z);
  for (int step = 0; step < max_steps; ++step) {
    if (std::abs(F) <= tol * 1e-4) return true;
    const Complex a = poly_eval<double>(cp.d2f, z) - std::conj(z) * poly_eval<double>(cp.dq, z);
    const Complex b = -poly_eval<double>(cp.q, z);
    const double det = std::norm(a) - std::norm(b);
    if (det == 0.0) break;
    // solves a d + b conj(d) = -F
    const Complex delta = (-F * std::conj(a) + b * std::conj(F)) / det;
    double damping = 1.0;
    Complex trial = z + delta;
    Complex trial_F = cp.residual(trial);
    for (int halving = 0; halving < 20 && std::abs(trial_F) >= std::abs(F); ++halving) {
      damping *= 0.5;
      trial = z + damping * delta;
      trial_F = cp.residual(trial);
    }
    if (std::abs(trial_F) >= std::abs(F)) break;
    const bool tiny_step = std::abs(damping * delta) < 1e-15 * (1.0 + std::abs(z));
    z = trial;
    F = trial_F;
    if (tiny_step) break;
  }
  return std::abs(F) < tol;
}

using Extended = long double;

// Newton polishing of a root of the eliminant; keeps the better point.
std::complex<Extended> polish_root(const CPoly<Extended>& rho, const CPoly<Extended>& drho,
                                   std::complex<Extended> z) {
  auto value = poly_eval<Extended>(rho, z);
  for (int step = 0; step < 4; ++step) {
    const auto slope = poly_eval<Extended>(drho, z);
    if (slope == std::complex<Extended>(0)) break;
    const auto next = z - value / slope;
    const auto next_value = poly_eval<Extended>(rho, next);
    if (!(std::abs(next_value) < std::abs(value))) break;
    z = next;
    value = next_value;
  }
  return z;
}

ChartSolve solve_chart(const Section& normalized, Chart chart, const SolverOptions& opt) {
  ChartSolve out;
  const ChartPolys cp(normalized);
  const double radius = 1.0 + opt.chart_overlap;

  // A section c z^N has q == 0: no critical points away from infinity.
  if (cp.q.cwiseAbs().maxCoeff() <= 1e-14 * cp.f.cwiseAbs().maxCoeff()) return out;

  const CPoly<Extended> rho = poly_trim<Extended>(reduced_eliminant<Extended>(cp.f), Extended(1e-16));
  if (rho.size() == 1) {
    out.solver_ok = false;  // eliminant vanished identically
    return out;
  }
  const CPoly<Extended> drho = poly_derivative<Extended>(rho);
  const CPoly<Extended> roots = companion_roots<Extended>(rho);

  const double filter = std::sqrt(opt.tol);
  for (Eigen::Index i = 0; i < roots.size(); ++i) {
    const std::complex<Extended> root = roots(i);
    if (!std::isfinite(root.real()) || !std::isfinite(root.imag())) continue;
    if (std::abs(root) > 2.0 * radius) continue;
    Complex z(polish_root(rho, drho, root));
    if (std::abs(z) > radius) continue;
    const Complex qz = poly_eval<double>(cp.q, z);
    const Complex fz = poly_eval<double>(cp.f, z);
    if (std::abs(fz) < opt.degeneracy) {
      out.degenerate = true;
      continue;
    }
    // w(z) = f'/q must match conj(z) for a real critical point
    if (std::abs(poly_eval<double>(cp.df, z) - std::conj(z) * qz) >= filter * std::abs(qz)) continue;
    if (!refine(cp, z, opt.tol, opt.max_newton)) {
      out.solver_ok = false;
      continue;
    }
    if (std::abs(z) > radius) continue;
    if (std::abs(poly_eval<double>(cp.f, z)) < opt.degeneracy) {
      out.degenerate = true;
      continue;
    }
    CriticalPointRecord rec;
    rec.z = z;
    rec.chart = chart;
    rec.residual = std::abs(cp.residual(z));
    const bool duplicate = std::any_of(out.points.begin(), out.points.end(), [&](const auto& p) {
      return chordal_distance(p, rec) < opt.dedupe;
    });
    if (duplicate) continue;
    try {
      const HessianInfo h = morse_index(normalized, z, opt.marginal);
      rec.morse_index = h.index;
      rec.hessian_eigs = h.eigs;
    } catch (const MarginalIndex&) {
      out.marginal = true;
      continue;
    }
    out.points.push_back(rec);
  }
  return out;
}

Chart flip(Chart c) { return c == Chart::z ? Chart::zeta : Chart::z; }

}  // namespace

Section::Section(int n, Eigen::VectorXcd c) : degree(n), coeffs(std::move(c)) {
  if (degree < 1) throw DomainError("section degree must be >= 1");
  if (coeffs.size() != degree + 1) throw DomainError("section needs N+1 coefficients");
  for (Eigen::Index j = 0; j < coeffs.size(); ++j)
    if (!std::isfinite(coeffs(j).real()) || !std::isfinite(coeffs(j).imag()))
      throw DomainError("section coefficients must be finite");
}

Eigen::VectorXcd Section::frame_coeffs() const {
  Eigen::VectorXcd a(degree + 1);
  for (int j = 0; j <= degree; ++j) a(j) = coeffs(j) * std::sqrt(binomial(degree, j));
  return a;
}

Section Section::other_chart() const {
  return Section(degree, coeffs.reverse().eval());
}

int BivariatePoly::degree_w() const {
  for (int k = static_cast<int>(by_w.size()) - 1; k >= 0; --k)
    if (by_w[static_cast<std::size_t>(k)].cwiseAbs().maxCoeff() > 0.0) return k;
  return 0;
}

Complex BivariatePoly::operator()(Complex z, Complex w) const {
  Complex acc(0);
  for (auto it = by_w.rbegin(); it != by_w.rend(); ++it) acc = acc * w + poly_eval<double>(*it, z);
  return acc;
}

CriticalSystem critical_system(const Section& section) {
  if (section.norm() == 0.0) throw DomainError("critical_system: zero section");
  const int N = section.degree;
  const Eigen::VectorXcd f = section.frame_coeffs();
  const Eigen::VectorXcd df = poly_derivative<double>(f);
  CriticalSystem sys;
  // A = f' + w (z f' - N f)
  sys.a.by_w.push_back(df);
  sys.a.by_w.push_back(poly_add<double>(poly_shift<double>(df), Eigen::VectorXcd(-double(N) * f)));
  // B: coefficient of w^k is (k+1) gbar_{k+1} + (k - N) gbar_k z
  for (int k = 0; k <= N; ++k) {
    Eigen::VectorXcd coeff = Eigen::VectorXcd::Zero(2);
    if (k + 1 <= N) coeff(0) = double(k + 1) * std::conj(f(k + 1));
    coeff(1) = double(k - N) * std::conj(f(k));
    sys.b.by_w.push_back(coeff);
  }
  return sys;
}

Eigen::VectorXcd eliminant(const Section& section) {
  if (section.norm() == 0.0) throw DomainError("eliminant: zero section");
  return reduced_eliminant<double>(section.frame_coeffs());
}

HessianInfo morse_index(const Section& section, Complex z, double marginal_tol) {
  const int N = section.degree;
  const Eigen::VectorXcd f = section.frame_coeffs();
  const Eigen::VectorXcd df = poly_derivative<double>(f);
  const Eigen::VectorXcd d2f = poly_derivative<double>(df);
  const Complex fz = poly_eval<double>(f, z);
  if (fz == Complex(0)) throw DomainError("morse_index: section vanishes at the point");
  const Complex ratio1 = poly_eval<double>(df, z) / fz;
  const Complex ratio2 = poly_eval<double>(d2f, z) / fz;
  const double conformal = 1.0 + std::norm(z);
  const double curvature = double(N) / (conformal * conformal);

  HessianInfo h;
  h.u_zzbar = -curvature;
  h.u_zz = ratio2 - ratio1 * ratio1 + double(N) * std::conj(z) * std::conj(z) / (conformal * conformal);
  const double mod = std::abs(h.u_zz);
  if (std::abs(mod - curvature) < marginal_tol)
    throw MarginalIndex("morse_index: |u_zz| within " + std::to_string(marginal_tol) +
                        " of the curvature term");
  h.eigs = {2.0 * (h.u_zzbar - mod), 2.0 * (h.u_zzbar + mod)};
  h.index = static_cast<int>(h.eigs[0] < 0.0) + static_cast<int>(h.eigs[1] < 0.0);
  return h;
}

Eigen::Vector3d CriticalPointRecord::sphere_point() const {
  // stereographic image of the affine coordinate; zeta = 1/z flips the pole
  const double r2 = std::norm(z);
  Eigen::Vector3d v(2.0 * z.real(), 2.0 * z.imag(), r2 - 1.0);
  v /= (1.0 + r2);
  if (chart == Chart::zeta) {
    v.y() = -v.y();  // 1/zeta = conj(zeta)/|zeta|^2
    v.z() = -v.z();
  }
  return v;
}

double chordal_distance(const CriticalPointRecord& a, const CriticalPointRecord& b) {
  return 0.5 * (a.sphere_point() - b.sphere_point()).norm();
}

int SolveResult::count(int q) const {
  return static_cast<int>(std::count_if(points.begin(), points.end(),
                                        [q](const auto& p) { return p.morse_index == q; }));
}

SolveResult find_critical_points(const Section& section, const SolverOptions& options) {
  if (section.norm() == 0.0) throw DomainError("find_critical_points: zero section");
  const Section first(section.degree, section.coeffs / section.norm());
  const Section primary = options.swap_charts ? first.other_chart() : first;
  const Section secondary = primary.other_chart();

  SolveResult result;
  const Chart primary_label = options.swap_charts ? Chart::zeta : Chart::z;
  for (const auto& [chart_section, label] :
       {std::pair{primary, primary_label}, std::pair{secondary, flip(primary_label)}}) {
    ChartSolve solved = solve_chart(chart_section, label, options);
    result.solver_ok = result.solver_ok && solved.solver_ok;
    result.degenerate = result.degenerate || solved.degenerate;
    result.marginal = result.marginal || solved.marginal;
    for (auto& rec : solved.points) {
      const bool duplicate = std::any_of(result.points.begin(), result.points.end(), [&](const auto& p) {
        return chordal_distance(p, rec) < options.dedupe;
      });
      if (duplicate) continue;
      rec.residual *= section.norm();
      result.points.push_back(rec);
    }
  }
  return result;
}

TrialStats run_trial(int N, std::uint64_t seed, std::int64_t trial, const SolverOptions& options) {
  auto rng = stream_engine(seed, static_cast<std::uint64_t>(trial));
  const Section section = sample_section(N, rng);
  const SolveResult solved = find_critical_points(section, options);
  TrialStats t;
  t.counts = {solved.count(1), solved.count(2)};
  t.signed_count = t.counts[0] - t.counts[1];
  t.solver_ok = solved.solver_ok;
  t.degenerate = solved.degenerate;
  t.marginal = solved.marginal;
  t.identity_ok = t.signed_count == N - 2;
  return t;
}

EnsembleStats run_trials(int N, std::int64_t trials, std::uint64_t seed, unsigned jobs,
                         const SolverOptions& options) {
  if (N < 2) throw DomainError("run_trials: N must be >= 2");
  if (trials < 1) throw DomainError("run_trials: need at least one trial");
  EnsembleStats e;
  e.N = N;
  e.trials = trials;
  e.seed = seed;
  e.per_trial.resize(static_cast<std::size_t>(trials));
  parallel_for(trials, jobs, [&](std::int64_t i) {
    e.per_trial[static_cast<std::size_t>(i)] = run_trial(N, seed, i, options);
  });

  double sum[2] = {0, 0}, sum_sq[2] = {0, 0};
  std::int64_t good = 0;
  for (const auto& t : e.per_trial) {
    if (t.degenerate) ++e.excluded;
    if (!t.identity_ok) ++e.identity_violations;
    if (!t.ok()) {
      ++e.failed;
      continue;
    }
    ++good;
    for (int k = 0; k < 2; ++k) {
      sum[k] += t.counts[static_cast<std::size_t>(k)];
      sum_sq[k] += double(t.counts[static_cast<std::size_t>(k)]) * t.counts[static_cast<std::size_t>(k)];
    }
  }
  e.failure_rate = double(e.failed) / double(trials);
  e.unreliable = e.failure_rate > kMaxFailureRate;
  if (good > 0) {
    const double n = double(good);
    double mean[2], err[2];
    for (int k = 0; k < 2; ++k) {
      mean[k] = sum[k] / n;
      const double var = good > 1 ? std::max(0.0, (sum_sq[k] - n * mean[k] * mean[k]) / (n - 1.0)) : 0.0;
      err[k] = std::sqrt(var / n);
    }
    e.mean_q1 = mean[0];
    e.mean_q2 = mean[1];
    e.stderr_q1 = err[0];
    e.stderr_q2 = err[1];
  }
  return e;
}

}  // namespace holocrit
