#include "holocrit/verify.hpp"

#include <cmath>
#include <sstream>

#include "holocrit/chamber.hpp"
#include "holocrit/counts.hpp"
#include "holocrit/report.hpp"
#include "holocrit/cp1_sim.hpp"
#include "holocrit/rmt_mc.hpp"
#include "holocrit/selberg.hpp"

namespace holocrit {

namespace {

// Collects the first counterexample of a sweep.
class Sweep {
 public:
  explicit Sweep(std::string name) : name_(std::move(name)) {}

  void expect(bool ok, const std::string& what) {
    ++cases_;
    if (!ok && failure_.empty()) failure_ = what;
  }

  CheckResult result() const {
    if (failure_.empty()) return {name_, true, std::to_string(cases_) + " cases"};
    return {name_, false, "first failure: " + failure_};
  }

 private:
  std::string name_;
  std::string failure_;
  int cases_ = 0;
};

std::string at(int m, int N) { return "m=" + std::to_string(m) + " N=" + std::to_string(N); }

Rational selberg_closed_form(int m) {
  // (m+1) prod_{j=1}^m 2^-j j!
  Rational v(m + 1);
  for (int j = 1; j <= m; ++j) v *= Rational(factorial(static_cast<unsigned long>(j))) / pow(Rational(2), j);
  return v;
}

CheckResult within_sigma(const std::string& name, double estimate, double err, double target) {
  std::ostringstream os;
  os << "estimate " << estimate << " +- " << err << " vs " << target;
  return {name, std::abs(estimate - target) <= 3.0 * err, os.str()};
}

}  // namespace

std::vector<CheckResult> exact_checks() {
  std::vector<CheckResult> out;

  Sweep closed("min-index closed form, m<=5, N<=20");
  for (int m = 1; m <= 5; ++m)
    for (int N = 2; N <= 20; ++N)
      closed.expect(cpm_exact_count(m, N, m) == closed_form_min_index(m, N), at(m, N));
  out.push_back(closed.result());

  Sweep signed_id("signed count identity, m<=4, N<=12");
  for (int m = 1; m <= 4; ++m)
    for (int N = 2; N <= 12; ++N) {
      Rational alt(0);
      for (int q = m; q <= 2 * m; ++q) alt += (q % 2 == 0) ? cpm_exact_count(m, N, q) : -cpm_exact_count(m, N, q);
      const Rational rhs = (m % 2 == 0) ? signed_count(m, N) : -signed_count(m, N);
      signed_id.expect(alt == rhs, at(m, N));
    }
  out.push_back(signed_id.result());

  Sweep degenerate("N=2 equidistribution, m<=5");
  for (int m = 1; m <= 5; ++m) {
    const auto r = count_report(m, 2);
    for (const auto& [q, v] : r.per_q) degenerate.expect(v == Rational(1), at(m, 2) + " q=" + std::to_string(q));
    degenerate.expect(r.total == Rational(m + 1), at(m, 2) + " total");
  }
  out.push_back(degenerate.result());

  Sweep chain("index monotonicity chain");
  for (int m = 1; m <= 4; ++m)
    for (int N : {3, 5, 10})
      for (int q = m; q < 2 * m; ++q) {
        const Rational lhs = cpm_exact_count(m, N, q + 1);
        const Rational rhs = index_ratio_bound(m, N, q) * cpm_exact_count(m, N, q);
        chain.expect(m == 1 ? lhs == rhs : lhs < rhs, at(m, N) + " q=" + std::to_string(q));
      }
  out.push_back(chain.result());

  Sweep sandwich("total count sandwich, N>2");
  for (int m = 1; m <= 4; ++m)
    for (int N = 3; N <= 12; ++N) {
      const Rational lo = closed_form_min_index(m, N);
      const Rational total = count_report(m, N).total;
      sandwich.expect(lo < total && total < Rational(m + 1) * lo, at(m, N));
    }
  out.push_back(sandwich.result());

  Sweep leading("leading coefficients and bounds");
  for (int m = 1; m <= 6; ++m)
    leading.expect(leading_coeff(m, m) == Rational(2 * (m + 1), m + 2), "n_m(m) m=" + std::to_string(m));
  leading.expect(leading_total(1) == Rational(5, 3), "n(1) = 5/3");
  for (int m = 2; m <= 5; ++m) {
    const Rational n = leading_total(m);
    leading.expect(Rational(2 * (m + 1), m + 2) < n && n < Rational(2 * m + 3, 3),
                   "bounds m=" + std::to_string(m));
    for (int q = m; q < 2 * m; ++q) {
      const Rational ratio(2 * m - q, 2 * m - q + 1);
      leading.expect(leading_coeff(m, q + 1) < ratio * ratio * leading_coeff(m, q),
                     "n_q chain m=" + std::to_string(m) + " q=" + std::to_string(q));
    }
  }
  out.push_back(leading.result());

  Sweep selberg("Selberg oracle equivalence, m<=6");
  for (int m = 1; m <= 6; ++m) {
    const Rational mfact(factorial(static_cast<unsigned long>(m)));
    const Rational chamber = mfact * chamber_integral({m, m, Rational(0)});
    const auto oracle = selberg_exp(m, Rational(2), Rational(1, 2));
    selberg.expect(oracle.is_exact() && pipower_to_rational(*oracle.exact) == chamber &&
                       chamber == mfact * selberg_closed_form(m),
                   "m=" + std::to_string(m));
  }
  out.push_back(selberg.result());

  Sweep p_indep("p-independence at c=0, m<=5");
  for (int m = 1; m <= 5; ++m) {
    const Rational base = chamber_integral({m, 0, Rational(0)});
    for (int p = 1; p <= m; ++p) p_indep.expect(chamber_integral({m, p, Rational(0)}) == base,
                                                "m=" + std::to_string(m) + " p=" + std::to_string(p));
  }
  out.push_back(p_indep.result());

  return out;
}

std::vector<CheckResult> monte_carlo_checks(unsigned jobs, std::uint64_t seed,
                                            std::int64_t matrix_samples, std::int64_t section_trials) {
  std::vector<CheckResult> out;
  for (int m : {1, 2}) {
    const auto hist = sample_histogram(m, matrix_samples, seed, jobs);
    for (int q = m; q <= 2 * m; ++q) {
      const auto e = estimate_from_histogram(hist, q, seed);
      out.push_back(within_sigma("b0q MC m=" + std::to_string(m) + " q=" + std::to_string(q),
                                 e.leading_estimate(), e.leading_stderr(), leading_coeff(m, q).to_double()));
    }
    const double rate = double(hist.excluded) / double(hist.samples);
    out.push_back({"b0q MC m=" + std::to_string(m) + " exclusion rate", rate < 1e-4,
                   "excluded " + std::to_string(hist.excluded) + " of " + std::to_string(hist.samples)});
  }
  for (int N : {2, 3, 5}) {
    const auto e = run_trials(N, section_trials, seed, jobs);
    const auto name = "CP1 simulation N=" + std::to_string(N);
    out.push_back(within_sigma(name + " q=1", e.mean_q1, e.stderr_q1, cpm_exact_count(1, N, 1).to_double()));
    out.push_back(within_sigma(name + " q=2", e.mean_q2, e.stderr_q2, cpm_exact_count(1, N, 2).to_double()));
    const double identity_rate = 1.0 - double(e.identity_violations) / double(e.trials);
    out.push_back({name + " signed identity", identity_rate >= 0.99 && !e.unreliable,
                   "identity holds in " + std::to_string(e.trials - e.identity_violations) + "/" +
                       std::to_string(e.trials) + " trials, failure rate " + std::to_string(e.failure_rate)});
  }
  return out;
}

std::vector<CheckResult> extended_checks(unsigned jobs, std::uint64_t seed, std::int64_t matrix_samples,
                                         std::int64_t section_trials) {
  std::vector<CheckResult> out;
  for (int N : {4, 6, 7, 8}) {
    const auto e = run_trials(N, section_trials, seed, jobs);
    const auto name = "CP1 simulation N=" + std::to_string(N);
    out.push_back(within_sigma(name + " q=1", e.mean_q1, e.stderr_q1, cpm_exact_count(1, N, 1).to_double()));
    out.push_back(within_sigma(name + " q=2", e.mean_q2, e.stderr_q2, cpm_exact_count(1, N, 2).to_double()));
    out.push_back({name + " failure rate", e.failure_rate < 0.01,
                   "failure rate " + std::to_string(e.failure_rate) + " (limit 0.01)"});
  }

  const auto replay = [&](unsigned workers) {
    std::string bytes;
    for (int m : {1, 2}) {
      const auto hist = sample_histogram(m, matrix_samples, seed, workers);
      for (int q = m; q <= 2 * m; ++q) bytes += to_json(estimate_from_histogram(hist, q, seed)).dump();
    }
    for (int N : {3, 5}) {
      const auto e = run_trials(N, section_trials, seed, workers);
      bytes += to_json(e).dump() + trials_csv(e);
    }
    return bytes;
  };
  const std::string first = replay(jobs);
  const bool same = first == replay(1);
  out.push_back({"deterministic replay", same,
                 same ? std::to_string(first.size()) + " report bytes identical with one worker"
                      : "reports differ between worker counts"});
  return out;
}

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  std::vector<CheckResult> out = exact_checks();
  if (options.level != VerifyLevel::exact) {
    auto mc = monte_carlo_checks(options.jobs, options.seed, options.matrix_samples, options.section_trials);
    out.insert(out.end(), mc.begin(), mc.end());
  }
  if (options.level == VerifyLevel::all) {
    auto extra = extended_checks(options.jobs, options.seed, options.matrix_samples, options.section_trials);
    out.insert(out.end(), extra.begin(), extra.end());
  }
  return out;
}

}  // namespace holocrit
