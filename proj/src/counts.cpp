#include "holocrit/counts.hpp"

#include <string>

namespace holocrit {

namespace {

void check_dimension(int m) {
  if (m < 1) throw DomainError("m must be >= 1, got " + std::to_string(m));
}

void check_index(int m, int q) {
  check_dimension(m);
  if (q < m || q > 2 * m)
    throw DomainError("Morse index q=" + std::to_string(q) + " outside [" + std::to_string(m) +
                      ", " + std::to_string(2 * m) + "]");
}

void check_degree(int N) {
  if (N < 2) throw DomainError("bundle degree N must be >= 2, got " + std::to_string(N));
}

// Index q integrates over Y_{2m-q}; q == m is the ordered-positive chamber.
ChamberSpec chamber_for_index(int m, int q, const Rational& c) {
  return ChamberSpec{m, 2 * m - q, c};
}

}  // namespace

Rational critical_prefactor(int m) {
  check_dimension(m);
  // m^2 + m + 2 is always even
  const long two_exp = (static_cast<long>(m) * m + m + 2) / 2;
  mpz_class denom = 1;
  for (int j = 1; j <= m; ++j) denom *= factorial(static_cast<unsigned long>(j));
  return pow(Rational(2), two_exp) / Rational(denom);
}

Rational cpm_exact_count(int m, int N, int q, int max_m) {
  check_index(m, q);
  check_degree(N);
  const Rational c = Rational(1) - Rational(2, N);
  const Rational degree_factor =
      pow(Rational(N - 1), m + 1) / Rational(static_cast<long>(m + 2) * N - 2);
  return critical_prefactor(m) * degree_factor *
         chamber_integral(chamber_for_index(m, q, c), max_m);
}

Rational closed_form_min_index(int m, int N) {
  check_dimension(m);
  check_degree(N);
  return Rational(2 * (m + 1)) * pow(Rational(N - 1), m + 1) /
         Rational(static_cast<long>(m + 2) * N - 2);
}

Rational signed_count(int m, int N) {
  check_dimension(m);
  if (N < 1) throw DomainError("signed_count: N must be >= 1");
  const Rational sign = (m % 2 == 0) ? Rational(1) : Rational(-1);
  return (pow(Rational(N - 1), m + 1) + sign) / Rational(N);
}

Rational leading_coeff(int m, int q, int max_m) {
  check_index(m, q);
  return critical_prefactor(m) / Rational(m + 2) *
         chamber_integral(chamber_for_index(m, q, Rational(1)), max_m);
}

Rational leading_total(int m, int max_m) {
  check_dimension(m);
  Rational total(0);
  for (int q = m; q <= 2 * m; ++q) total += leading_coeff(m, q, max_m);
  return total;
}

Rational index_ratio_bound(int m, int N, int q) {
  check_index(m, q);
  check_degree(N);
  const Rational p(2 * m - q);
  const Rational ratio = p / (p + Rational(1) - Rational(2, N));
  return ratio * ratio;
}

CountReport count_report(int m, int N, int max_m) {
  CountReport r;
  r.m = m;
  r.N = N;
  for (int q = m; q <= 2 * m; ++q) {
    const Rational v = cpm_exact_count(m, N, q, max_m);
    r.per_q.emplace(q, v);
    r.float_view.emplace(q, v.to_double());
    r.total += v;
    r.signed_sum += ((q - m) % 2 == 0) ? v : -v;
  }
  return r;
}

LeadingReport leading_report(int m, int max_m) {
  LeadingReport r;
  r.m = m;
  for (int q = m; q <= 2 * m; ++q) {
    const Rational v = leading_coeff(m, q, max_m);
    r.n_q.emplace(q, v);
    r.float_view.emplace(q, v.to_double());
    r.n_total += v;
  }
  return r;
}

}  // namespace holocrit
