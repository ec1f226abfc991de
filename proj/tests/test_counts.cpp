#include <doctest.h>

#include <cmath>
#include <vector>

#include "holocrit/counts.hpp"

using namespace holocrit;

TEST_CASE("per-index counts") {
  CHECK(cpm_exact_count(1, 3, 1) == Rational(16, 7));
  CHECK(cpm_exact_count(1, 3, 2) == Rational(9, 7));
  for (int m = 1; m <= 4; ++m)
    for (int q = m; q <= 2 * m; ++q) CHECK(cpm_exact_count(m, 2, q) == 1);
}

TEST_CASE("counts frozen from a symbolic integration of the ordered domain") {
  CHECK(cpm_exact_count(2, 3, 2) == Rational(24, 5));
  CHECK(cpm_exact_count(2, 3, 3) == Rational(1152, 343));
  CHECK(cpm_exact_count(2, 3, 4) == Rational(2673, 1715));
  CHECK(cpm_exact_count(2, 5, 2) == Rational(64, 3));
  CHECK(cpm_exact_count(2, 5, 3) == Rational(25600, 2197));
  CHECK(cpm_exact_count(2, 5, 4) == Rational(21875, 6591));
}

TEST_CASE("count domain") {
  CHECK_THROWS_AS(cpm_exact_count(1, 3, 0), DomainError);
  CHECK_THROWS_AS(cpm_exact_count(1, 3, 3), DomainError);
  CHECK_THROWS_AS(cpm_exact_count(1, 1, 1), DomainError);
  CHECK_THROWS_AS(cpm_exact_count(0, 3, 0), DomainError);
  CHECK_THROWS_AS(leading_coeff(2, 5), DomainError);
  CHECK_THROWS_AS(signed_count(1, 0), DomainError);
  CHECK_THROWS_AS(cpm_exact_count(7, 3, 7), CapacityError);
}

TEST_CASE("closed form and signed count examples") {
  CHECK(closed_form_min_index(1, 2) == 1);
  CHECK(closed_form_min_index(2, 3) == Rational(24, 5));
  CHECK(closed_form_min_index(1, 3) == Rational(16, 7));
  CHECK(signed_count(1, 3) == 1);
  CHECK(signed_count(2, 2) == 1);
  CHECK(signed_count(1, 1) == -1);
}

TEST_CASE("minimal index agrees with the closed form") {
  for (int m = 1; m <= 5; ++m)
    for (int N : {2, 3, 7, 20}) CHECK(cpm_exact_count(m, N, m) == closed_form_min_index(m, N));
}

TEST_CASE("alternating sum is the topological signed count") {
  for (int m = 1; m <= 4; ++m)
    for (int N = 2; N <= 12; ++N) {
      Rational alternating;
      for (int q = m; q <= 2 * m; ++q) alternating += ((q - m) % 2 ? -1 : 1) * cpm_exact_count(m, N, q);
      CHECK(alternating == signed_count(m, N));
    }
}

TEST_CASE("count reports") {
  const CountReport r = count_report(1, 3);
  CHECK(r.per_q.at(1) == Rational(16, 7));
  CHECK(r.per_q.at(2) == Rational(9, 7));
  CHECK(r.total == Rational(25, 7));
  CHECK(r.signed_sum == 1);
  CHECK(r.float_view.at(1) == doctest::Approx(16.0 / 7.0));
  CHECK(count_report(1, 2).total == 2);
  CHECK(count_report(1, 2).signed_sum == 0);
  CHECK(count_report(2, 2).total == 3);
  for (const auto& [q, v] : count_report(3, 4).per_q) CHECK(v > 0);
}

TEST_CASE("sandwich around the minimal index") {
  for (int m = 1; m <= 4; ++m)
    for (int N : {3, 5, 10}) {
      const Rational low = closed_form_min_index(m, N);
      const Rational total = count_report(m, N).total;
      CHECK(low < total);
      CHECK(total < Rational(m + 1) * low);
    }
}

TEST_CASE("adjacent indices obey the ratio bound") {
  for (int N : {3, 5, 10}) {
    CHECK(cpm_exact_count(1, N, 2) == index_ratio_bound(1, N, 1) * cpm_exact_count(1, N, 1));
    for (int m = 2; m <= 4; ++m)
      for (int q = m; q < 2 * m; ++q)
        CHECK(cpm_exact_count(m, N, q + 1) < index_ratio_bound(m, N, q) * cpm_exact_count(m, N, q));
  }
}

TEST_CASE("leading coefficients") {
  CHECK(leading_coeff(1, 1) == Rational(4, 3));
  CHECK(leading_coeff(1, 2) == Rational(1, 3));
  CHECK(leading_total(1) == Rational(5, 3));
  for (int m = 1; m <= 6; ++m) CHECK(leading_coeff(m, m) == Rational(2 * (m + 1), m + 2));
  CHECK(leading_total(2) == Rational(59, 27));
  CHECK(leading_total(3) == Rational(637, 243));
  CHECK(leading_coeff(3, 6) == Rational(451, 19440));
  for (int m = 2; m <= 5; ++m) {
    CHECK(Rational(2 * (m + 1), m + 2) < leading_total(m));
    CHECK(leading_total(m) < Rational(2 * m + 3, 3));
  }
  const LeadingReport r = leading_report(2);
  CHECK(r.n_q.at(3) == Rational(16, 27));
  CHECK(r.n_total == Rational(59, 27));
}

TEST_CASE("counts approach the leading coefficients at rate 1/N") {
  for (int m = 1; m <= 3; ++m)
    for (int q = m; q <= 2 * m; ++q) {
      const double target = leading_coeff(m, q).to_double();
      std::vector<double> err;
      for (int N : {10, 20, 40, 80}) {
        const double scaled = (cpm_exact_count(m, N, q) / pow(Rational(N), m)).to_double();
        err.push_back(std::abs(scaled - target));
      }
      CAPTURE(m);
      CAPTURE(q);
      for (std::size_t i = 1; i < err.size(); ++i) {
        CHECK(err[i] < err[i - 1]);
        CHECK(err[i - 1] / err[i] == doctest::Approx(2.0).epsilon(0.2));
      }
    }
}
