#include <doctest.h>

#include <cmath>
#include <functional>
#include <limits>
#include <thread>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "holocrit/chamber.hpp"

using namespace holocrit;

namespace {

Rational P(int m, int p, const Rational& c) { return chamber_integral(ChamberSpec{m, p, c}); }

Rational selberg_closed_form(int m) {
  Rational r(m + 1);
  for (int j = 1; j <= m; ++j) r *= Rational(factorial(j)) / pow(Rational(2), j);
  return r;
}

// Nested adaptive quadrature of |prod lambda| Delta(lambda) e^(...) over
// lambda_1 > ... > lambda_p > 0 > lambda_{p+1} > ... > lambda_m, with the
// exponent of the ordered domain before any change of variables.
double brute_force_chamber(int m, int p, double c) {
  using boost::math::quadrature::gauss_kronrod;
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> lam(m);

  const auto integrand = [&]() {
    double v = 1.0;
    for (int i = 0; i < m; ++i) {
      v *= std::abs(lam[i]);
      for (int j = i + 1; j < m; ++j) v *= lam[i] - lam[j];
    }
    double expo = 0.0;
    if (p == m) {
      for (double x : lam) expo -= x;
    } else {
      for (int j = 0; j < m - 1; ++j) expo -= lam[j];
      expo += (m + c) * lam[m - 1];
    }
    return v * std::exp(expo);
  };

  // order of integration: lambda_p outward to lambda_1, then lambda_{p+1} down to lambda_m
  std::function<double(int)> level = [&](int depth) -> double {
    if (depth == m) return integrand();
    if (depth < p) {
      const int j = p - 1 - depth;
      const double lo = j + 1 < p ? lam[j + 1] : 0.0;
      return gauss_kronrod<double, 31>::integrate(
          [&, j](double x) { lam[j] = x; return level(depth + 1); }, lo, inf, 6, 1e-10);
    }
    const int j = depth;
    const double hi = j > p ? lam[j - 1] : 0.0;
    return gauss_kronrod<double, 31>::integrate(
        [&, j](double x) { lam[j] = x; return level(depth + 1); }, -inf, hi, 6, 1e-10);
  };
  return level(0);
}

}  // namespace

TEST_CASE("pair product expansion") {
  const auto one = expand_pair_product(1);
  CHECK(one->size() == 1);
  CHECK(one->terms().at({1}) == 1);

  const auto two = expand_pair_product(2);
  SparsePoly expected(2);
  expected.add_term({2, 1}, 1);
  expected.add_term({1, 2}, 1);
  CHECK(*two == expected);

  const std::vector<long> ones(3, 1);
  CHECK(expand_pair_product(3)->evaluate(ones) == 12);
}

TEST_CASE("pair product terms are homogeneous of degree m(m+1)/2") {
  for (int m = 1; m <= 5; ++m) {
    for (const auto& [e, coeff] : expand_pair_product(m)->terms()) {
      int total = 0;
      for (int a : e) total += a;
      CHECK(total == m * (m + 1) / 2);
      CHECK(coeff != 0);
    }
  }
}

TEST_CASE("expansion evaluates like the factored product") {
  const std::vector<long> pt{2, -3, 5, 7};
  mpz_class direct = 1;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      long s = 0;
      for (int k = i; k <= j; ++k) s += pt[k];
      direct *= s;
    }
  CHECK(expand_pair_product(4)->evaluate(pt) == direct);
}

TEST_CASE("expansion cache is shared and thread safe") {
  std::vector<std::shared_ptr<const SparsePoly>> seen(4);
  std::vector<std::thread> workers;
  for (int t = 0; t < 4; ++t) workers.emplace_back([&, t] { seen[t] = expand_pair_product(5); });
  for (auto& w : workers) w.join();
  for (int t = 1; t < 4; ++t) CHECK(seen[t] == seen[0]);
}

TEST_CASE("expansion ceiling") {
  CHECK_THROWS_AS(expand_pair_product(7), CapacityError);
  CHECK_THROWS_AS(expand_pair_product(3, 2), CapacityError);
  CHECK_THROWS_AS(expand_pair_product(0), DomainError);
}

TEST_CASE("monomial integrals") {
  CHECK(integrate_monomial(std::vector<int>{1}, RateVector({Rational(1)})) == 1);
  CHECK(integrate_monomial(std::vector<int>{2}, RateVector({Rational(2)})) == Rational(1, 4));
  CHECK(integrate_monomial(std::vector<int>{1, 1}, RateVector({Rational(1), Rational(2)})) == Rational(1, 4));
  CHECK_THROWS_AS(RateVector({Rational(1), Rational(0)}), DomainError);
  CHECK_THROWS_AS(RateVector(2, 0, Rational(-3, 2)), DomainError);
}

TEST_CASE("rate vector layout") {
  const RateVector r(3, 1, Rational(1, 3));
  CHECK(r[0] == 1);
  CHECK(r[1] == Rational(7, 3));
  CHECK(r[2] == Rational(10, 3));
}

TEST_CASE("ChamberSpec validation") {
  CHECK_THROWS_AS(P(0, 0, 0), DomainError);
  CHECK_THROWS_AS(P(2, 3, 0), DomainError);
  CHECK_THROWS_AS(P(2, -1, 0), DomainError);
  CHECK_THROWS_AS(P(2, 1, -1), DomainError);
}

TEST_CASE("chamber examples") {
  CHECK(P(1, 1, Rational(5)) == 1);
  CHECK(P(2, 2, Rational(1, 3)) == Rational(3, 4));
  CHECK(P(1, 0, 1) == Rational(1, 4));
}

TEST_CASE("chamber values frozen from a symbolic integration of the ordered domain") {
  const Rational third(1, 3);
  CHECK(P(1, 0, 0) == 1);
  CHECK(P(1, 0, third) == Rational(9, 16));
  CHECK(P(1, 0, 1) == Rational(1, 4));
  CHECK(P(2, 0, 0) == Rational(3, 4));
  CHECK(P(2, 0, third) == Rational(2673, 10976));
  CHECK(P(2, 0, 1) == Rational(5, 108));
  CHECK(P(2, 1, third) == Rational(180, 343));
  CHECK(P(2, 1, 1) == Rational(8, 27));
  CHECK(P(3, 0, third) == Rational(751280427, 5378240000L));
  CHECK(P(3, 0, 1) == Rational(451, 41472));
  CHECK(P(3, 1, third) == Rational(5832, 16807));
  CHECK(P(3, 1, 1) == Rational(8, 81));
  CHECK(P(3, 2, third) == Rational(11529, 20000));
  CHECK(P(3, 2, 1) == Rational(189, 512));
  CHECK(P(3, 3, 1) == Rational(3, 4));
}

TEST_CASE("p-independence at c = 0") {
  for (int m = 1; m <= 5; ++m) {
    const Rational base = P(m, 0, 0);
    for (int p = 1; p <= m; ++p) CHECK(P(m, p, 0) == base);
  }
}

TEST_CASE("ordered-positive chamber matches the Selberg closed form") {
  for (int m = 1; m <= 6; ++m) {
    CHECK(P(m, m, 0) == selberg_closed_form(m));
    CHECK(P(m, m, Rational(2, 7)) == selberg_closed_form(m));
  }
}

TEST_CASE("scaling inequality is an equality at m = 1") {
  for (const Rational c : {Rational(1, 3), Rational(1), Rational(9, 10)})
    CHECK(P(1, 0, c) == pow(Rational(1) / (1 + c), 2) * P(1, 1, c));
}

TEST_CASE("scaling inequality is strict for m >= 2") {
  for (const Rational c : {Rational(1, 3), Rational(1), Rational(9, 10)})
    for (int m = 2; m <= 4; ++m)
      for (int p = 1; p <= m; ++p) {
        const Rational ratio = Rational(p) / (Rational(p) + c);
        CHECK(P(m, p - 1, c) < ratio * ratio * P(m, p, c));
      }
}

TEST_CASE("agreement with direct quadrature of the ordered domain") {
  for (int m = 1; m <= 3; ++m)
    for (int p = 0; p <= m; ++p)
      for (const Rational c : {Rational(0), Rational(1, 3), Rational(1)}) {
        const double exact = P(m, p, c).to_double();
        const double quad = brute_force_chamber(m, p, c.to_double());
        CAPTURE(m);
        CAPTURE(p);
        CHECK(std::abs(quad - exact) <= 1e-6 * std::abs(exact));
      }
}
