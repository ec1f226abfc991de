#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "holocrit/exactnum.hpp"

using namespace holocrit;

TEST_CASE("rational arithmetic stays in lowest terms") {
  const Rational a(6, 8);
  CHECK(a.str() == "3/4");
  CHECK(Rational(4, -6).str() == "-2/3");
  CHECK((a + Rational(1, 4)).str() == "1");
  CHECK((a * Rational(4, 3)).is_integer());
  CHECK(Rational(-5, 3).sign() == -1);
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(-Rational(1, 2) == Rational(-1, 2));
}

TEST_CASE("parse and str round trip") {
  CHECK(Rational::parse("16/7") == Rational(16, 7));
  CHECK(Rational::parse("-3") == Rational(-3));
  CHECK(Rational::parse("10/4").str() == "5/2");
  CHECK_THROWS_AS(Rational::parse("1/0"), DomainError);
  CHECK_THROWS_AS(Rational::parse("abc"), DomainError);
  CHECK_THROWS_AS(Rational::parse(""), DomainError);
}

TEST_CASE("division by zero is a domain error") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
  CHECK_THROWS_AS(Rational(mpz_class(1), mpz_class(0)), DomainError);
  CHECK_THROWS_AS(pow(Rational(0), -1), DomainError);
}

TEST_CASE("pow and factorial") {
  CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(pow(Rational(-7), 0) == Rational(1));
  CHECK(factorial(0) == 1);
  CHECK(factorial(20) == mpz_class("2432902008176640000"));
}

TEST_CASE("to_double is correctly rounded") {
  CHECK(Rational(1, 3).to_double() == 1.0 / 3.0);
  CHECK(Rational(-2, 7).to_double() == -2.0 / 7.0);
  const Rational huge(mpz_class("100000000000000000000000000000001"), mpz_class(3));
  CHECK(huge.to_double() == doctest::Approx(3.3333333333333333e31).epsilon(1e-15));
}

TEST_CASE("round trip with large random operands") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    mpz_class n1(std::to_string(rng())), d1(std::to_string(rng() | 1));
    mpz_class n2(std::to_string(rng())), d2(std::to_string(rng() | 1));
    n1 *= n1;
    d2 *= d2;
    const Rational a(n1, d1), b(n2 + 1, d2);
    CHECK((a + b) - b == a);
    CHECK((a * b) / b == a);
    CHECK(Rational::parse(a.str()) == a);
  }
}

TEST_CASE("gamma at half-integers") {
  CHECK(gamma_half(1) == PiPower{Rational(1), 1});
  CHECK(gamma_half(2) == PiPower{Rational(1), 0});
  CHECK(gamma_half(3) == PiPower{Rational(1, 2), 1});
  CHECK(gamma_half(5) == PiPower{Rational(3, 4), 1});
  CHECK(gamma_half(10) == PiPower{Rational(24), 0});
  CHECK(gamma_half(1).to_double() == doctest::Approx(std::sqrt(std::numbers::pi)));
  CHECK_THROWS_AS(gamma_half(0), DomainError);
  CHECK_THROWS_AS(gamma_at(Rational(1, 3)), DomainError);
  CHECK(gamma_at(Rational(7, 2)) == gamma_half(7));
}

TEST_CASE("gamma recursion Gamma(x+1) = x Gamma(x)") {
  for (long k = 1; k <= 40; ++k) {
    const PiPower lhs = gamma_half(k + 2);
    const PiPower rhs = PiPower{Rational(k, 2), 0} * gamma_half(k);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("pi content must vanish for a rational result") {
  CHECK(pipower_to_rational(PiPower{Rational(5, 3), 0}) == Rational(5, 3));
  CHECK_THROWS_AS(pipower_to_rational(PiPower{Rational(1), 2}), IrrationalResult);
  const PiPower ratio = gamma_half(5) / gamma_half(3);
  CHECK(pipower_to_rational(ratio) == Rational(3, 2));
  CHECK(is_half_integer(Rational(7, 2)));
  CHECK_FALSE(is_half_integer(Rational(1, 3)));
}
