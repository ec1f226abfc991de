#include "holocrit/exactnum.hpp"

#include <cmath>
#include <numbers>

#include <mpfr.h>

namespace holocrit {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const std::string s(text);
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(mpz_class(s, 10));
    return Rational(mpz_class(s.substr(0, slash), 10), mpz_class(s.substr(slash + 1), 10));
  } catch (const std::invalid_argument&) {
    throw DomainError("cannot parse rational from '" + s + "'");
  }
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.q_ == 0) throw DomainError("division by zero");
  q_ /= o.q_;
  return *this;
}

double Rational::to_double() const {
  mpfr_t tmp;
  mpfr_init2(tmp, 53);
  mpfr_set_q(tmp, q_.get_mpq_t(), MPFR_RNDN);
  const double d = mpfr_get_d(tmp, MPFR_RNDN);
  mpfr_clear(tmp);
  return d;
}

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw DomainError("zero to a negative power");
    return Rational(1) / pow(base, -exponent);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.num().get_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.den().get_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(num, den);
}

mpz_class factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

double PiPower::to_double() const {
  return coeff.to_double() * std::pow(std::numbers::pi, 0.5 * pi_half_exponent);
}

std::ostream& operator<<(std::ostream& os, const PiPower& v) {
  os << v.coeff;
  if (v.pi_half_exponent != 0) os << "*pi^(" << v.pi_half_exponent << "/2)";
  return os;
}

PiPower gamma_half(long k) {
  if (k <= 0) throw DomainError("gamma_half: argument k/2 must be positive, got k=" + std::to_string(k));
  if (k % 2 == 0) return PiPower{Rational(factorial(static_cast<unsigned long>(k / 2 - 1))), 0};
  // Gamma(k/2) = (k-2)/2 * (k-4)/2 * ... * 1/2 * sqrt(pi), i.e. (k-2)!! / 2^((k-1)/2).
  mpz_class dfact;
  mpz_2fac_ui(dfact.get_mpz_t(), static_cast<unsigned long>(k >= 2 ? k - 2 : 0));
  mpz_class two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>((k - 1) / 2));
  return PiPower{Rational(dfact, two_pow), 1};
}

bool is_half_integer(const Rational& x) {
  return x.den() == 1 || x.den() == 2;
}

PiPower gamma_at(const Rational& x) {
  if (!is_half_integer(x)) throw DomainError("gamma_at: " + x.str() + " is not a half-integer");
  const Rational twice = x * 2;
  return gamma_half(twice.num().get_si());
}

Rational pipower_to_rational(const PiPower& v) {
  if (v.pi_half_exponent != 0) {
    throw IrrationalResult("irrational result: value carries pi^(" +
                           std::to_string(v.pi_half_exponent) + "/2)");
  }
  return v.coeff;
}

}  // namespace holocrit
