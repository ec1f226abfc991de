#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace holocrit {

/// Raised for arguments outside an operation's mathematical domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when an exact result would not be rational (a stray power of pi).
class IrrationalResult : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : q_(static_cast<long>(value)) {}  // NOLINT
  explicit Rational(const mpz_class& integer) : q_(integer) {}
  Rational(const mpz_class& num, const mpz_class& den);
  Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

  /// Parses "p/q" or "p" (optional leading '-').
  static Rational parse(std::string_view text);

  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  /// Correctly rounded (round-to-nearest-even) double.
  double to_double() const;
  /// "num/den", or just "num" when the value is an integer.
  std::string str() const { return q_.get_str(); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { Rational r; r.q_ = -q_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

  const mpq_class& raw() const { return q_; }

 private:
  mpq_class q_{0};
};

/// base^exponent for any integer exponent; 0^negative is a domain error.
Rational pow(const Rational& base, long exponent);
mpz_class factorial(unsigned long n);

/// Value coeff * pi^(pi_half_exponent / 2).
struct PiPower {
  Rational coeff{1};
  int pi_half_exponent = 0;

  double to_double() const;

  PiPower& operator*=(const PiPower& o) {
    coeff *= o.coeff;
    pi_half_exponent += o.pi_half_exponent;
    return *this;
  }
  PiPower& operator/=(const PiPower& o) {
    coeff /= o.coeff;
    pi_half_exponent -= o.pi_half_exponent;
    return *this;
  }
  friend PiPower operator*(PiPower a, const PiPower& b) { return a *= b; }
  friend PiPower operator/(PiPower a, const PiPower& b) { return a /= b; }
  friend bool operator==(const PiPower&, const PiPower&) = default;
  friend std::ostream& operator<<(std::ostream& os, const PiPower& v);
};

/// Gamma(k/2) for k >= 1, exactly.
PiPower gamma_half(long k);

/// Gamma(x) for x a positive element of (1/2)Z.
PiPower gamma_at(const Rational& x);

/// True when 2x is an integer.
bool is_half_integer(const Rational& x);

/// Returns v.coeff; throws IrrationalResult unless v carries no pi content.
Rational pipower_to_rational(const PiPower& v);

}  // namespace holocrit
