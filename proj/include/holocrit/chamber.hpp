#pragma once

// Exact evaluation of the Vandermonde-exponential chamber integrals
//
//   P_{c,p}(m) = int_{Y_p} |prod lambda_j| Delta(lambda) exp(...) dlambda,
//   Y_p = { lambda_1 > ... > lambda_p > 0 > lambda_{p+1} > ... > lambda_m },
//
// after the consecutive-sum change of variables that maps Y_p onto the
// positive orthant. There the integrand becomes the p-independent product
// of all consecutive sums (lambda_i + ... + lambda_j), i <= j, times
// exp(-sum_j r_j lambda_j), and the integral is a finite sum of
// a!/r^(a+1) products over the monomials of that product.

#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

#include "holocrit/exactnum.hpp"

namespace holocrit {

/// Raised when a polynomial expansion exceeds the configured size ceiling.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr int kDefaultMaxExpansionDim = 6;

struct ChamberSpec {
  int m = 1;
  int p = 1;     // number of positive coordinates, 0 <= p <= m
  Rational c{0}; // exponential shift on the negative block; ignored when p == m

  /// Throws DomainError unless 1 <= m, 0 <= p <= m and c > -1.
  void validate() const;
};

/// Rates r_j of exp(-sum r_j lambda_j) on the positive orthant.
class RateVector {
 public:
  /// r_j = j for j <= p, r_j = j + c for j > p (1-based).
  RateVector(int m, int p, const Rational& c);
  explicit RateVector(std::vector<Rational> rates);

  std::size_t size() const { return rates_.size(); }
  const Rational& operator[](std::size_t i) const { return rates_[i]; }
  std::span<const Rational> values() const { return rates_; }

 private:
  std::vector<Rational> rates_;
};

/// Multivariate polynomial with big-integer coefficients over a fixed
/// number of variables. Zero coefficients are never stored.
class SparsePoly {
 public:
  using Exponents = std::vector<int>;

  explicit SparsePoly(int nvars) : nvars_(nvars) {}

  static SparsePoly constant(int nvars, const mpz_class& value);

  int nvars() const { return nvars_; }
  std::size_t size() const { return terms_.size(); }
  const std::map<Exponents, mpz_class>& terms() const { return terms_; }

  void add_term(const Exponents& e, const mpz_class& coeff);
  /// Multiplies in place by x_first + ... + x_last (0-based, inclusive).
  void multiply_by_consecutive_sum(int first, int last);
  mpz_class evaluate(std::span<const long> point) const;

  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

 private:
  int nvars_;
  std::map<Exponents, mpz_class> terms_;
};

/// prod_{1 <= i <= j <= m} (lambda_i + ... + lambda_j), memoized per m.
/// The cache is safe for concurrent use.
std::shared_ptr<const SparsePoly> expand_pair_product(int m,
                                                      int max_m = kDefaultMaxExpansionDim);

/// prod_k a_k! / r_k^(a_k + 1), the orthant integral of one monomial.
Rational integrate_monomial(std::span<const int> exponents, const RateVector& rates);

/// P_{c,p}(m), exactly.
Rational chamber_integral(const ChamberSpec& spec, int max_m = kDefaultMaxExpansionDim);

}  // namespace holocrit
