#pragma once

// Selberg's integral
//
//   int_[0,1]^n |Delta|^(2 gamma) prod x^(alpha-1) (1-x)^(beta-1) dx
//     = prod_{j<n} G(1+gamma+j gamma) G(alpha+j gamma) G(beta+j gamma)
//                  / [ G(1+gamma) G(alpha+beta+gamma(n+j-1)) ]
//
// and its exponential limit (weights x^(alpha-1) e^(-x) on [0,inf)^n), used
// as an oracle independent of the chamber expansion.

#include <optional>

#include "holocrit/exactnum.hpp"

namespace holocrit {

struct SelbergParams {
  int n = 1;
  Rational alpha{1};
  Rational beta{1};  // unused by the exponential form
  Rational gamma{0};

  /// Validity region, checked in exact arithmetic. Throws DomainError.
  void validate(bool exponential) const;
};

/// Result of a Selberg evaluation. `exact` is populated when every Gamma
/// argument is a half-integer; `approx` is always populated.
struct SelbergValue {
  std::optional<PiPower> exact;
  double approx = 0.0;

  bool is_exact() const { return exact.has_value(); }
};

SelbergValue selberg_finite(const SelbergParams& params);
SelbergValue selberg_exp(int n, const Rational& alpha, const Rational& gamma);

/// Log-gamma evaluation of either Gamma product.
double selberg_float(const SelbergParams& params, bool exponential);
double log_selberg_float(const SelbergParams& params, bool exponential);

}  // namespace holocrit
