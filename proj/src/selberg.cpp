#include "holocrit/selberg.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace holocrit {

namespace {

// A Gamma product as lists of numerator and denominator arguments.
struct GammaRatio {
  std::vector<Rational> top;
  std::vector<Rational> bottom;
};

GammaRatio selberg_arguments(const SelbergParams& s, bool exponential) {
  GammaRatio g;
  const Rational one(1);
  for (int j = 0; j < s.n; ++j) {
    const Rational jg = s.gamma * Rational(j);
    g.top.push_back(one + s.gamma + jg);
    g.top.push_back(s.alpha + jg);
    g.bottom.push_back(one + s.gamma);
    if (!exponential) {
      g.top.push_back(s.beta + jg);
      g.bottom.push_back(s.alpha + s.beta + s.gamma * Rational(s.n + j - 1));
    }
  }
  return g;
}

std::optional<PiPower> exact_product(const GammaRatio& g) {
  const auto half = [](const Rational& x) { return is_half_integer(x); };
  if (!std::all_of(g.top.begin(), g.top.end(), half) ||
      !std::all_of(g.bottom.begin(), g.bottom.end(), half))
    return std::nullopt;
  PiPower value;
  for (const auto& x : g.top) value *= gamma_at(x);
  for (const auto& x : g.bottom) value /= gamma_at(x);
  return value;
}

double log_product(const GammaRatio& g) {
  double acc = 0.0;
  for (const auto& x : g.top) acc += std::lgamma(x.to_double());
  for (const auto& x : g.bottom) acc -= std::lgamma(x.to_double());
  return acc;
}

SelbergValue evaluate(const GammaRatio& g) {
  auto exact = exact_product(g);
  const double approx = exact ? exact->to_double() : std::exp(log_product(g));
  return SelbergValue{std::move(exact), approx};
}

}  // namespace

void SelbergParams::validate(bool exponential) const {
  if (n < 1) throw DomainError("selberg: n must be >= 1");
  if (alpha.sign() <= 0) throw DomainError("selberg: alpha must be positive");
  if (!exponential && beta.sign() <= 0) throw DomainError("selberg: beta must be positive");
  // gamma > -min(1/n, alpha/(n-1), beta/(n-1)); the last two are absent when n == 1
  Rational bound = Rational(1, n);
  if (n > 1) {
    bound = std::min(bound, alpha / Rational(n - 1));
    if (!exponential) bound = std::min(bound, beta / Rational(n - 1));
  }
  if (!(gamma > -bound))
    throw DomainError("selberg: gamma=" + gamma.str() + " must exceed -" + bound.str());
}

SelbergValue selberg_finite(const SelbergParams& params) {
  params.validate(false);
  return evaluate(selberg_arguments(params, false));
}

SelbergValue selberg_exp(int n, const Rational& alpha, const Rational& gamma) {
  const SelbergParams params{n, alpha, Rational(1), gamma};
  params.validate(true);
  return evaluate(selberg_arguments(params, true));
}

double log_selberg_float(const SelbergParams& params, bool exponential) {
  params.validate(exponential);
  return log_product(selberg_arguments(params, exponential));
}

double selberg_float(const SelbergParams& params, bool exponential) {
  return std::exp(log_selberg_float(params, exponential));
}

}  // namespace holocrit
