#include "holocrit/chamber.hpp"

#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>

namespace holocrit {

void ChamberSpec::validate() const {
  if (m < 1) throw DomainError("chamber: m must be >= 1");
  if (p < 0 || p > m) throw DomainError("chamber: p must lie in [0, m]");
  if (c <= Rational(-1)) throw DomainError("chamber: shift c must exceed -1, got " + c.str());
}

RateVector::RateVector(int m, int p, const Rational& c) {
  rates_.reserve(static_cast<std::size_t>(m));
  for (int j = 1; j <= m; ++j) rates_.emplace_back(j <= p ? Rational(j) : Rational(j) + c);
  for (const auto& r : rates_)
    if (r.sign() <= 0) throw DomainError("rate vector: nonpositive rate " + r.str());
}

RateVector::RateVector(std::vector<Rational> rates) : rates_(std::move(rates)) {
  for (const auto& r : rates_)
    if (r.sign() <= 0) throw DomainError("rate vector: nonpositive rate " + r.str());
}

SparsePoly SparsePoly::constant(int nvars, const mpz_class& value) {
  SparsePoly p(nvars);
  p.add_term(Exponents(static_cast<std::size_t>(nvars), 0), value);
  return p;
}

void SparsePoly::add_term(const Exponents& e, const mpz_class& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

void SparsePoly::multiply_by_consecutive_sum(int first, int last) {
  std::map<Exponents, mpz_class> out;
  for (const auto& [e, coeff] : terms_) {
    Exponents shifted = e;
    for (int k = first; k <= last; ++k) {
      ++shifted[static_cast<std::size_t>(k)];
      auto [it, inserted] = out.try_emplace(shifted, coeff);
      if (!inserted) it->second += coeff;
      --shifted[static_cast<std::size_t>(k)];
    }
  }
  // all coefficients are positive, so nothing cancels
  terms_ = std::move(out);
}

mpz_class SparsePoly::evaluate(std::span<const long> point) const {
  mpz_class total = 0;
  for (const auto& [e, coeff] : terms_) {
    mpz_class term = coeff;
    for (std::size_t k = 0; k < e.size(); ++k) {
      mpz_class power;
      mpz_class base(point[k]);
      mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e[k]));
      term *= power;
    }
    total += term;
  }
  return total;
}

namespace {

struct ExpansionCache {
  std::shared_mutex mutex;
  std::unordered_map<int, std::shared_ptr<const SparsePoly>> by_dim;
};

ExpansionCache& expansion_cache() {
  static ExpansionCache cache;
  return cache;
}

SparsePoly build_pair_product(int m) {
  SparsePoly poly = SparsePoly::constant(m, 1);
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) poly.multiply_by_consecutive_sum(i, j);
  return poly;
}

}  // namespace

std::shared_ptr<const SparsePoly> expand_pair_product(int m, int max_m) {
  if (m < 1) throw DomainError("expand_pair_product: m must be >= 1");
  if (m > max_m) {
    throw CapacityError("expand_pair_product: m=" + std::to_string(m) +
                        " exceeds the expansion ceiling " + std::to_string(max_m) +
                        "; raise max_m (CLI: --max-m) if the memory and time are acceptable");
  }
  auto& cache = expansion_cache();
  {
    std::shared_lock lock(cache.mutex);
    if (auto it = cache.by_dim.find(m); it != cache.by_dim.end()) return it->second;
  }
  auto built = std::make_shared<const SparsePoly>(build_pair_product(m));
  std::unique_lock lock(cache.mutex);
  auto [it, inserted] = cache.by_dim.try_emplace(m, std::move(built));
  return it->second;
}

Rational integrate_monomial(std::span<const int> exponents, const RateVector& rates) {
  if (exponents.size() != rates.size())
    throw DomainError("integrate_monomial: exponent and rate lengths differ");
  Rational value(1);
  for (std::size_t k = 0; k < exponents.size(); ++k) {
    if (exponents[k] < 0) throw DomainError("integrate_monomial: negative exponent");
    value *= Rational(factorial(static_cast<unsigned long>(exponents[k])));
    value /= pow(rates[k], exponents[k] + 1);
  }
  return value;
}

Rational chamber_integral(const ChamberSpec& spec, int max_m) {
  spec.validate();
  const auto poly = expand_pair_product(spec.m, max_m);
  // p == m carries no shift: the ordered-positive chamber has rates 1..m.
  const RateVector rates(spec.m, spec.p, spec.p == spec.m ? Rational(0) : spec.c);

  // One-variable factors a!/r^(a+1) reused across all terms.
  const int max_degree = spec.m * (spec.m + 1) / 2;
  std::vector<std::vector<Rational>> factor(static_cast<std::size_t>(spec.m));
  for (int k = 0; k < spec.m; ++k) {
    auto& row = factor[static_cast<std::size_t>(k)];
    row.reserve(static_cast<std::size_t>(max_degree) + 1);
    for (int a = 0; a <= max_degree; ++a) {
      const int e[1] = {a};
      row.push_back(integrate_monomial(e, RateVector({rates[static_cast<std::size_t>(k)]})));
    }
  }

  Rational total(0);
  for (const auto& [e, coeff] : poly->terms()) {
    Rational term(coeff);
    for (std::size_t k = 0; k < e.size(); ++k) term *= factor[k][static_cast<std::size_t>(e[k])];
    total += term;
  }
  return total;
}

}  // namespace holocrit
