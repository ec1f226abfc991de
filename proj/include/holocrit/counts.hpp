#pragma once

// Expected numbers of critical points of random sections of O(N) -> CP^m,
// split by Morse index q in [m, 2m], and the universal leading coefficients
// n_q(m) of the large-N expansion on any compact Kahler manifold.

#include <map>

#include "holocrit/chamber.hpp"
#include "holocrit/exactnum.hpp"

namespace holocrit {

struct CountReport {
  int m = 1;
  int N = 2;
  std::map<int, Rational> per_q;
  Rational total;
  /// sum_q (-1)^(q-m) per_q, which equals signed_count(m, N).
  Rational signed_sum;
  std::map<int, double> float_view;
};

struct LeadingReport {
  int m = 1;
  std::map<int, Rational> n_q;
  Rational n_total;
  std::map<int, double> float_view;
};

/// 2^((m^2+m+2)/2) / prod_{j=1}^m j!
Rational critical_prefactor(int m);

Rational cpm_exact_count(int m, int N, int q, int max_m = kDefaultMaxExpansionDim);

/// 2(m+1)(N-1)^(m+1) / ((m+2)N - 2)
Rational closed_form_min_index(int m, int N);

/// ((N-1)^(m+1) + (-1)^m) / N, the topological signed count.
Rational signed_count(int m, int N);

Rational leading_coeff(int m, int q, int max_m = kDefaultMaxExpansionDim);
Rational leading_total(int m, int max_m = kDefaultMaxExpansionDim);

/// Bound factor ((2m-q)/(2m-q+1-2/N))^2 relating consecutive indices.
Rational index_ratio_bound(int m, int N, int q);

CountReport count_report(int m, int N, int max_m = kDefaultMaxExpansionDim);
LeadingReport leading_report(int m, int max_m = kDefaultMaxExpansionDim);

}  // namespace holocrit
