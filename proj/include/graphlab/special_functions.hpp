#pragma once

#include <cstddef>
#include <cstdint>

namespace graphlab {

// log Gamma(x) for x > 0.
double log_gamma(double x);

// log( Gamma(num) / Gamma(den) ), both arguments > 0. Evaluated as a
// difference of log-Gamma values so that ratios like Gamma(1000.4)/Gamma(1000)
// stay finite.
double log_gamma_ratio(double num, double den);

// log C(n, k) for 0 <= k <= n.
double log_choose(std::uint64_t n, std::uint64_t k);

// Regularized incomplete gamma functions P(a, x) and Q(a, x) = 1 - P(a, x)
// for a > 0, x >= 0. Series expansion for x < a + 1, Lentz continued
// fraction otherwise.
double regularized_gamma_p(double a, double x);
double regularized_gamma_q(double a, double x);

// Upper-tail p-value of the chi-square distribution with df degrees of
// freedom: P(X >= statistic) = Q(df/2, statistic/2).
double chi_square_pvalue(double statistic, std::size_t df);

}  // namespace graphlab
