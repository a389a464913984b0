#pragma once

#include "randrank/rational.hpp"

#include <vector>

namespace randrank {

// Distribution of the truncated binomial tail length tau: the number of
// deterministic assignments made after one arm fills. Support is 1..n/2,
// P(tau = k) = C(n-k-1, n/2-1) / 2^{n-k-1}.
struct TauPmf {
    int n = 0;
    std::vector<double> p; // p[k-1] = P(tau = k)
};

// Exact rational pmf, any even n (big-integer ratio recurrence).
std::vector<Rational> tau_pmf_exact(int n);

TauPmf tau_pmf(int n);

// P(tau <= k): 0 for k <= 0, 1 for k >= n/2.
double tau_cdf(const TauPmf& pmf, int k);

// E tau = n * 2^{-n} * C(n, n/2), evaluated exactly then rounded once.
double tau_mean(int n);

// Inversion sampling: smallest k with u < P(tau <= k).
int sample_tau(const TauPmf& pmf, double u);

// Kolmogorov distance between the cdf of tau/sqrt(n) and the folded normal
// cdf 2*Phi(x)-1, evaluated at the support points k/sqrt(n).
double tau_limit_distance(int n);

} // namespace randrank
