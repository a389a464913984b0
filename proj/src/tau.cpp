#include "randrank/tau.hpp"

#include "randrank/errors.hpp"

#include <cmath>
#include <string>

namespace randrank {

namespace {

void check_even(int n) {
    if (n < 2 || n % 2 != 0)
        throw ValidationError("tau distribution needs even n >= 2, got " + std::to_string(n));
}

// Walks the pmf numerators C(n-k-1, n/2-1) for k = 1..n/2 via the exact
// integer recurrence c_{k+1} = c_k * (n/2 - k) / (n - k - 1); the matching
// power-of-two denominator is 2^{n-k-1}.
template <typename Fn>
void for_each_numerator(int n, Fn&& fn) {
    BigInt c = binomial(static_cast<unsigned>(n - 2), static_cast<unsigned>(n / 2 - 1));
    for (int k = 1; k <= n / 2; ++k) {
        fn(k, c);
        if (k < n / 2) {
            c *= n / 2 - k;
            c /= n - k - 1;
        }
    }
}

} // namespace

std::vector<Rational> tau_pmf_exact(int n) {
    check_even(n);
    std::vector<Rational> p;
    p.reserve(static_cast<std::size_t>(n / 2));
    for_each_numerator(n, [&](int k, const BigInt& c) {
        Rational q(c);
        q /= BigInt(1) << (n - k - 1);
        p.push_back(q);
    });
    return p;
}

TauPmf tau_pmf(int n) {
    check_even(n);
    TauPmf pmf;
    pmf.n = n;
    pmf.p.reserve(static_cast<std::size_t>(n / 2));
    for_each_numerator(n, [&](int k, const BigInt& c) {
        pmf.p.push_back(scaled_to_double(c, n - k - 1));
    });
    return pmf;
}

double tau_cdf(const TauPmf& pmf, int k) {
    if (k <= 0) return 0.0;
    if (k >= pmf.n / 2) return 1.0;
    double acc = 0.0;
    for (int i = 1; i <= k; ++i) acc += pmf.p[static_cast<std::size_t>(i - 1)];
    return acc;
}

double tau_mean(int n) {
    check_even(n);
    BigInt num = binomial(static_cast<unsigned>(n), static_cast<unsigned>(n / 2));
    num *= n;
    return scaled_to_double(num, n);
}

int sample_tau(const TauPmf& pmf, double u) {
    double acc = 0.0;
    for (int k = 1; k < pmf.n / 2; ++k) {
        acc += pmf.p[static_cast<std::size_t>(k - 1)];
        if (u < acc) return k;
    }
    return pmf.n / 2;
}

double tau_limit_distance(int n) {
    TauPmf pmf = tau_pmf(n);
    const double inv_sqrt2n = 1.0 / std::sqrt(2.0 * n);
    double cdf = 0.0, dist = 0.0;
    for (int k = 1; k <= n / 2; ++k) {
        cdf += pmf.p[static_cast<std::size_t>(k - 1)];
        double folded = std::erf(k * inv_sqrt2n); // 2*Phi(k/sqrt n) - 1
        dist = std::max(dist, std::fabs(cdf - folded));
    }
    return dist;
}

} // namespace randrank
