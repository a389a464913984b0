#pragma once

#include "randrank/rational.hpp"
#include "randrank/rules.hpp"
#include "randrank/statistics.hpp"

#include <complex>
#include <functional>
#include <utility>
#include <vector>

namespace randrank {

// Exhaustive enumeration is limited to n <= 20 (2^n worst case paths).
inline constexpr int kEnumerationCap = 20;

struct PathDistribution {
    int n = 0;
    std::vector<std::pair<AssignmentPath, Rational>> entries; // probabilities sum to 1
};

struct ExactStatDistribution {
    std::vector<double> support; // strictly increasing
    std::vector<Rational> probs; // matching, sum to 1
};

// Depth-first walk over every positive-probability path, +1 branch first
// (paths arrive in lexicographic order with +1 before -1).
void visit_paths(const RuleSpec& rule, int n,
                 const std::function<void(const AssignmentPath&, const Rational&)>& visit);

PathDistribution enumerate_paths(const RuleSpec& rule, int n);

// E T_j for j = 1..n; exactly zero for all four rules.
std::vector<Rational> exact_marginals(const RuleSpec& rule, int n);

// Pushforward of the path distribution through the chosen statistic.
// Support values within 1e-12 of each other are merged.
ExactStatDistribution exact_statistic_distribution(const RuleSpec& rule, StatisticKind kind,
                                                   const NormalizedScores& s);

// E pi_n = sum over paths of prob * characteristic_product.
std::complex<double> exact_expected_char_product(const RuleSpec& rule,
                                                 const NormalizedScores& s, double lambda);

// Distribution of the tail length tau from truncated binomial enumeration.
std::vector<Rational> exact_tau_pmf(int n);

// Var of U_j = 1{j <= n-tau} s_j (T_j - E(T_j|history)) under truncated
// binomial, from enumeration. Matches s_j^2 P(tau <= n-j).
std::vector<double> exact_variance_U(const NormalizedScores& s);

} // namespace randrank
