#pragma once

#include "randrank/rules.hpp"
#include "randrank/scores.hpp"
#include "randrank/tau.hpp"

#include <complex>
#include <string>

namespace randrank {

enum class StatisticKind {
    Plain,      // S_n = sum s_j T_j
    Centered,   // sum s_j (T_j - E(T_j | history)), a martingale under any rule
    TbdStopped, // truncated binomial only: random-length numerator over a fixed sd
};

// L_n = sum (a_j - abar) T_j. Equals normalized_statistic * sqrt(sum (a-abar)^2).
double linear_rank_statistic(const RawScores& a, const AssignmentPath& path);

double normalized_statistic(const NormalizedScores& s, const AssignmentPath& path);

// Throws ValidationError if the path has probability zero under the rule.
double centered_statistic(const RuleSpec& rule, const NormalizedScores& s,
                          const AssignmentPath& path);

// Tail length of a balanced path: n minus the first index at which an arm
// reaches n/2 assignments. Always in [1, n/2].
int tau_of_path(const AssignmentPath& path);

struct TbdDenominator {
    int n = 0;
    double v = 0; // sum_{j<=n/2} s_j^2 + sum_{j>n/2} s_j^2 P(tau <= n-j), in (0, 1]
};

TbdDenominator tbd_denominator(const NormalizedScores& s, const TauPmf& pmf);

// Stopped statistic: sum_{j<=n-tau} s_j T_j divided by sqrt(v). The summands
// beyond n-tau are the deterministic tail and carry no information.
double tbd_statistic(const NormalizedScores& s, const AssignmentPath& path, const TauPmf& pmf);

// pi_n = prod (1 + i*lambda*s_j*T_j). |pi_n|^2 = prod (1 + lambda^2 s_j^2) <= e^{lambda^2}.
std::complex<double> characteristic_product(const NormalizedScores& s,
                                            const AssignmentPath& path, double lambda);

std::string statistic_name(StatisticKind kind);

// Accepts the CLI spellings: plain, centered, tbd.
StatisticKind parse_statistic_kind(const std::string& name);

} // namespace randrank
