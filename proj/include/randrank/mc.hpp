#pragma once

#include "randrank/rules.hpp"
#include "randrank/scores.hpp"
#include "randrank/statistics.hpp"

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace randrank {

enum class RankMode {
    Shuffle,  // fresh random rank permutation per replicate (default)
    Identity, // fixed identity ranking, for regression stability
};

struct SimConfig {
    RuleSpec rule;
    ScoreFamily family = ScoreFamily::Wilcoxon;
    std::vector<double> custom_scores; // overrides family when nonempty
    int n = 0;
    long long replications = 0;
    std::uint64_t seed = 0;
    StatisticKind statistic = StatisticKind::Plain;
    RankMode rank_mode = RankMode::Shuffle;

    void validate() const;
};

// One statistic value per replicate, indexed by replicate. Replicate r draws
// from its own substream, so the result depends only on the config, never on
// worker count or scheduling (RANDRANK_THREADS caps the workers).
std::vector<double> run_simulation(const SimConfig& config);

struct NormalityReport {
    double ks = 0;       // Kolmogorov distance to the standard normal cdf
    double mean = 0;
    double variance = 0; // population convention (divide by m)
    double skewness = 0;
    double excess_kurtosis = 0;
    static constexpr std::array<double, 7> quantile_probs{0.01, 0.05, 0.25, 0.5,
                                                          0.75, 0.95, 0.99};
    std::array<double, 7> quantiles{};
    long long m = 0;
};

NormalityReport normality_report(const std::vector<double>& sample);

// (theoretical normal quantile, sample order statistic) at plotting
// positions (i - 0.5) / count.
std::vector<std::pair<double, double>> qq_points(const std::vector<double>& sample, int count);

struct DecayReport {
    std::vector<std::pair<int, double>> rows; // (n, average |E(T_n | history)|)
};

// Average magnitude of the final conditional expectation at several n;
// shrinks with n for the Wei urn, stays 0 for complete randomization.
DecayReport cond_expectation_decay(const RuleSpec& rule, const std::vector<int>& ns,
                                   long long replications, std::uint64_t seed);

// RANDRANK_THREADS if set (must be a positive integer), else hardware count.
int resolve_thread_count();

} // namespace randrank
