#include "randrank/mc.hpp"

#include "randrank/errors.hpp"
#include "randrank/normal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>

namespace randrank {

void SimConfig::validate() const {
    rule.validate(n);
    if (replications < 1) throw ValidationError("replications must be positive");
    if (statistic == StatisticKind::TbdStopped && rule.kind != RuleKind::TruncatedBinomial)
        throw ValidationError("the tbd statistic requires the truncated binomial rule");
    if (!custom_scores.empty() && static_cast<int>(custom_scores.size()) != n)
        throw ValidationError("custom scores length does not match n");
}

int resolve_thread_count() {
    if (const char* env = std::getenv("RANDRANK_THREADS")) {
        char* end = nullptr;
        long value = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || value < 1)
            throw ValidationError("RANDRANK_THREADS must be a positive integer");
        return static_cast<int>(value);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

namespace {

// sum_{j<=n/2} s_j^2 + sum_{j>n/2} s_j^2 P(tau <= n-j) given the positional
// weights w[j] = P(tau <= n-j) (1 on the first half, 0 at j=n).
double stopped_variance(const std::vector<double>& s, const std::vector<double>& w) {
    double v = 0.0;
    for (std::size_t j = 0; j < s.size(); ++j) v += s[j] * s[j] * w[j];
    return v;
}

struct ReplicateWorker {
    const SimConfig& config;
    const std::vector<double>& base;    // normalized scores at identity ranks
    const std::vector<double>& weights; // tbd positional weights, empty otherwise

    double operator()(std::uint64_t r, std::vector<double>& scratch) const {
        SplitMix64 rng(substream_seed(config.seed, r));
        const int n = config.n;

        const std::vector<double>* s = &base;
        if (config.rank_mode == RankMode::Shuffle) {
            scratch = base;
            for (int i = n - 1; i > 0; --i) {
                std::uint64_t k = rng() % static_cast<std::uint64_t>(i + 1);
                std::swap(scratch[static_cast<std::size_t>(i)], scratch[k]);
            }
            s = &scratch;
        }

        RuleState state;
        state.n = n;
        double acc = 0.0;
        int fill_at = 0; // first 1-based index where an arm reaches n/2
        for (int j = 0; j < n; ++j) {
            double p = prob_treatment_double(config.rule, state);
            int t = rng.uniform() < p ? 1 : -1;
            double sj = (*s)[static_cast<std::size_t>(j)];
            switch (config.statistic) {
            case StatisticKind::Plain:
                acc += sj * t;
                break;
            case StatisticKind::Centered:
                acc += sj * (t - (2.0 * p - 1.0));
                break;
            case StatisticKind::TbdStopped:
                if (fill_at == 0) {
                    acc += sj * t;
                    int count = t > 0 ? state.treatment + 1 : state.placebo + 1;
                    if (count == n / 2) fill_at = j + 1;
                }
                break;
            }
            state.apply(t);
        }
        if (config.statistic == StatisticKind::TbdStopped)
            return acc / std::sqrt(stopped_variance(*s, weights));
        return acc;
    }
};

} // namespace

std::vector<double> run_simulation(const SimConfig& config) {
    config.validate();
    const int n = config.n;

    RawScores raw;
    if (!config.custom_scores.empty())
        raw = RawScores{n, config.custom_scores};
    else
        raw = family_scores(config.family, RankVector::identity(n));
    const std::vector<double> base = normalize(raw).s;

    std::vector<double> weights;
    if (config.statistic == StatisticKind::TbdStopped) {
        TauPmf pmf = tau_pmf(n);
        weights.resize(static_cast<std::size_t>(n));
        for (int j = 1; j <= n; ++j)
            weights[static_cast<std::size_t>(j - 1)] = tau_cdf(pmf, n - j);
    }

    const long long m = config.replications;
    std::vector<double> sample(static_cast<std::size_t>(m));
    ReplicateWorker worker{config, base, weights};

    long long threads = std::min<long long>(resolve_thread_count(), m);
    if (threads <= 1) {
        std::vector<double> scratch;
        for (long long r = 0; r < m; ++r)
            sample[static_cast<std::size_t>(r)] = worker(static_cast<std::uint64_t>(r), scratch);
        return sample;
    }

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (long long w = 0; w < threads; ++w) {
        long long lo = m * w / threads, hi = m * (w + 1) / threads;
        pool.emplace_back([&, lo, hi] {
            std::vector<double> scratch;
            for (long long r = lo; r < hi; ++r)
                sample[static_cast<std::size_t>(r)] = worker(static_cast<std::uint64_t>(r), scratch);
        });
    }
    for (auto& t : pool) t.join();
    return sample;
}

NormalityReport normality_report(const std::vector<double>& sample) {
    const long long m = static_cast<long long>(sample.size());
    if (m < 2) throw ValidationError("normality report needs at least two values");

    NormalityReport rep;
    rep.m = m;

    double mean = 0.0;
    for (double x : sample) mean += x;
    mean /= static_cast<double>(m);
    double m2 = 0.0, m3 = 0.0, m4 = 0.0;
    for (double x : sample) {
        double d = x - mean, d2 = d * d;
        m2 += d2;
        m3 += d2 * d;
        m4 += d2 * d2;
    }
    m2 /= static_cast<double>(m);
    m3 /= static_cast<double>(m);
    m4 /= static_cast<double>(m);
    rep.mean = mean;
    rep.variance = m2;
    rep.skewness = m3 / std::pow(m2, 1.5);
    rep.excess_kurtosis = m4 / (m2 * m2) - 3.0;

    std::vector<double> sorted(sample);
    std::sort(sorted.begin(), sorted.end());
    const double inv_m = 1.0 / static_cast<double>(m);
    double ks = 0.0;
    for (long long i = 0; i < m; ++i) {
        double f = normal_cdf(sorted[static_cast<std::size_t>(i)]);
        ks = std::max(ks, std::max(f - i * inv_m, (i + 1) * inv_m - f));
    }
    rep.ks = ks;

    for (std::size_t q = 0; q < NormalityReport::quantile_probs.size(); ++q) {
        double p = NormalityReport::quantile_probs[q];
        auto idx = std::min<std::size_t>(sorted.size() - 1,
                                         static_cast<std::size_t>(p * static_cast<double>(m)));
        rep.quantiles[q] = sorted[idx];
    }
    return rep;
}

std::vector<std::pair<double, double>> qq_points(const std::vector<double>& sample, int count) {
    if (count < 1 || static_cast<std::size_t>(count) > sample.size())
        throw ValidationError("qq point count must be in [1, sample size]");
    std::vector<double> sorted(sample);
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::pair<double, double>> pts;
    pts.reserve(static_cast<std::size_t>(count));
    for (int i = 1; i <= count; ++i) {
        double p = (i - 0.5) / count;
        auto idx = std::min<std::size_t>(sorted.size() - 1,
                                         static_cast<std::size_t>(p * static_cast<double>(sorted.size())));
        pts.emplace_back(normal_quantile(p), sorted[idx]);
    }
    return pts;
}

DecayReport cond_expectation_decay(const RuleSpec& rule, const std::vector<int>& ns,
                                   long long replications, std::uint64_t seed) {
    if (ns.empty()) throw ValidationError("decay diagnostics need at least one n");
    if (replications < 1) throw ValidationError("replications must be positive");
    DecayReport report;
    report.rows.reserve(ns.size());
    for (std::size_t ni = 0; ni < ns.size(); ++ni) {
        const int n = ns[ni];
        rule.validate(n);
        double acc = 0.0;
        for (long long r = 0; r < replications; ++r) {
            SplitMix64 rng(substream_seed(
                seed, static_cast<std::uint64_t>(ni) * static_cast<std::uint64_t>(replications) +
                          static_cast<std::uint64_t>(r)));
            RuleState state;
            state.n = n;
            for (int j = 0; j < n - 1; ++j)
                next_assignment(rule, state, rng.uniform());
            acc += std::fabs(2.0 * prob_treatment_double(rule, state) - 1.0);
        }
        report.rows.emplace_back(n, acc / static_cast<double>(replications));
    }
    return report;
}

} // namespace randrank
