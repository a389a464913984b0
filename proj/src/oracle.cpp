#include "randrank/oracle.hpp"

#include "randrank/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

namespace randrank {

namespace {

void check_cap(int n) {
    if (n > kEnumerationCap)
        throw CapacityError("exact enumeration capped at n = " +
                            std::to_string(kEnumerationCap) + ", got " + std::to_string(n));
}

struct Dfs {
    const RuleSpec& rule;
    AssignmentPath path;
    RuleState state;
    const std::function<void(const AssignmentPath&, const Rational&)>& visit;

    void run(const Rational& prob) {
        if (state.assigned == state.n) {
            visit(path, prob);
            return;
        }
        Rational p = prob_treatment(rule, state);
        RuleState saved = state;
        if (p != 0) {
            path.values.push_back(1);
            state.apply(1);
            run(prob * p);
            state = saved;
            path.values.pop_back();
        }
        if (p != 1) {
            path.values.push_back(-1);
            state.apply(-1);
            run(prob * (1 - p));
            state = saved;
            path.values.pop_back();
        }
    }
};

} // namespace

void visit_paths(const RuleSpec& rule, int n,
                 const std::function<void(const AssignmentPath&, const Rational&)>& visit) {
    rule.validate(n);
    check_cap(n);
    Dfs dfs{rule, {}, {}, visit};
    dfs.path.n = n;
    dfs.path.values.reserve(static_cast<std::size_t>(n));
    dfs.state.n = n;
    dfs.run(Rational(1));
}

PathDistribution enumerate_paths(const RuleSpec& rule, int n) {
    PathDistribution dist;
    dist.n = n;
    visit_paths(rule, n, [&](const AssignmentPath& path, const Rational& prob) {
        dist.entries.emplace_back(path, prob);
    });
    return dist;
}

std::vector<Rational> exact_marginals(const RuleSpec& rule, int n) {
    std::vector<Rational> m(static_cast<std::size_t>(n), Rational(0));
    visit_paths(rule, n, [&](const AssignmentPath& path, const Rational& prob) {
        for (int j = 0; j < n; ++j) {
            if (path.values[static_cast<std::size_t>(j)] > 0)
                m[static_cast<std::size_t>(j)] += prob;
            else
                m[static_cast<std::size_t>(j)] -= prob;
        }
    });
    return m;
}

ExactStatDistribution exact_statistic_distribution(const RuleSpec& rule, StatisticKind kind,
                                                   const NormalizedScores& s) {
    if (kind == StatisticKind::TbdStopped && rule.kind != RuleKind::TruncatedBinomial)
        throw ValidationError("the tbd statistic requires the truncated binomial rule");
    const int n = s.n;
    TauPmf pmf;
    if (kind == StatisticKind::TbdStopped) pmf = tau_pmf(n);

    std::map<double, Rational> acc;
    const double tol = 1e-12;
    visit_paths(rule, n, [&](const AssignmentPath& path, const Rational& prob) {
        double value = 0.0;
        switch (kind) {
        case StatisticKind::Plain: value = normalized_statistic(s, path); break;
        case StatisticKind::Centered: value = centered_statistic(rule, s, path); break;
        case StatisticKind::TbdStopped: value = tbd_statistic(s, path, pmf); break;
        }
        auto it = acc.lower_bound(value - tol);
        if (it != acc.end() && std::fabs(it->first - value) <= tol)
            it->second += prob;
        else
            acc.emplace_hint(it, value, prob);
    });

    ExactStatDistribution dist;
    dist.support.reserve(acc.size());
    dist.probs.reserve(acc.size());
    for (auto& [value, prob] : acc) {
        dist.support.push_back(value);
        dist.probs.push_back(prob);
    }
    return dist;
}

std::complex<double> exact_expected_char_product(const RuleSpec& rule,
                                                 const NormalizedScores& s, double lambda) {
    long double re = 0.0L, im = 0.0L;
    visit_paths(rule, s.n, [&](const AssignmentPath& path, const Rational& prob) {
        std::complex<double> pi = characteristic_product(s, path, lambda);
        long double w = static_cast<long double>(to_double(prob));
        re += w * pi.real();
        im += w * pi.imag();
    });
    return {static_cast<double>(re), static_cast<double>(im)};
}

std::vector<Rational> exact_tau_pmf(int n) {
    RuleSpec rule = RuleSpec::truncated_binomial();
    std::vector<Rational> pmf(static_cast<std::size_t>(n / 2), Rational(0));
    visit_paths(rule, n, [&](const AssignmentPath& path, const Rational& prob) {
        pmf[static_cast<std::size_t>(tau_of_path(path) - 1)] += prob;
    });
    return pmf;
}

std::vector<double> exact_variance_U(const NormalizedScores& s) {
    const int n = s.n;
    RuleSpec rule = RuleSpec::truncated_binomial();
    std::vector<long double> first(static_cast<std::size_t>(n), 0.0L);
    std::vector<long double> second(static_cast<std::size_t>(n), 0.0L);
    visit_paths(rule, n, [&](const AssignmentPath& path, const Rational& prob) {
        const int tau = tau_of_path(path);
        const long double w = static_cast<long double>(to_double(prob));
        RuleState state;
        state.n = n;
        for (int j = 0; j < n; ++j) {
            int t = path.values[static_cast<std::size_t>(j)];
            double e = 2.0 * prob_treatment_double(rule, state) - 1.0;
            double u = (j < n - tau) ? s.s[static_cast<std::size_t>(j)] * (t - e) : 0.0;
            first[static_cast<std::size_t>(j)] += w * u;
            second[static_cast<std::size_t>(j)] += w * u * u;
            state.apply(t);
        }
    });
    std::vector<double> var(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        long double mean = first[static_cast<std::size_t>(j)];
        var[static_cast<std::size_t>(j)] =
            static_cast<double>(second[static_cast<std::size_t>(j)] - mean * mean);
    }
    return var;
}

} // namespace randrank
