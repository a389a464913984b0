#include "randrank/statistics.hpp"

#include "randrank/errors.hpp"

#include <cmath>
#include <numeric>

namespace randrank {

namespace {

void check_path(const AssignmentPath& path) {
    if (path.n < 1 || static_cast<int>(path.values.size()) != path.n)
        throw ValidationError("path length does not match n");
    for (int t : path.values)
        if (t != 1 && t != -1)
            throw ValidationError("path entries must be +1 or -1");
}

void check_lengths(int sn, const AssignmentPath& path) {
    check_path(path);
    if (sn != path.n) throw ValidationError("scores and path have different lengths");
}

} // namespace

double linear_rank_statistic(const RawScores& a, const AssignmentPath& path) {
    check_path(path);
    if (a.n != path.n || static_cast<int>(a.a.size()) != a.n)
        throw ValidationError("scores and path have different lengths");
    double mean = std::accumulate(a.a.begin(), a.a.end(), 0.0) / a.n;
    double acc = 0.0;
    for (int j = 0; j < a.n; ++j)
        acc += (a.a[static_cast<std::size_t>(j)] - mean) * path.values[static_cast<std::size_t>(j)];
    return acc;
}

double normalized_statistic(const NormalizedScores& s, const AssignmentPath& path) {
    check_lengths(s.n, path);
    double acc = 0.0;
    for (int j = 0; j < s.n; ++j)
        acc += s.s[static_cast<std::size_t>(j)] * path.values[static_cast<std::size_t>(j)];
    return acc;
}

double centered_statistic(const RuleSpec& rule, const NormalizedScores& s,
                          const AssignmentPath& path) {
    check_lengths(s.n, path);
    rule.validate(path.n);
    RuleState state;
    state.n = path.n;
    double acc = 0.0;
    for (int j = 0; j < path.n; ++j) {
        int t = path.values[static_cast<std::size_t>(j)];
        double p = prob_treatment_double(rule, state);
        // p hits exactly 0.0 or 1.0 whenever a branch is impossible
        if ((t > 0 && p == 0.0) || (t < 0 && p == 1.0))
            throw ValidationError("path has probability zero under this rule");
        acc += s.s[static_cast<std::size_t>(j)] * (t - (2.0 * p - 1.0));
        state.apply(t);
    }
    return acc;
}

int tau_of_path(const AssignmentPath& path) {
    check_path(path);
    if (path.n % 2 != 0)
        throw ValidationError("tau needs an even-length path");
    int sum = 0;
    for (int t : path.values) sum += t;
    if (sum != 0)
        throw ValidationError("tau is defined for balanced paths only");
    int plus = 0, minus = 0;
    for (int j = 0; j < path.n; ++j) {
        (path.values[static_cast<std::size_t>(j)] > 0 ? plus : minus) += 1;
        if (plus == path.n / 2 || minus == path.n / 2)
            return path.n - (j + 1);
    }
    throw std::logic_error("balanced path never filled an arm");
}

TbdDenominator tbd_denominator(const NormalizedScores& s, const TauPmf& pmf) {
    if (s.n != pmf.n || static_cast<int>(s.s.size()) != s.n)
        throw ValidationError("scores and tau pmf have different n");
    const int n = s.n;
    // cdf[k] = P(tau <= k)
    std::vector<double> cdf(static_cast<std::size_t>(n / 2) + 1, 0.0);
    for (int k = 1; k <= n / 2; ++k)
        cdf[static_cast<std::size_t>(k)] =
            cdf[static_cast<std::size_t>(k - 1)] + pmf.p[static_cast<std::size_t>(k - 1)];
    double v = 0.0;
    for (int j = 1; j <= n; ++j) {
        double sq = s.s[static_cast<std::size_t>(j - 1)] * s.s[static_cast<std::size_t>(j - 1)];
        if (j <= n / 2)
            v += sq;
        else if (j < n)
            v += sq * cdf[static_cast<std::size_t>(n - j)];
        // j == n contributes P(tau <= 0) = 0
    }
    return {n, v};
}

double tbd_statistic(const NormalizedScores& s, const AssignmentPath& path, const TauPmf& pmf) {
    check_lengths(s.n, path);
    const int tau = tau_of_path(path);
    double num = 0.0;
    for (int j = 0; j < path.n - tau; ++j)
        num += s.s[static_cast<std::size_t>(j)] * path.values[static_cast<std::size_t>(j)];
    return num / std::sqrt(tbd_denominator(s, pmf).v);
}

std::complex<double> characteristic_product(const NormalizedScores& s,
                                            const AssignmentPath& path, double lambda) {
    check_lengths(s.n, path);
    if (!(lambda > 0.0) || !std::isfinite(lambda))
        throw ValidationError("lambda must be positive and finite");
    std::complex<double> prod(1.0, 0.0);
    for (int j = 0; j < s.n; ++j)
        prod *= std::complex<double>(
            1.0, lambda * s.s[static_cast<std::size_t>(j)] * path.values[static_cast<std::size_t>(j)]);
    return prod;
}

std::string statistic_name(StatisticKind kind) {
    switch (kind) {
    case StatisticKind::Plain: return "plain";
    case StatisticKind::Centered: return "centered";
    case StatisticKind::TbdStopped: return "tbd";
    }
    throw ValidationError("unknown statistic kind");
}

StatisticKind parse_statistic_kind(const std::string& name) {
    if (name == "plain") return StatisticKind::Plain;
    if (name == "centered") return StatisticKind::Centered;
    if (name == "tbd") return StatisticKind::TbdStopped;
    throw ValidationError("unknown statistic: " + name);
}

} // namespace randrank
