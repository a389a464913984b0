#include "randrank/scores.hpp"

#include "randrank/errors.hpp"
#include "randrank/normal.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace randrank {

RankVector RankVector::identity(int n) {
    RankVector r;
    r.n = n;
    r.ranks.resize(static_cast<std::size_t>(n));
    std::iota(r.ranks.begin(), r.ranks.end(), 1);
    return r;
}

void RankVector::validate() const {
    if (n < 1) throw ValidationError("rank vector needs n >= 1");
    if (static_cast<int>(ranks.size()) != n)
        throw ValidationError("rank vector length does not match n");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int r : ranks) {
        if (r < 1 || r > n)
            throw ValidationError("rank out of range: " + std::to_string(r));
        if (seen[static_cast<std::size_t>(r - 1)]++)
            throw ValidationError("tied rank: " + std::to_string(r) +
                                  " (ties are not supported)");
    }
}

RawScores median_scores(const RankVector& r) {
    r.validate();
    RawScores out{r.n, {}};
    out.a.reserve(r.ranks.size());
    for (int rk : r.ranks)
        out.a.push_back(2 * rk > r.n + 1 ? 1.0 : 0.0);
    return out;
}

RawScores wilcoxon_scores(const RankVector& r) {
    r.validate();
    RawScores out{r.n, {}};
    out.a.reserve(r.ranks.size());
    for (int rk : r.ranks)
        out.a.push_back(static_cast<double>(rk));
    return out;
}

RawScores van_der_waerden_scores(const RankVector& r) {
    r.validate();
    RawScores out{r.n, {}};
    out.a.reserve(r.ranks.size());
    for (int rk : r.ranks)
        out.a.push_back(normal_quantile(static_cast<double>(rk) / (r.n + 1)));
    return out;
}

RawScores savage_scores(const RankVector& r) {
    r.validate();
    // partial[k] = sum_{i<=k} 1/(n-i+1), forward accumulation
    std::vector<double> partial(static_cast<std::size_t>(r.n));
    double acc = 0.0;
    for (int k = 1; k <= r.n; ++k) {
        acc += 1.0 / (r.n - k + 1);
        partial[static_cast<std::size_t>(k - 1)] = acc;
    }
    RawScores out{r.n, {}};
    out.a.reserve(r.ranks.size());
    for (int rk : r.ranks)
        out.a.push_back(partial[static_cast<std::size_t>(rk - 1)] - 1.0);
    return out;
}

RawScores family_scores(ScoreFamily family, const RankVector& r) {
    switch (family) {
    case ScoreFamily::Median: return median_scores(r);
    case ScoreFamily::Wilcoxon: return wilcoxon_scores(r);
    case ScoreFamily::VanDerWaerden: return van_der_waerden_scores(r);
    case ScoreFamily::Savage: return savage_scores(r);
    }
    throw ValidationError("unknown score family");
}

NormalizedScores normalize(const RawScores& raw) {
    if (raw.n < 1 || static_cast<int>(raw.a.size()) != raw.n)
        throw ValidationError("raw scores length does not match n");
    for (double v : raw.a)
        if (!std::isfinite(v)) throw ValidationError("raw scores must be finite");
    double mean = std::accumulate(raw.a.begin(), raw.a.end(), 0.0) / raw.n;
    double ssq = 0.0;
    for (double v : raw.a) ssq += (v - mean) * (v - mean);
    if (ssq <= 0.0)
        throw ValidationError("degenerate scores: zero variance after centering");
    double inv = 1.0 / std::sqrt(ssq);
    NormalizedScores out{raw.n, {}};
    out.s.reserve(raw.a.size());
    for (double v : raw.a) out.s.push_back((v - mean) * inv);
    return out;
}

ConditionReport condition_diagnostics(const std::function<RawScores(int)>& scores_at,
                                      const std::vector<int>& ns) {
    if (ns.empty()) throw ValidationError("diagnostics need at least one n");
    ConditionReport report;
    report.rows.reserve(ns.size());
    for (int n : ns) {
        if (n < 4 || n % 2 != 0)
            throw ValidationError("diagnostics need even n >= 4, got " + std::to_string(n));
        NormalizedScores s = normalize(scores_at(n));
        double mx = 0.0;
        for (double v : s.s) mx = std::max(mx, v * v);
        ConditionRow row;
        row.n = n;
        row.max_s_sq = mx;
        // Ranks are a permutation, so the worst placement of large scores
        // puts the global max in the tail half; report that worst case.
        row.tail_max_s_sq = mx;
        row.scaled_s1 = row.tail_max_s_sq * std::sqrt(static_cast<double>(n));
        row.scaled_s2 = row.tail_max_s_sq * std::sqrt(n * std::log(static_cast<double>(n)));
        if (!report.rows.empty()) {
            const ConditionRow& prev = report.rows.back();
            row.decreasing = row.scaled_s1 < prev.scaled_s1 && row.scaled_s2 < prev.scaled_s2;
            if (!row.decreasing) report.pass = false;
        }
        report.rows.push_back(row);
    }
    return report;
}

ConditionReport condition_diagnostics(ScoreFamily family, const std::vector<int>& ns) {
    return condition_diagnostics(
        [family](int n) { return family_scores(family, RankVector::identity(n)); }, ns);
}

std::string score_family_name(ScoreFamily family) {
    switch (family) {
    case ScoreFamily::Median: return "median";
    case ScoreFamily::Wilcoxon: return "wilcoxon";
    case ScoreFamily::VanDerWaerden: return "vdw";
    case ScoreFamily::Savage: return "savage";
    }
    throw ValidationError("unknown score family");
}

ScoreFamily parse_score_family(const std::string& name) {
    if (name == "median") return ScoreFamily::Median;
    if (name == "wilcoxon") return ScoreFamily::Wilcoxon;
    if (name == "vdw") return ScoreFamily::VanDerWaerden;
    if (name == "savage") return ScoreFamily::Savage;
    throw ValidationError("unknown score family: " + name);
}

} // namespace randrank
