#pragma once

#include <functional>
#include <string>
#include <vector>

namespace randrank {

enum class ScoreFamily { Median, Wilcoxon, VanDerWaerden, Savage };

struct RankVector {
    int n = 0;
    std::vector<int> ranks; // permutation of 1..n, ties rejected

    static RankVector identity(int n);
    void validate() const;
};

struct RawScores {
    int n = 0;
    std::vector<double> a;
};

// Centered, unit-sum-of-squares scores: sum s = 0, sum s^2 = 1.
struct NormalizedScores {
    int n = 0;
    std::vector<double> s;
};

RawScores median_scores(const RankVector& r);          // indicator of rank > (n+1)/2
RawScores wilcoxon_scores(const RankVector& r);        // the ranks themselves
RawScores van_der_waerden_scores(const RankVector& r); // normal quantiles at r/(n+1)
RawScores savage_scores(const RankVector& r);          // partial harmonic sums minus 1

RawScores family_scores(ScoreFamily family, const RankVector& r);

// Throws ValidationError when all scores are equal (zero variance).
NormalizedScores normalize(const RawScores& a);

struct ConditionRow {
    int n = 0;
    double max_s_sq = 0;      // max over all positions
    double tail_max_s_sq = 0; // max over positions in [n/2, n]; conservatively the global max
    double scaled_s1 = 0;     // tail_max_s_sq * sqrt(n)
    double scaled_s2 = 0;     // tail_max_s_sq * sqrt(n * ln n)
    bool decreasing = true;   // both scaled columns fell relative to the previous row
};

struct ConditionReport {
    std::vector<ConditionRow> rows;
    bool pass = true; // all rows decreasing
};

// Score-regularity diagnostics over a grid of even n >= 4. The scaled columns
// must shrink as n grows for the normal limit to apply; pass means both do,
// strictly, down the whole grid.
ConditionReport condition_diagnostics(ScoreFamily family, const std::vector<int>& ns);

// Same diagnostics for caller-supplied scores (e.g. deliberately bad ones).
ConditionReport condition_diagnostics(const std::function<RawScores(int)>& scores_at,
                                      const std::vector<int>& ns);

std::string score_family_name(ScoreFamily family);

// Accepts the CLI spellings: median, wilcoxon, vdw, savage.
ScoreFamily parse_score_family(const std::string& name);

} // namespace randrank
