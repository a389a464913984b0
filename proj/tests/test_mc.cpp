#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "randrank/errors.hpp"
#include "randrank/mc.hpp"
#include "randrank/normal.hpp"

#include <cmath>
#include <cstdlib>

using namespace randrank;

namespace {

SimConfig base_config() {
    SimConfig c;
    c.rule = RuleSpec::complete();
    c.family = ScoreFamily::Wilcoxon;
    c.n = 20;
    c.replications = 2000;
    c.seed = 99;
    c.statistic = StatisticKind::Plain;
    c.rank_mode = RankMode::Shuffle;
    return c;
}

} // namespace

TEST_CASE("same config reproduces the identical sample") {
    SimConfig c = base_config();
    auto a = run_simulation(c);
    auto b = run_simulation(c);
    REQUIRE(a.size() == 2000);
    CHECK(a == b); // bitwise

    c.seed = 100;
    auto other = run_simulation(c);
    CHECK(a != other);
}

TEST_CASE("worker count does not change the sample") {
    SimConfig c = base_config();
    setenv("RANDRANK_THREADS", "1", 1);
    auto one = run_simulation(c);
    setenv("RANDRANK_THREADS", "4", 1);
    auto four = run_simulation(c);
    setenv("RANDRANK_THREADS", "8", 1);
    auto eight = run_simulation(c);
    unsetenv("RANDRANK_THREADS");
    auto def = run_simulation(c);
    CHECK(one == four);
    CHECK(four == eight);
    CHECK(eight == def);
}

TEST_CASE("thread override must be a positive integer") {
    SimConfig c = base_config();
    c.replications = 10;
    for (const char* bad : {"0", "-2", "abc", ""}) {
        setenv("RANDRANK_THREADS", bad, 1);
        CHECK_THROWS_AS(run_simulation(c), ValidationError);
    }
    unsetenv("RANDRANK_THREADS");
}

TEST_CASE("config validation") {
    SimConfig c = base_config();
    c.replications = 0;
    CHECK_THROWS_AS(c.validate(), ValidationError);

    c = base_config();
    c.statistic = StatisticKind::TbdStopped; // needs the matching rule
    CHECK_THROWS_AS(c.validate(), ValidationError);
    c.rule = RuleSpec::truncated_binomial();
    CHECK_NOTHROW(c.validate());

    c = base_config();
    c.n = 7;
    CHECK_THROWS_AS(c.validate(), ValidationError);

    c = base_config();
    c.custom_scores = {1.0, 2.0, 3.0}; // wrong length for n = 20
    CHECK_THROWS_AS(c.validate(), ValidationError);
}

TEST_CASE("summary statistics of a two-point sample") {
    NormalityReport r = normality_report({-1.0, 1.0});
    CHECK(r.mean == doctest::Approx(0.0).scale(1));
    CHECK(r.variance == doctest::Approx(1.0));
    CHECK(r.skewness == doctest::Approx(0.0).scale(1));
    CHECK(r.m == 2);
    CHECK_THROWS_AS(normality_report({3.0}), ValidationError);
}

TEST_CASE("kolmogorov distance is tiny for an exact quantile grid") {
    const long long m = 100000;
    std::vector<double> grid(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i)
        grid[static_cast<std::size_t>(i)] = normal_quantile((i + 0.5) / m);
    NormalityReport r = normality_report(grid);
    CHECK(r.ks <= 1.0 / m + 1e-12);
    CHECK(r.mean == doctest::Approx(0.0).scale(1).epsilon(1e-3));
    CHECK(r.variance == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(r.quantiles[3] == doctest::Approx(0.0).scale(1).epsilon(1e-4));
    CHECK(r.quantiles[1] == doctest::Approx(-1.6449).epsilon(1e-3));
}

TEST_CASE("kolmogorov distance of genuine normal draws stays in band") {
    const long long m = 40000;
    SplitMix64 rng(7);
    std::vector<double> draws(static_cast<std::size_t>(m));
    for (auto& d : draws) d = normal_quantile(rng.uniform());
    NormalityReport r = normality_report(draws);
    // 3x the asymptotic 95% KS quantile 1.36/sqrt(m)
    CHECK(r.ks <= 3.0 * 1.36 / std::sqrt(static_cast<double>(m)));
    CHECK(std::fabs(r.mean) < 0.02);
    CHECK(r.variance == doctest::Approx(1.0).epsilon(0.03));
}

TEST_CASE("qq points against a normal sample lie on the diagonal") {
    const long long m = 20000;
    std::vector<double> grid(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i)
        grid[static_cast<std::size_t>(i)] = normal_quantile((i + 0.5) / m);

    // when the point count equals the sample size the plotting positions hit
    // the construction grid exactly
    auto aligned = qq_points(grid, static_cast<int>(m));
    REQUIRE(aligned.size() == static_cast<std::size_t>(m));
    for (const auto& [theory, empirical] : aligned)
        CHECK(empirical == doctest::Approx(theory).scale(1).epsilon(1e-12));

    // a coarser grid reads off nearby order statistics; the offset is at most
    // 1/m in probability, so about (1/m)/phi(z) in value
    auto pts = qq_points(grid, 101);
    REQUIRE(pts.size() == 101);
    double prev = pts.front().second;
    for (const auto& [theory, empirical] : pts) {
        CHECK(empirical == doctest::Approx(theory).scale(1).epsilon(5e-3));
        CHECK(empirical >= prev);
        prev = empirical;
    }
    CHECK_THROWS_AS(qq_points(grid, 0), ValidationError);
}

TEST_CASE("complete randomization statistic has unit variance") {
    SimConfig c = base_config();
    c.n = 50;
    c.replications = 100000;
    NormalityReport r = normality_report(run_simulation(c));
    CHECK(std::fabs(r.mean) < 0.01);
    CHECK(r.variance == doctest::Approx(1.0).epsilon(0.02));
    CHECK(r.ks < 0.02);
}

TEST_CASE("stopped statistic simulates only under its own rule") {
    SimConfig c = base_config();
    c.rule = RuleSpec::truncated_binomial();
    c.statistic = StatisticKind::TbdStopped;
    c.n = 30;
    c.replications = 20000;
    NormalityReport r = normality_report(run_simulation(c));
    CHECK(std::fabs(r.mean) < 0.05);
    CHECK(r.variance == doctest::Approx(1.0).epsilon(0.1));
}

TEST_CASE("final conditional expectation decays for the urn") {
    DecayReport d =
        cond_expectation_decay(RuleSpec::wei_urn(1, 1), {50, 200, 800}, 10000, 11);
    REQUIRE(d.rows.size() == 3);
    CHECK(d.rows[0].first == 50);
    CHECK(d.rows[0].second > d.rows[1].second);
    CHECK(d.rows[1].second > d.rows[2].second);
    CHECK(d.rows[2].second > 0.0);
}

TEST_CASE("final conditional expectation is exactly zero for coin flips") {
    DecayReport d = cond_expectation_decay(RuleSpec::complete(), {50, 200}, 2000, 3);
    for (const auto& [n, avg] : d.rows) CHECK(avg == 0.0);
}

TEST_CASE("final conditional expectation does not vanish for truncated binomial") {
    DecayReport d = cond_expectation_decay(RuleSpec::truncated_binomial(), {50}, 5000, 5);
    CHECK(d.rows[0].second > 0.05);
}
