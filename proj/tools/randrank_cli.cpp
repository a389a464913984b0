#include "randrank/errors.hpp"
#include "randrank/mc.hpp"
#include "randrank/oracle.hpp"
#include "randrank/rational.hpp"
#include "randrank/rules.hpp"
#include "randrank/scores.hpp"
#include "randrank/statistics.hpp"
#include "randrank/tau.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

namespace {

using nlohmann::json;
using namespace randrank;

constexpr const char* kSchema = "randrank/1";

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Writes either to --out or to stdout.
struct Sink {
    std::ofstream file;
    std::ostream* out = &std::cout;

    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file.open(path, std::ios::binary);
            if (!file) throw ValidationError("cannot open output file: " + path);
            out = &file;
        }
    }
    std::ostream& stream() { return *out; }
};

struct RuleOptions {
    std::string rule;
    unsigned alpha = 0, beta = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--rule", rule, "randomization rule: complete, random-allocation, tbd, wei")
            ->required();
        cmd->add_option("--alpha", alpha, "wei urn alpha");
        cmd->add_option("--beta", beta, "wei urn beta");
    }
    RuleSpec spec() const {
        RuleSpec s;
        s.kind = parse_rule_kind(rule);
        s.alpha = alpha;
        s.beta = beta;
        return s;
    }
};

json rule_json(const RuleSpec& spec) {
    json j{{"name", rule_name(spec.kind)}};
    if (spec.kind == RuleKind::WeiUrn) {
        j["alpha"] = spec.alpha;
        j["beta"] = spec.beta;
    }
    return j;
}

void cmd_simulate(const RuleOptions& rule, const std::string& scores, int n, long long m,
                  std::uint64_t seed, const std::string& stat, const std::string& rank_mode,
                  const std::string& format, const std::string& out_path) {
    SimConfig config;
    config.rule = rule.spec();
    config.family = parse_score_family(scores);
    config.n = n;
    config.replications = m;
    config.seed = seed;
    config.statistic = parse_statistic_kind(stat);
    if (rank_mode == "shuffle")
        config.rank_mode = RankMode::Shuffle;
    else if (rank_mode == "identity")
        config.rank_mode = RankMode::Identity;
    else
        throw ValidationError("unknown rank mode: " + rank_mode);

    std::vector<double> sample = run_simulation(config);
    Sink sink(out_path);
    if (format == "csv") {
        sink.stream() << "value\n";
        for (double v : sample) sink.stream() << fmt(v) << '\n';
    } else if (format == "json") {
        NormalityReport rep = normality_report(sample);
        json quantiles = json::array();
        for (std::size_t q = 0; q < rep.quantiles.size(); ++q)
            quantiles.push_back({{"p", NormalityReport::quantile_probs[q]},
                                 {"value", rep.quantiles[q]}});
        json j{{"schema", kSchema},
               {"config",
                {{"rule", rule_json(config.rule)},
                 {"scores", scores},
                 {"n", n},
                 {"m", m},
                 {"seed", seed},
                 {"statistic", statistic_name(config.statistic)},
                 {"rank_mode", rank_mode}}},
               {"report",
                {{"ks", rep.ks},
                 {"mean", rep.mean},
                 {"variance", rep.variance},
                 {"variance_convention", "population"},
                 {"skewness", rep.skewness},
                 {"excess_kurtosis", rep.excess_kurtosis},
                 {"quantiles", quantiles},
                 {"m", rep.m}}}};
        sink.stream() << j.dump(2) << '\n';
    } else {
        throw ValidationError("unknown format: " + format);
    }
}

void cmd_exact(const RuleOptions& rule, const std::string& scores, int n,
               const std::string& stat, const std::string& format, const std::string& out_path) {
    RuleSpec spec = rule.spec();
    StatisticKind kind = parse_statistic_kind(stat);
    spec.validate(n);
    NormalizedScores s = normalize(family_scores(parse_score_family(scores), RankVector::identity(n)));
    ExactStatDistribution dist = exact_statistic_distribution(spec, kind, s);

    Sink sink(out_path);
    if (format == "csv") {
        sink.stream() << "value,prob\n";
        for (std::size_t i = 0; i < dist.support.size(); ++i)
            sink.stream() << fmt(dist.support[i]) << ',' << to_fraction_string(dist.probs[i])
                          << '\n';
    } else if (format == "json") {
        json support = json::array(), probs = json::array();
        for (std::size_t i = 0; i < dist.support.size(); ++i) {
            support.push_back(dist.support[i]);
            probs.push_back(to_fraction_string(dist.probs[i]));
        }
        json j{{"schema", kSchema},      {"rule", rule_json(spec)}, {"n", n},
               {"scores", scores},      {"statistic", stat},       {"support", support},
               {"probs", probs}};
        sink.stream() << j.dump(2) << '\n';
    } else {
        throw ValidationError("unknown format: " + format);
    }
}

void cmd_tau(int n, const std::string& format, const std::string& out_path) {
    TauPmf pmf = tau_pmf(n);
    Sink sink(out_path);
    if (format == "csv") {
        sink.stream() << "k,p_k\n";
        for (std::size_t i = 0; i < pmf.p.size(); ++i)
            sink.stream() << (i + 1) << ',' << fmt(pmf.p[i]) << '\n';
    } else if (format == "json") {
        json j{{"schema", kSchema},
               {"n", n},
               {"pmf", pmf.p},
               {"mean", tau_mean(n)},
               {"limit_distance", tau_limit_distance(n)}};
        sink.stream() << j.dump(2) << '\n';
    } else {
        throw ValidationError("unknown format: " + format);
    }
}

void cmd_scores(const std::string& scores, int n, const std::string& format,
                const std::string& out_path) {
    ScoreFamily family = parse_score_family(scores);
    RawScores raw = family_scores(family, RankVector::identity(n));
    NormalizedScores s = normalize(raw);

    Sink sink(out_path);
    if (format == "csv") {
        sink.stream() << "rank,raw,normalized\n";
        for (int j = 0; j < n; ++j)
            sink.stream() << (j + 1) << ',' << fmt(raw.a[static_cast<std::size_t>(j)]) << ','
                          << fmt(s.s[static_cast<std::size_t>(j)]) << '\n';
    } else if (format == "json") {
        json j{{"schema", kSchema},
               {"scores", scores},
               {"n", n},
               {"raw", raw.a},
               {"normalized", s.s}};
        sink.stream() << j.dump(2) << '\n';
    } else {
        throw ValidationError("unknown format: " + format);
    }
}

void cmd_diagnose(const std::string& scores, const std::vector<int>& ns,
                  const std::string& format, const std::string& out_path) {
    ConditionReport report;
    if (scores == "spike") {
        // one dominant tail score, fixed across n: violates every decay condition
        auto spike = [](int n) {
            RawScores raw{n, std::vector<double>(static_cast<std::size_t>(n), 0.0)};
            raw.a.back() = 1.0;
            return raw;
        };
        report = condition_diagnostics(spike, ns);
    } else {
        report = condition_diagnostics(parse_score_family(scores), ns);
    }

    Sink sink(out_path);
    if (format == "csv") {
        sink.stream() << "n,max_s_sq,tail_max_s_sq,scaled_s1,scaled_s2,verdict\n";
        for (const ConditionRow& row : report.rows)
            sink.stream() << row.n << ',' << fmt(row.max_s_sq) << ',' << fmt(row.tail_max_s_sq)
                          << ',' << fmt(row.scaled_s1) << ',' << fmt(row.scaled_s2) << ','
                          << (row.decreasing ? "pass" : "fail") << '\n';
    } else if (format == "json") {
        json rows = json::array();
        for (const ConditionRow& row : report.rows)
            rows.push_back({{"n", row.n},
                            {"max_s_sq", row.max_s_sq},
                            {"tail_max_s_sq", row.tail_max_s_sq},
                            {"scaled_s1", row.scaled_s1},
                            {"scaled_s2", row.scaled_s2},
                            {"decreasing", row.decreasing}});
        json j{{"schema", kSchema},
               {"scores", scores},
               {"rows", rows},
               {"verdict", report.pass ? "pass" : "fail"}};
        sink.stream() << j.dump(2) << '\n';
    } else {
        throw ValidationError("unknown format: " + format);
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"randomization-inference engine: sequential two-arm designs, "
                 "rank statistics, exact enumeration, Monte Carlo normality checks"};
    app.require_subcommand(1);

    std::string scores = "wilcoxon", stat = "plain", rank_mode = "shuffle";
    std::string format = "json", out_path;
    int n = 0;
    long long m = 0;
    std::uint64_t seed = 42;
    std::vector<int> ns{64, 128, 256, 512, 1024, 2048, 4096, 8192, 16384};
    RuleOptions sim_rule, exact_rule;

    CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo sample of a rank statistic");
    sim_rule.attach(simulate);
    simulate->add_option("--scores", scores, "score family: median, wilcoxon, vdw, savage");
    simulate->add_option("--n", n, "number of patients (even)")->required();
    simulate->add_option("--m", m, "number of replicates")->required();
    simulate->add_option("--seed", seed, "random seed");
    simulate->add_option("--stat", stat, "statistic: plain, centered, tbd");
    simulate->add_option("--rank-mode", rank_mode, "rank handling: shuffle, identity");

    CLI::App* exact = app.add_subcommand("exact", "exact statistic distribution by enumeration");
    exact_rule.attach(exact);
    exact->add_option("--scores", scores, "score family");
    exact->add_option("--n", n, "number of patients (even, <= 20)")->required();
    exact->add_option("--stat", stat, "statistic: plain, centered, tbd");

    CLI::App* tau = app.add_subcommand("tau", "tail-length distribution of the truncated binomial");
    tau->add_option("--n", n, "number of patients (even)")->required();

    CLI::App* score_cmd = app.add_subcommand("scores", "raw and normalized score table");
    score_cmd->add_option("--scores", scores, "score family");
    score_cmd->add_option("--n", n, "number of scores")->required();

    CLI::App* diagnose = app.add_subcommand("diagnose", "score-regularity diagnostics over n");
    diagnose->add_option("--scores", scores, "score family, or 'spike' for a failing example");
    diagnose->add_option("--ns", ns, "grid of even n values")->delimiter(',');

    for (CLI::App* cmd : {simulate, exact, tau, score_cmd, diagnose}) {
        cmd->add_option("--format", format, "output format: csv, json");
        cmd->add_option("--out", out_path, "output file (default: stdout)");
    }

    try {
        app.parse(argc, argv);
        if (simulate->parsed())
            cmd_simulate(sim_rule, scores, n, m, seed, stat, rank_mode, format, out_path);
        else if (exact->parsed())
            cmd_exact(exact_rule, scores, n, stat, format, out_path);
        else if (tau->parsed())
            cmd_tau(n, format, out_path);
        else if (score_cmd->parsed())
            cmd_scores(scores, n, format, out_path);
        else if (diagnose->parsed())
            cmd_diagnose(scores, ns, format, out_path);
        return 0;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return 1;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const CapacityError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
