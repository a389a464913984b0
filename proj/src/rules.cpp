#include "randrank/rules.hpp"

#include "randrank/errors.hpp"

#include <stdexcept>

namespace randrank {

void RuleSpec::validate(int n) const {
    if (n < 2 || n % 2 != 0)
        throw ValidationError("n must be a positive even integer, got " + std::to_string(n));
    if (kind == RuleKind::WeiUrn && alpha + beta < 1)
        throw ValidationError("wei urn requires alpha + beta >= 1");
}

namespace {

void validate_state(const RuleSpec& rule, const RuleState& state) {
    rule.validate(state.n);
    if (state.treatment < 0 || state.placebo < 0 ||
        state.assigned != state.treatment + state.placebo)
        throw ValidationError("inconsistent rule state counts");
    if (state.assigned >= state.n)
        throw ValidationError("rule state already has n assignments");
    if (rule.kind == RuleKind::RandomAllocation || rule.kind == RuleKind::TruncatedBinomial) {
        if (state.treatment > state.n / 2 || state.placebo > state.n / 2)
            throw ValidationError("arm count exceeds n/2 under a restricted rule");
    }
}

} // namespace

Rational prob_treatment(const RuleSpec& rule, const RuleState& state) {
    validate_state(rule, state);
    const int n = state.n, j = state.assigned;
    switch (rule.kind) {
    case RuleKind::CompleteRandomization:
        return Rational(1, 2);
    case RuleKind::RandomAllocation: {
        int num = n / 2 - state.treatment;
        if (num <= 0) return 0;
        return Rational(num, n - j);
    }
    case RuleKind::TruncatedBinomial:
        if (state.treatment == n / 2) return 0;
        if (state.placebo == n / 2) return 1;
        return Rational(1, 2);
    case RuleKind::WeiUrn: {
        if (j == 0) return Rational(1, 2); // urn ratio alpha/2alpha, or 0/0 when alpha=0
        long num = static_cast<long>(rule.alpha) + static_cast<long>(rule.beta) * state.placebo;
        long den = 2L * rule.alpha + static_cast<long>(rule.beta) * j;
        return Rational(num, den);
    }
    }
    throw std::logic_error("unknown rule kind");
}

double prob_treatment_double(const RuleSpec& rule, const RuleState& state) {
    const int n = state.n, j = state.assigned;
    switch (rule.kind) {
    case RuleKind::CompleteRandomization:
        return 0.5;
    case RuleKind::RandomAllocation: {
        int num = n / 2 - state.treatment;
        if (num <= 0) return 0.0;
        return static_cast<double>(num) / (n - j);
    }
    case RuleKind::TruncatedBinomial:
        if (state.treatment == n / 2) return 0.0;
        if (state.placebo == n / 2) return 1.0;
        return 0.5;
    case RuleKind::WeiUrn: {
        if (j == 0) return 0.5;
        double num = static_cast<double>(rule.alpha) + static_cast<double>(rule.beta) * state.placebo;
        double den = 2.0 * rule.alpha + static_cast<double>(rule.beta) * j;
        return num / den;
    }
    }
    throw std::logic_error("unknown rule kind");
}

Rational cond_expectation(const RuleSpec& rule, const RuleState& state) {
    return 2 * prob_treatment(rule, state) - 1;
}

int next_assignment(const RuleSpec& rule, RuleState& state, double u) {
    validate_state(rule, state);
    int t = u < prob_treatment_double(rule, state) ? 1 : -1;
    state.apply(t);
    return t;
}

AssignmentPath sample_sequence(const RuleSpec& rule, int n, SplitMix64& rng) {
    rule.validate(n);
    AssignmentPath path;
    path.n = n;
    path.values.reserve(static_cast<std::size_t>(n));
    RuleState state;
    state.n = n;
    for (int j = 0; j < n; ++j)
        path.values.push_back(next_assignment(rule, state, rng.uniform()));
    return path;
}

Rational path_probability(const RuleSpec& rule, const AssignmentPath& path) {
    rule.validate(path.n);
    if (static_cast<int>(path.values.size()) != path.n)
        throw ValidationError("path length does not match n");
    Rational prob = 1;
    RuleState state;
    state.n = path.n;
    for (int t : path.values) {
        if (t != 1 && t != -1)
            throw ValidationError("path entries must be +1 or -1");
        Rational p = prob_treatment(rule, state);
        prob *= (t > 0) ? p : 1 - p;
        if (prob == 0) return 0; // impossible continuation, counts may overflow caps
        state.apply(t);
    }
    return prob;
}

std::string rule_name(RuleKind kind) {
    switch (kind) {
    case RuleKind::CompleteRandomization: return "complete";
    case RuleKind::RandomAllocation: return "random-allocation";
    case RuleKind::TruncatedBinomial: return "tbd";
    case RuleKind::WeiUrn: return "wei";
    }
    throw std::logic_error("unknown rule kind");
}

RuleKind parse_rule_kind(const std::string& name) {
    if (name == "complete") return RuleKind::CompleteRandomization;
    if (name == "random-allocation") return RuleKind::RandomAllocation;
    if (name == "tbd") return RuleKind::TruncatedBinomial;
    if (name == "wei") return RuleKind::WeiUrn;
    throw ValidationError("unknown rule: " + name);
}

} // namespace randrank
