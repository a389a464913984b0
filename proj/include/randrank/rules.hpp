#pragma once

#include "randrank/rational.hpp"
#include "randrank/rng.hpp"

#include <string>
#include <vector>

namespace randrank {

enum class RuleKind {
    CompleteRandomization, // fair coin per patient
    RandomAllocation,      // uniform over balanced sequences, n even
    TruncatedBinomial,     // fair coin until one arm fills, n even
    WeiUrn,                // adaptive urn U(alpha, beta)
};

struct RuleSpec {
    RuleKind kind = RuleKind::CompleteRandomization;
    unsigned alpha = 0; // Wei urn only
    unsigned beta = 0;

    static RuleSpec complete() { return {RuleKind::CompleteRandomization, 0, 0}; }
    static RuleSpec random_allocation() { return {RuleKind::RandomAllocation, 0, 0}; }
    static RuleSpec truncated_binomial() { return {RuleKind::TruncatedBinomial, 0, 0}; }
    static RuleSpec wei_urn(unsigned alpha, unsigned beta) {
        return {RuleKind::WeiUrn, alpha, beta};
    }

    // Throws ValidationError for bad parameters or an n the rule cannot serve.
    void validate(int n) const;
};

// Assignments made so far. treatment counts +1, placebo counts -1,
// assigned == treatment + placebo.
struct RuleState {
    int n = 0;
    int assigned = 0;
    int treatment = 0;
    int placebo = 0;

    void apply(int assignment) {
        (assignment > 0 ? treatment : placebo) += 1;
        assigned += 1;
    }
};

struct AssignmentPath {
    int n = 0;
    std::vector<int> values; // entries are +1 / -1
};

// Probability that the next assignment is treatment (+1), exact.
Rational prob_treatment(const RuleSpec& rule, const RuleState& state);

// Same value as prob_treatment but in plain doubles for the sampling loop.
double prob_treatment_double(const RuleSpec& rule, const RuleState& state);

// Conditional expectation of the next +1/-1 assignment: 2p - 1.
Rational cond_expectation(const RuleSpec& rule, const RuleState& state);

// Draws the next assignment from u ~ U[0,1): +1 iff u < p. Advances state.
int next_assignment(const RuleSpec& rule, RuleState& state, double u);

AssignmentPath sample_sequence(const RuleSpec& rule, int n, SplitMix64& rng);

// Exact probability of observing the whole path under the rule.
Rational path_probability(const RuleSpec& rule, const AssignmentPath& path);

std::string rule_name(RuleKind kind);

// Accepts the CLI spellings: complete, random-allocation, tbd, wei.
RuleKind parse_rule_kind(const std::string& name);

} // namespace randrank
