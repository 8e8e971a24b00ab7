#pragma once

#include <span>
#include <vector>

#include "ltd/types.hpp"

namespace ltd {

// Probabilities are clamped into [kRateClamp, 1 - kRateClamp] before any
// log/odds transform; the transforms diverge at 0 and 1.
inline constexpr double kRateClamp = 1e-6;

// Per-source error rates plus the prior probability that a fact is true.
struct ReliabilityModel {
    std::vector<double> tpr;
    std::vector<double> fpr;
    double prevalence = 0.5;

    std::size_t source_count() const { return tpr.size(); }
};

// One-hidden-unit RBM over source votes. The hidden unit is the truth of a
// fact; each source contributes one visible unit. The hidden bias is kept
// split into a global part and one per-source share so that facts claimed by
// only a subset of sources can drop the absent sources' shares.
struct RbmParameters {
    std::vector<double> visible_bias;  // a_s
    std::vector<double> weight;        // w_s
    std::vector<double> hidden_bias_share;  // b_s, per source
    double hidden_bias_global = 0.0;        // b_G

    std::size_t source_count() const { return weight.size(); }
};

ReliabilityModel clamp_rates(ReliabilityModel m);

RbmParameters model_to_rbm(const ReliabilityModel& m);
ReliabilityModel rbm_to_model(const RbmParameters& r);

// Hidden-bias share of one source, computed directly from its rates in log
// space so near-one rates do not lose precision: log(1-tpr) - log(1-fpr).
double hidden_bias_share_from_rates(double tpr, double fpr);

// Probability that the fact is true given the votes of the sources that
// claimed it. Sources absent from `claims` contribute neither weight nor
// hidden-bias share. An empty claim set yields the prior prevalence.
double plausibility(const RbmParameters& r, std::span<const SourceClaim> claims);

// Hidden bias restricted to the claiming sources: b_G + sum of their shares.
double restricted_hidden_bias(const RbmParameters& r, std::span<const SourceClaim> claims);

// Normalize per-value plausibilities of one attribute so they sum to 1,
// proportionally to their odds p/(1-p). Order-preserving.
std::vector<double> adjust_categorical(std::span<const double> plausibilities);

// Same distribution computed as a softmax over the linear scores
// T_c = restricted_bias + sum_s v_s^c * w_s, with max-subtraction.
std::vector<double> categorical_plausibility(
    const RbmParameters& r, std::span<const std::vector<SourceClaim>> per_value_claims);

// Swapping the meaning of the hidden unit (true <-> false) swaps each
// source's rates and complements the prevalence.
ReliabilityModel dual_model(ReliabilityModel m);

} // namespace ltd
