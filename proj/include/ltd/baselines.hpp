#pragma once

#include "ltd/config.hpp"
#include "ltd/dataset.hpp"
#include "ltd/estimate.hpp"

namespace ltd {

// Vote fraction per fact; no source model. Unclaimed facts get 0.5 and are
// flagged in the estimate.
DiscoveryResult majority_voting(const Dataset& d);

// Expectation-maximization over per-source error rates. The E-step is the
// same posterior routine the RBM uses for inference, so an untrained RBM
// and the first E-step agree exactly on every fact.
DiscoveryResult mle_em(const Dataset& d, const RunConfig& cfg);

// Alternating truth-score / source-error iteration with interpolated range
// normalization. Categorical datasets only.
DiscoveryResult two_estimates(const Dataset& d, const RunConfig& cfg);

// Collapsed Gibbs sampling over latent fact truths with Beta-Bernoulli
// source models. Categorical datasets only.
DiscoveryResult ltm_gibbs(const Dataset& d, const RunConfig& cfg);

} // namespace ltd
