#pragma once

#include <cstdint>
#include <optional>

#include "ltd/reliability.hpp"

namespace ltd {

// All tunables for every discovery algorithm, with the defaults used
// throughout the benchmark harness. A single struct keeps config-file
// parsing, CLI overrides, and the hyperparameter sweeps in one place;
// each algorithm reads only the fields it consumes.
struct RunConfig {
    // Initial reliability belief, expanded to one entry per source; an
    // explicit per-source model overrides the scalars.
    double initial_tpr = 0.8;
    double initial_fpr = 0.2;
    double initial_prevalence = 0.5;
    std::optional<ReliabilityModel> initial_model;

    // RBM training.
    double learning_rate_base = 0.01;
    double learning_rate_decay = 0.5;  // eta(n) = base * exp(-decay * n), n = 0,1,...
    std::size_t minibatch_size = 32;
    std::size_t max_epochs = 100;
    double convergence_tolerance = 1e-4;

    // Iterative baselines (EM, truth-score alternation).
    std::size_t max_iterations = 100;
    double iteration_tolerance = 1e-6;

    // Gibbs-sampled baseline: Beta prior strengths (pseudo-count totals)
    // around the initial rates, sweep count, and 20% burn-in.
    double gibbs_tpr_strength = 100.0;
    double gibbs_fpr_strength = 1010.0;
    double gibbs_prevalence_strength = 10.0;
    std::size_t gibbs_iterations = 50;

    // Truth-score alternation: the averaging weight decays linearly from 1
    // to 0 across this many steps.
    std::size_t lambda_steps = 10;

    std::uint64_t seed = 0;

    void validate() const;
};

// Uniform per-source model from the scalar fields, or the explicit model
// when present (its width must match the dataset).
ReliabilityModel initial_model_for(const RunConfig& cfg, std::size_t source_count);

} // namespace ltd
