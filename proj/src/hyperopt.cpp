#include "ltd/hyperopt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ltd/errors.hpp"
#include "ltd/evaluation.hpp"
#include "ltd/parallel.hpp"

namespace ltd {

std::optional<Parameter> parse_parameter(std::string_view name) {
    if (name == "initial_tpr") return Parameter::InitialTpr;
    if (name == "initial_fpr") return Parameter::InitialFpr;
    if (name == "initial_prevalence") return Parameter::InitialPrevalence;
    if (name == "learning_rate_base") return Parameter::LearningRateBase;
    if (name == "learning_rate_decay") return Parameter::LearningRateDecay;
    if (name == "lambda_steps") return Parameter::LambdaSteps;
    return std::nullopt;
}

std::string_view parameter_name(Parameter p) {
    switch (p) {
        case Parameter::InitialTpr: return "initial_tpr";
        case Parameter::InitialFpr: return "initial_fpr";
        case Parameter::InitialPrevalence: return "initial_prevalence";
        case Parameter::LearningRateBase: return "learning_rate_base";
        case Parameter::LearningRateDecay: return "learning_rate_decay";
        case Parameter::LambdaSteps: return "lambda_steps";
    }
    return "unknown";
}

double get_parameter(const RunConfig& cfg, Parameter p) {
    switch (p) {
        case Parameter::InitialTpr: return cfg.initial_tpr;
        case Parameter::InitialFpr: return cfg.initial_fpr;
        case Parameter::InitialPrevalence: return cfg.initial_prevalence;
        case Parameter::LearningRateBase: return cfg.learning_rate_base;
        case Parameter::LearningRateDecay: return cfg.learning_rate_decay;
        case Parameter::LambdaSteps: return static_cast<double>(cfg.lambda_steps);
    }
    return 0.0;
}

void set_parameter(RunConfig& cfg, Parameter p, double value) {
    switch (p) {
        case Parameter::InitialTpr: cfg.initial_tpr = value; return;
        case Parameter::InitialFpr: cfg.initial_fpr = value; return;
        case Parameter::InitialPrevalence: cfg.initial_prevalence = value; return;
        case Parameter::LearningRateBase: cfg.learning_rate_base = value; return;
        case Parameter::LearningRateDecay: cfg.learning_rate_decay = value; return;
        case Parameter::LambdaSteps:
            if (!(value >= 1.0)) throw ConfigError("lambda_steps must be >= 1");
            cfg.lambda_steps = static_cast<std::size_t>(value);
            return;
    }
}

std::vector<ParameterGrid> default_search_space() {
    const std::vector<double> rates = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    return {
        {Parameter::InitialTpr, rates},
        {Parameter::InitialFpr, rates},
        {Parameter::InitialPrevalence, rates},
        {Parameter::LearningRateBase, {0.001, 0.005, 0.01, 0.05}},
        {Parameter::LearningRateDecay, {0.0, 0.1, 0.5}},
        {Parameter::LambdaSteps, {1.0, 5.0, 10.0, 20.0}},
    };
}

namespace {

// Accuracy of one configured run; -1 marks a failed evaluation.
double evaluate_config(const Dataset& d, Algorithm a, const RunConfig& cfg) {
    try {
        return accuracy(d, discover(d, a, cfg).estimate);
    } catch (const std::exception&) {
        return -1.0;
    }
}

} // namespace

OptimizeResult alternating_optimize(const Dataset& d, Algorithm a,
                                    std::span<const ParameterGrid> space, RunConfig base,
                                    std::size_t cycle_cap, std::size_t jobs) {
    if (!d.has_truth()) {
        throw InputError("alternating_optimize: dataset has no ground truth");
    }
    OptimizeResult result;
    result.best = base;
    result.initial_accuracy = evaluate_config(d, a, base);
    result.best_accuracy = result.initial_accuracy;

    for (std::size_t cycle = 1; cycle <= cycle_cap; ++cycle) {
        result.cycles = cycle;
        bool changed = false;
        for (const ParameterGrid& grid : space) {
            std::vector<double> scores(grid.values.size(), -1.0);
            parallel_for(grid.values.size(), jobs, [&](std::size_t i) {
                RunConfig candidate = result.best;
                set_parameter(candidate, grid.parameter, grid.values[i]);
                scores[i] = evaluate_config(d, a, candidate);
            });
            std::size_t best_i = grid.values.size();
            for (std::size_t i = 0; i < grid.values.size(); ++i) {
                result.trace.push_back(
                    TraceEntry{cycle, grid.parameter, grid.values[i], scores[i]});
                if (scores[i] >= 0.0 &&
                    (best_i == grid.values.size() || scores[i] > scores[best_i])) {
                    best_i = i;
                }
            }
            // Adopt only a strict improvement; ties keep the current value.
            if (best_i < grid.values.size() && scores[best_i] > result.best_accuracy) {
                set_parameter(result.best, grid.parameter, grid.values[best_i]);
                result.best_accuracy = scores[best_i];
                changed = true;
            }
        }
        if (!changed) break;
    }
    return result;
}

CrossApplyResult cross_apply(std::span<const Dataset* const> datasets, Algorithm a,
                             std::span<const RunConfig> configs, std::size_t jobs) {
    if (datasets.empty() || datasets.size() != configs.size()) {
        throw ConfigError("cross_apply: need one config per dataset");
    }
    const std::size_t n = datasets.size();
    CrossApplyResult r;
    r.matrix.assign(n, std::vector<double>(n, -1.0));
    parallel_for(n * n, jobs, [&](std::size_t cell) {
        const std::size_t i = cell / n;
        const std::size_t j = cell % n;
        const double acc = evaluate_config(*datasets[j], a, configs[i]);
        r.matrix[i][j] = acc < 0.0 ? std::numeric_limits<double>::quiet_NaN() : acc;
    });
    r.column_mean.assign(n, std::numeric_limits<double>::quiet_NaN());
    r.column_std.assign(n, std::numeric_limits<double>::quiet_NaN());
    r.column_max.assign(n, std::numeric_limits<double>::quiet_NaN());
    for (std::size_t j = 0; j < n; ++j) {
        double sum = 0.0, sum_sq = 0.0, top = -1.0;
        std::size_t count = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const double v = r.matrix[i][j];
            if (std::isnan(v)) continue;
            sum += v;
            sum_sq += v * v;
            top = std::max(top, v);
            ++count;
        }
        if (count == 0) continue;
        const double mean = sum / static_cast<double>(count);
        r.column_mean[j] = mean;
        r.column_std[j] = std::sqrt(std::max(0.0, sum_sq / static_cast<double>(count) - mean * mean));
        r.column_max[j] = top;
    }
    return r;
}

std::vector<SweepPoint> sensitivity_sweep(const Dataset& d, Algorithm a, const RunConfig& base,
                                          Parameter p, std::span<const double> grid,
                                          std::size_t jobs) {
    std::vector<SweepPoint> series(grid.size());
    parallel_for(grid.size(), jobs, [&](std::size_t i) {
        RunConfig cfg = base;
        set_parameter(cfg, p, grid[i]);
        const double acc = evaluate_config(d, a, cfg);
        series[i] = SweepPoint{grid[i], acc, acc < 0.0};
    });
    return series;
}

} // namespace ltd
