#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "ltd/config.hpp"
#include "ltd/dataset.hpp"
#include "ltd/discovery.hpp"

namespace ltd {

// Tunable parameters exposed to the optimizer and the sensitivity sweeps.
enum class Parameter {
    InitialTpr,
    InitialFpr,
    InitialPrevalence,
    LearningRateBase,
    LearningRateDecay,
    LambdaSteps,
};

std::optional<Parameter> parse_parameter(std::string_view name);
std::string_view parameter_name(Parameter p);

double get_parameter(const RunConfig& cfg, Parameter p);
void set_parameter(RunConfig& cfg, Parameter p, double value);

struct ParameterGrid {
    Parameter parameter;
    std::vector<double> values;
};

// The default search space, in optimization order.
std::vector<ParameterGrid> default_search_space();

// One optimizer evaluation. Failed runs carry accuracy -1 and are never
// selected.
struct TraceEntry {
    std::size_t cycle = 0;
    Parameter parameter = Parameter::InitialTpr;
    double value = 0.0;
    double accuracy = -1.0;
};

struct OptimizeResult {
    RunConfig best;
    double best_accuracy = -1.0;
    double initial_accuracy = -1.0;
    std::size_t cycles = 0;
    std::vector<TraceEntry> trace;
};

// Coordinate-wise grid search: cycle through the parameters in space order,
// evaluating each grid value with the others held fixed, and adopt a value
// only when it strictly improves accuracy (ties keep the current value).
// Stops after a cycle with no change, or after cycle_cap cycles. Grid
// evaluations within one parameter pass run on up to `jobs` threads.
OptimizeResult alternating_optimize(const Dataset& d, Algorithm a,
                                    std::span<const ParameterGrid> space, RunConfig base,
                                    std::size_t cycle_cap = 10, std::size_t jobs = 1);

// Accuracy matrix of per-dataset optimized configs applied to every dataset:
// cell [i][j] holds config i (optimized on dataset i) run on dataset j.
// Failed cells are NaN. Column summaries skip NaN cells.
struct CrossApplyResult {
    std::vector<std::vector<double>> matrix;
    std::vector<double> column_mean;
    std::vector<double> column_std;
    std::vector<double> column_max;
};

CrossApplyResult cross_apply(std::span<const Dataset* const> datasets, Algorithm a,
                             std::span<const RunConfig> configs, std::size_t jobs = 1);

struct SweepPoint {
    double value = 0.0;
    double accuracy = -1.0;
    bool failed = false;
};

// Accuracy at each grid value of one parameter, all else fixed at base.
std::vector<SweepPoint> sensitivity_sweep(const Dataset& d, Algorithm a, const RunConfig& base,
                                          Parameter p, std::span<const double> grid,
                                          std::size_t jobs = 1);

} // namespace ltd
