#include <cmath>
#include <string>
#include <vector>

#include <doctest.h>

#include "ltd/dataset.hpp"
#include "ltd/discovery.hpp"
#include "ltd/errors.hpp"
#include "ltd/evaluation.hpp"
#include "ltd/hyperopt.hpp"
#include "ltd/synthgen.hpp"

using ltd::Dataset;
using ltd::Parameter;
using ltd::ParameterGrid;
using ltd::RunConfig;

namespace {

Dataset small_truth_dataset(std::uint64_t seed) {
    ltd::SynthConfig sc;
    sc.n_sources = 8;
    sc.n_attributes = 80;
    sc.seed = seed;
    return ltd::generate(sc).dataset;
}

} // namespace

TEST_CASE("parameter names round-trip") {
    for (const Parameter p :
         {Parameter::InitialTpr, Parameter::InitialFpr, Parameter::InitialPrevalence,
          Parameter::LearningRateBase, Parameter::LearningRateDecay, Parameter::LambdaSteps}) {
        const auto parsed = ltd::parse_parameter(ltd::parameter_name(p));
        REQUIRE(parsed.has_value());
        CHECK(*parsed == p);
    }
    CHECK_FALSE(ltd::parse_parameter("nonsense").has_value());
    CHECK(ltd::parse_parameter("initial_fpr") == Parameter::InitialFpr);
    CHECK(ltd::parse_parameter("lambda_steps") == Parameter::LambdaSteps);
}

TEST_CASE("parameter get and set are inverse") {
    RunConfig cfg;
    ltd::set_parameter(cfg, Parameter::InitialTpr, 0.77);
    CHECK(cfg.initial_tpr == 0.77);
    CHECK(ltd::get_parameter(cfg, Parameter::InitialTpr) == 0.77);
    ltd::set_parameter(cfg, Parameter::LambdaSteps, 7.0);
    CHECK(cfg.lambda_steps == 7);
    CHECK(ltd::get_parameter(cfg, Parameter::LambdaSteps) == 7.0);
    CHECK_THROWS_AS(ltd::set_parameter(cfg, Parameter::LambdaSteps, 0.0), ltd::ConfigError);
}

TEST_CASE("single-point grids return the only config after one cycle") {
    const Dataset d = small_truth_dataset(1);
    const std::vector<ParameterGrid> space = {
        {Parameter::InitialTpr, {0.8}},
        {Parameter::InitialFpr, {0.2}},
    };
    RunConfig base;
    base.seed = 3;
    const ltd::OptimizeResult r =
        ltd::alternating_optimize(d, ltd::Algorithm::Mle, space, base);
    CHECK(r.cycles == 1);
    CHECK(r.best.initial_tpr == 0.8);
    CHECK(r.best.initial_fpr == 0.2);
    CHECK(r.trace.size() == 2);
    CHECK(r.best_accuracy == doctest::Approx(r.initial_accuracy));
}

TEST_CASE("ties keep the current value") {
    // Majority voting ignores every hyperparameter: all grid accuracies tie,
    // so the initial values must survive.
    const Dataset d = small_truth_dataset(2);
    const std::vector<ParameterGrid> space = {
        {Parameter::InitialTpr, {0.55, 0.65, 0.75, 0.85}},
        {Parameter::LambdaSteps, {1.0, 5.0, 10.0}},
    };
    RunConfig base;
    base.initial_tpr = 0.65;
    base.lambda_steps = 5;
    base.seed = 4;
    const ltd::OptimizeResult r =
        ltd::alternating_optimize(d, ltd::Algorithm::Majority, space, base);
    CHECK(r.best.initial_tpr == 0.65);
    CHECK(r.best.lambda_steps == 5);
    CHECK(r.cycles == 1);
    CHECK(r.best_accuracy == doctest::Approx(r.initial_accuracy));
}

TEST_CASE("the optimizer matches exhaustive search on a two-parameter grid") {
    const Dataset d = small_truth_dataset(3);
    const std::vector<double> tpr_grid = {0.6, 0.7, 0.8, 0.9};
    const std::vector<double> fpr_grid = {0.1, 0.2, 0.3, 0.4};
    const std::vector<ParameterGrid> space = {
        {Parameter::InitialTpr, tpr_grid},
        {Parameter::InitialFpr, fpr_grid},
    };
    RunConfig base;
    base.seed = 5;
    base.max_iterations = 30;
    const ltd::OptimizeResult r =
        ltd::alternating_optimize(d, ltd::Algorithm::Mle, space, base, 10, 4);

    // Exhaustive oracle over the full product grid.
    double best = -1.0;
    for (const double tpr : tpr_grid) {
        for (const double fpr : fpr_grid) {
            RunConfig cfg = base;
            cfg.initial_tpr = tpr;
            cfg.initial_fpr = fpr;
            const ltd::DiscoveryResult res = ltd::discover(d, ltd::Algorithm::Mle, cfg);
            best = std::max(best, ltd::accuracy(d, res.estimate));
        }
    }
    // Coordinate descent can stop in a local optimum in principle; on this
    // smooth response surface it must reach the global grid optimum.
    CHECK(r.best_accuracy == doctest::Approx(best).epsilon(1e-12));
}

TEST_CASE("optimization never ends below the initial accuracy") {
    const Dataset d = small_truth_dataset(6);
    RunConfig base;
    base.seed = 9;
    const ltd::OptimizeResult r = ltd::alternating_optimize(
        d, ltd::Algorithm::Rbm, ltd::default_search_space(), base, 2, 4);
    CHECK(r.best_accuracy >= r.initial_accuracy - 1e-12);
    // Trace is bounded by cycles times total grid size and every entry
    // carries a cycle number within range.
    std::size_t grid_total = 0;
    for (const auto& g : ltd::default_search_space()) grid_total += g.values.size();
    CHECK(r.trace.size() <= r.cycles * grid_total);
    for (const auto& e : r.trace) {
        CHECK(e.cycle >= 1);
        CHECK(e.cycle <= r.cycles);
        CHECK(e.accuracy <= 1.0);
    }
}

TEST_CASE("failed evaluations are excluded from the argmax") {
    const Dataset d = small_truth_dataset(7);
    // Learning-rate grid with a divergence bomb: the 1e308 run aborts and
    // must never be selected even though its trace entry exists.
    const std::vector<ParameterGrid> space = {
        {Parameter::LearningRateBase, {0.01, 1e308}},
    };
    RunConfig base;
    base.learning_rate_decay = 0.0;
    base.seed = 10;
    const ltd::OptimizeResult r =
        ltd::alternating_optimize(d, ltd::Algorithm::Rbm, space, base);
    CHECK(r.best.learning_rate_base != 1e308);
    bool saw_failure = false;
    for (const auto& e : r.trace) {
        if (e.value == 1e308) {
            CHECK(e.accuracy == -1.0);
            saw_failure = true;
        }
    }
    CHECK(saw_failure);
}

TEST_CASE("cross apply on one dataset is a 1x1 matrix with zero deviation") {
    const Dataset d = small_truth_dataset(8);
    RunConfig cfg;
    cfg.seed = 2;
    const std::vector<const Dataset*> datasets = {&d};
    const std::vector<RunConfig> configs = {cfg};
    const ltd::CrossApplyResult m = ltd::cross_apply(datasets, ltd::Algorithm::Mle, configs);
    REQUIRE(m.matrix.size() == 1);
    REQUIRE(m.matrix[0].size() == 1);
    CHECK(m.column_std[0] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(m.column_mean[0] == doctest::Approx(m.matrix[0][0]).epsilon(1e-12));
    CHECK(m.column_max[0] == doctest::Approx(m.matrix[0][0]).epsilon(1e-12));
}

TEST_CASE("cross apply evaluates every config on every dataset") {
    const Dataset d1 = small_truth_dataset(9);
    const Dataset d2 = small_truth_dataset(10);
    RunConfig a;
    a.initial_tpr = 0.7;
    a.seed = 1;
    RunConfig b;
    b.initial_tpr = 0.9;
    b.seed = 1;
    const std::vector<const Dataset*> datasets = {&d1, &d2};
    const std::vector<RunConfig> configs = {a, b};
    const ltd::CrossApplyResult m =
        ltd::cross_apply(datasets, ltd::Algorithm::Mle, configs, 4);
    REQUIRE(m.matrix.size() == 2);
    for (const auto& row : m.matrix) {
        REQUIRE(row.size() == 2);
        for (double v : row) {
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
        }
    }
    // Column summaries agree with a direct computation.
    for (std::size_t j = 0; j < 2; ++j) {
        const double mean = (m.matrix[0][j] + m.matrix[1][j]) / 2.0;
        CHECK(m.column_mean[j] == doctest::Approx(mean).epsilon(1e-12));
        CHECK(m.column_max[j] ==
              doctest::Approx(std::max(m.matrix[0][j], m.matrix[1][j])).epsilon(1e-12));
    }
    CHECK_THROWS_AS((void)ltd::cross_apply(datasets, ltd::Algorithm::Mle, configs.data() == nullptr
                                               ? std::span<const RunConfig>{}
                                               : std::span<const RunConfig>(configs.data(), 1)),
                    ltd::ConfigError);
}

TEST_CASE("sensitivity at the base value reproduces the base accuracy") {
    const Dataset d = small_truth_dataset(11);
    RunConfig base;
    base.seed = 6;
    const ltd::DiscoveryResult direct = ltd::discover(d, ltd::Algorithm::Rbm, base);
    const double base_accuracy = ltd::accuracy(d, direct.estimate);
    const std::vector<double> grid = {base.initial_fpr};
    const std::vector<ltd::SweepPoint> series =
        ltd::sensitivity_sweep(d, ltd::Algorithm::Rbm, base, Parameter::InitialFpr, grid);
    REQUIRE(series.size() == 1);
    CHECK_FALSE(series[0].failed);
    CHECK(series[0].value == base.initial_fpr);
    CHECK(series[0].accuracy == doctest::Approx(base_accuracy).epsilon(1e-12));
}

TEST_CASE("majority voting sweeps are flat") {
    const Dataset d = small_truth_dataset(12);
    RunConfig base;
    base.seed = 7;
    const std::vector<double> grid = {0.05, 0.15, 0.25, 0.35, 0.45};
    const std::vector<ltd::SweepPoint> series =
        ltd::sensitivity_sweep(d, ltd::Algorithm::Majority, base, Parameter::InitialFpr, grid, 2);
    REQUIRE(series.size() == 5);
    for (const auto& p : series) {
        CHECK_FALSE(p.failed);
        CHECK(p.accuracy == doctest::Approx(series[0].accuracy).epsilon(1e-12));
    }
}

TEST_CASE("default search space covers every tunable parameter once") {
    const std::vector<ParameterGrid> space = ltd::default_search_space();
    REQUIRE(space.size() == 6);
    for (const auto& g : space) {
        CHECK_FALSE(g.values.empty());
        for (const auto& other : space) {
            if (&g == &other) continue;
            CHECK(g.parameter != other.parameter);
        }
    }
    // Rate grids exclude 0 and 1, which have no finite log-odds.
    for (const auto& g : space) {
        for (double v : g.values) {
            if (g.parameter == Parameter::InitialTpr || g.parameter == Parameter::InitialFpr ||
                g.parameter == Parameter::InitialPrevalence) {
                CHECK(v > 0.0);
                CHECK(v < 1.0);
            }
        }
    }
}
