#include "ltd/discovery.hpp"

#include <cmath>
#include <string>

#include "ltd/baselines.hpp"
#include "ltd/errors.hpp"
#include "ltd/rbm.hpp"

namespace ltd {

void RunConfig::validate() const {
    const auto check_rate = [](double v, const char* name) {
        if (!(v > 0.0 && v < 1.0)) {
            throw ConfigError(std::string(name) + " must lie strictly inside (0, 1)");
        }
    };
    check_rate(initial_tpr, "initial_tpr");
    check_rate(initial_fpr, "initial_fpr");
    check_rate(initial_prevalence, "initial_prevalence");
    if (initial_model) {
        if (initial_model->tpr.size() != initial_model->fpr.size()) {
            throw ConfigError("initial_model tpr/fpr length mismatch");
        }
        for (double v : initial_model->tpr) {
            if (!(v >= 0.0 && v <= 1.0)) throw ConfigError("initial_model tpr out of [0, 1]");
        }
        for (double v : initial_model->fpr) {
            if (!(v >= 0.0 && v <= 1.0)) throw ConfigError("initial_model fpr out of [0, 1]");
        }
        if (!(initial_model->prevalence >= 0.0 && initial_model->prevalence <= 1.0)) {
            throw ConfigError("initial_model prevalence out of [0, 1]");
        }
    }
    // A zero learning rate is legal (training becomes a no-op); negative is not.
    if (!(learning_rate_base >= 0.0)) throw ConfigError("learning_rate_base must be >= 0");
    if (!(learning_rate_decay >= 0.0)) throw ConfigError("learning_rate_decay must be >= 0");
    if (minibatch_size == 0) throw ConfigError("minibatch_size must be positive");
    if (max_epochs == 0) throw ConfigError("max_epochs must be positive");
    if (!(convergence_tolerance > 0.0)) throw ConfigError("convergence_tolerance must be > 0");
    if (max_iterations == 0) throw ConfigError("max_iterations must be positive");
    if (!(iteration_tolerance > 0.0)) throw ConfigError("iteration_tolerance must be > 0");
    if (!(gibbs_tpr_strength > 0.0) || !(gibbs_fpr_strength > 0.0) ||
        !(gibbs_prevalence_strength > 0.0)) {
        throw ConfigError("gibbs prior strengths must be > 0");
    }
    if (gibbs_iterations == 0) throw ConfigError("gibbs_iterations must be positive");
    if (lambda_steps == 0) throw ConfigError("lambda_steps must be positive");
}

ReliabilityModel initial_model_for(const RunConfig& cfg, std::size_t source_count) {
    if (cfg.initial_model) {
        if (cfg.initial_model->source_count() != source_count) {
            throw ConfigError("initial_model width does not match the dataset's source count");
        }
        return *cfg.initial_model;
    }
    ReliabilityModel m;
    m.tpr.assign(source_count, cfg.initial_tpr);
    m.fpr.assign(source_count, cfg.initial_fpr);
    m.prevalence = cfg.initial_prevalence;
    return m;
}

TruthEstimate make_estimate(const Dataset& d, std::vector<double> plausibility) {
    if (plausibility.size() != d.fact_count()) {
        throw InputError("make_estimate: plausibility count does not match fact count");
    }
    TruthEstimate e;
    for (FactId f = 0; f < d.fact_count(); ++f) {
        if (d.claims_of_fact(f).empty()) e.unclaimed.push_back(f);
    }
    e.plausibility = std::move(plausibility);
    if (!d.categorical()) return e;

    e.adjusted.resize(d.fact_count());
    e.winner.assign(d.attribute_count(), kNoId);
    for (AttributeId a = 0; a < d.attribute_count(); ++a) {
        const auto [first, last] = d.facts_of_attribute(a);
        if (first == last) continue;
        const std::span<const double> p(e.plausibility.data() + first, last - first);
        const std::vector<double> adjusted = adjust_categorical(p);
        FactId best = first;
        for (std::size_t i = 0; i < adjusted.size(); ++i) {
            e.adjusted[first + i] = adjusted[i];
            if (adjusted[i] > e.adjusted[best]) best = first + static_cast<FactId>(i);
        }
        e.winner[a] = best;
    }
    return e;
}

std::optional<Algorithm> parse_algorithm(std::string_view tag) {
    if (tag == "rbm") return Algorithm::Rbm;
    if (tag == "rbm-c") return Algorithm::RbmC;
    if (tag == "majority") return Algorithm::Majority;
    if (tag == "mle") return Algorithm::Mle;
    if (tag == "ltm") return Algorithm::Ltm;
    if (tag == "2est") return Algorithm::TwoEstimates;
    return std::nullopt;
}

std::string_view algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::Rbm: return "rbm";
        case Algorithm::RbmC: return "rbm-c";
        case Algorithm::Majority: return "majority";
        case Algorithm::Mle: return "mle";
        case Algorithm::Ltm: return "ltm";
        case Algorithm::TwoEstimates: return "2est";
    }
    return "unknown";
}

namespace {

DiscoveryResult discover_rbm(const Dataset& d, const RunConfig& cfg, bool categorical) {
    const TrainResult trained = categorical ? train_categorical(d, cfg) : train(d, cfg);
    std::vector<double> p(d.fact_count());
    for (FactId f = 0; f < d.fact_count(); ++f) {
        p[f] = plausibility(trained.rbm, d.claims_of_fact(f));
    }
    DiscoveryResult r;
    r.algorithm = categorical ? "rbm-c" : "rbm";
    r.estimate = make_estimate(d, std::move(p));
    r.model = trained.model;
    r.iterations = trained.epochs;
    r.converged = trained.converged;
    return r;
}

} // namespace

DiscoveryResult discover(const Dataset& d, Algorithm a, const RunConfig& cfg) {
    switch (a) {
        case Algorithm::Rbm: return discover_rbm(d, cfg, false);
        case Algorithm::RbmC: return discover_rbm(d, cfg, true);
        case Algorithm::Majority: return majority_voting(d);
        case Algorithm::Mle: return mle_em(d, cfg);
        case Algorithm::Ltm: return ltm_gibbs(d, cfg);
        case Algorithm::TwoEstimates: return two_estimates(d, cfg);
    }
    throw ConfigError("unknown algorithm");
}

} // namespace ltd
