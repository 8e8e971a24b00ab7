#include "ltd/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ltd/errors.hpp"
#include "ltd/math.hpp"
#include "ltd/rng.hpp"

namespace ltd {

DiscoveryResult majority_voting(const Dataset& d) {
    std::vector<double> p(d.fact_count(), 0.5);
    for (FactId f = 0; f < d.fact_count(); ++f) {
        const auto claims = d.claims_of_fact(f);
        if (claims.empty()) continue;
        std::size_t positive = 0;
        for (const SourceClaim& c : claims) positive += c.positive ? 1 : 0;
        p[f] = static_cast<double>(positive) / static_cast<double>(claims.size());
    }
    DiscoveryResult r;
    r.algorithm = "majority";
    r.estimate = make_estimate(d, std::move(p));
    r.iterations = 1;
    return r;
}

DiscoveryResult mle_em(const Dataset& d, const RunConfig& cfg) {
    cfg.validate();
    if (d.fact_count() == 0) throw InputError("mle_em: dataset has no facts");
    ReliabilityModel model = clamp_rates(initial_model_for(cfg, d.source_count()));

    std::vector<double> p(d.fact_count(), 0.0);
    std::vector<double> prev(d.fact_count(), -1.0);
    const auto e_step = [&] {
        const RbmParameters rbm = model_to_rbm(model);
        for (FactId f = 0; f < d.fact_count(); ++f) {
            p[f] = plausibility(rbm, d.claims_of_fact(f));
        }
    };

    bool converged = false;
    std::size_t iterations = 0;
    for (std::size_t iter = 0; iter < cfg.max_iterations; ++iter) {
        e_step();
        iterations = iter + 1;
        double delta = 0.0;
        for (FactId f = 0; f < d.fact_count(); ++f) {
            delta = std::max(delta, std::abs(p[f] - prev[f]));
        }
        if (delta < cfg.iteration_tolerance) {
            converged = true;
            break;
        }
        prev = p;

        // M-step: posterior-weighted positive-claim fractions. A source with
        // no effective mass on one side keeps its previous rate.
        for (SourceId s = 0; s < d.source_count(); ++s) {
            double true_mass = 0.0, true_pos = 0.0;
            double false_mass = 0.0, false_pos = 0.0;
            for (const FactClaim& c : d.claims_of_source(s)) {
                const double v = c.positive ? 1.0 : 0.0;
                true_mass += p[c.fact];
                true_pos += p[c.fact] * v;
                false_mass += 1.0 - p[c.fact];
                false_pos += (1.0 - p[c.fact]) * v;
            }
            if (true_mass > 0.0) {
                model.tpr[s] = clamp_unit_open(true_pos / true_mass, kRateClamp);
            }
            if (false_mass > 0.0) {
                model.fpr[s] = clamp_unit_open(false_pos / false_mass, kRateClamp);
            }
        }
        double mean_p = 0.0;
        for (double pf : p) mean_p += pf;
        model.prevalence =
            clamp_unit_open(mean_p / static_cast<double>(d.fact_count()), kRateClamp);
    }
    if (!converged) e_step();

    DiscoveryResult r;
    r.algorithm = "mle";
    r.estimate = make_estimate(d, std::move(p));
    r.model = std::move(model);
    r.iterations = iterations;
    r.converged = converged;
    return r;
}

// Alternating corroboration in the style of Galland, Abiteboul, Marian and
// Senellart (WSDM 2010), "2-Estimates". Deviations from the published
// method, kept deliberately and documented here:
//   - truth scores start at each value's vote fraction instead of an
//     uninformed constant, which removes one arbitrary tie at round one;
//   - the published hard [0,1] range normalization after each half-step is
//     blended with the raw update: x <- lambda * normalized(x) +
//     (1 - lambda) * x, with lambda falling linearly from 1 to 0 across
//     cfg.lambda_steps rounds (lambda_k = max(0, 1 - k/steps));
//   - after lambda reaches 0 the raw iteration continues until the truth
//     scores reach a fixed point (or cfg.max_iterations rounds), so the
//     final answer is a fixed point of the unnormalized update.
DiscoveryResult two_estimates(const Dataset& d, const RunConfig& cfg) {
    cfg.validate();
    if (!d.categorical() || d.attribute_count() == 0) {
        throw InputError("two_estimates: dataset has no attribute structure");
    }

    std::vector<double> truth(d.fact_count(), 0.5);
    for (FactId f = 0; f < d.fact_count(); ++f) {
        const auto claims = d.claims_of_fact(f);
        if (claims.empty()) continue;
        std::size_t positive = 0;
        for (const SourceClaim& c : claims) positive += c.positive ? 1 : 0;
        truth[f] = static_cast<double>(positive) / static_cast<double>(claims.size());
    }
    std::vector<double> error(d.source_count(), 0.5);

    const auto blend_normalized = [](std::vector<double>& x, double lambda) {
        if (lambda <= 0.0 || x.empty()) return;
        const auto [lo_it, hi_it] = std::minmax_element(x.begin(), x.end());
        const double lo = *lo_it, span = *hi_it - *lo_it;
        if (span < 1e-15) return;  // already flat; normalization undefined
        for (double& v : x) {
            const double normalized = (v - lo) / span;
            v = lambda * normalized + (1.0 - lambda) * v;
        }
    };

    bool converged = false;
    std::size_t iterations = 0;
    for (std::size_t round = 1; round <= cfg.max_iterations; ++round) {
        iterations = round;
        const double lambda =
            std::max(0.0, 1.0 - static_cast<double>(round) /
                                    static_cast<double>(cfg.lambda_steps));

        for (SourceId s = 0; s < d.source_count(); ++s) {
            const auto claims = d.claims_of_source(s);
            if (claims.empty()) continue;
            double disagree = 0.0;
            for (const FactClaim& c : claims) {
                disagree += c.positive ? 1.0 - truth[c.fact] : truth[c.fact];
            }
            error[s] = disagree / static_cast<double>(claims.size());
        }
        blend_normalized(error, lambda);

        std::vector<double> next(truth);
        for (FactId f = 0; f < d.fact_count(); ++f) {
            const auto claims = d.claims_of_fact(f);
            if (claims.empty()) continue;
            double score = 0.0;
            for (const SourceClaim& c : claims) {
                score += c.positive ? 1.0 - error[c.source] : error[c.source];
            }
            next[f] = score / static_cast<double>(claims.size());
        }
        blend_normalized(next, lambda);

        double delta = 0.0;
        for (FactId f = 0; f < d.fact_count(); ++f) {
            delta = std::max(delta, std::abs(next[f] - truth[f]));
        }
        truth = std::move(next);
        if (lambda == 0.0 && delta < cfg.iteration_tolerance) {
            converged = true;
            break;
        }
    }

    DiscoveryResult r;
    r.algorithm = "2est";
    r.estimate = make_estimate(d, std::move(truth));
    ReliabilityModel m;
    m.tpr.resize(d.source_count());
    m.fpr.resize(d.source_count());
    for (SourceId s = 0; s < d.source_count(); ++s) {
        m.tpr[s] = 1.0 - error[s];
        m.fpr[s] = error[s];
    }
    // The method has no notion of a truth prior.
    m.prevalence = std::numeric_limits<double>::quiet_NaN();
    r.model = std::move(m);
    r.iterations = iterations;
    r.converged = converged;
    return r;
}

DiscoveryResult ltm_gibbs(const Dataset& d, const RunConfig& cfg) {
    cfg.validate();
    if (!d.categorical() || d.attribute_count() == 0) {
        throw InputError("ltm_gibbs: dataset has no attribute structure");
    }
    const ReliabilityModel init = clamp_rates(initial_model_for(cfg, d.source_count()));
    // Beta priors centered on the initial rates: Beta(mean * strength,
    // (1 - mean) * strength). Per-source rates share the scalar means.
    const double tpr1 = cfg.initial_tpr * cfg.gibbs_tpr_strength;
    const double tpr0 = (1.0 - cfg.initial_tpr) * cfg.gibbs_tpr_strength;
    const double fpr1 = cfg.initial_fpr * cfg.gibbs_fpr_strength;
    const double fpr0 = (1.0 - cfg.initial_fpr) * cfg.gibbs_fpr_strength;
    const double prev1 = cfg.initial_prevalence * cfg.gibbs_prevalence_strength;
    const double prev0 = (1.0 - cfg.initial_prevalence) * cfg.gibbs_prevalence_strength;

    Rng rng(cfg.seed);
    const std::size_t facts = d.fact_count();
    std::vector<std::uint8_t> t(facts, 0);
    // Counts: per source, claims grouped by (current truth of fact, vote).
    struct Counts {
        double n[2][2] = {{0.0, 0.0}, {0.0, 0.0}};
    };
    std::vector<Counts> counts(d.source_count());
    double truths = 0.0;
    for (FactId f = 0; f < facts; ++f) {
        t[f] = rng.bernoulli(init.prevalence) ? 1 : 0;
        truths += t[f];
    }
    for (SourceId s = 0; s < d.source_count(); ++s) {
        for (const FactClaim& c : d.claims_of_source(s)) {
            counts[s].n[t[c.fact]][c.positive ? 1 : 0] += 1.0;
        }
    }

    const double total = static_cast<double>(facts);
    std::vector<double> hits(facts, 0.0);
    std::vector<double> tpr_sum(d.source_count(), 0.0);
    std::vector<double> fpr_sum(d.source_count(), 0.0);
    double prev_sum = 0.0;
    const std::size_t burn_in = cfg.gibbs_iterations / 5;
    std::size_t kept = 0;

    for (std::size_t sweep = 0; sweep < cfg.gibbs_iterations; ++sweep) {
        for (FactId f = 0; f < facts; ++f) {
            const auto claims = d.claims_of_fact(f);
            // Remove this fact from the sufficient statistics.
            truths -= t[f];
            for (const SourceClaim& c : claims) {
                counts[c.source].n[t[f]][c.positive ? 1 : 0] -= 1.0;
            }
            // Log odds of t_f = 1 against the rest of the current state.
            double log_odds = std::log(truths + prev1) - std::log(total - 1.0 - truths + prev0);
            for (const SourceClaim& c : claims) {
                const Counts& k = counts[c.source];
                const double v1 = c.positive ? k.n[1][1] + tpr1 : k.n[1][0] + tpr0;
                const double v0 = c.positive ? k.n[0][1] + fpr1 : k.n[0][0] + fpr0;
                log_odds += std::log(v1) - std::log(k.n[1][0] + k.n[1][1] + tpr1 + tpr0);
                log_odds -= std::log(v0) - std::log(k.n[0][0] + k.n[0][1] + fpr1 + fpr0);
            }
            t[f] = rng.bernoulli(sigmoid(log_odds)) ? 1 : 0;
            truths += t[f];
            for (const SourceClaim& c : claims) {
                counts[c.source].n[t[f]][c.positive ? 1 : 0] += 1.0;
            }
        }
        if (sweep < burn_in) continue;
        ++kept;
        for (FactId f = 0; f < facts; ++f) hits[f] += t[f];
        for (SourceId s = 0; s < d.source_count(); ++s) {
            const Counts& k = counts[s];
            tpr_sum[s] += (k.n[1][1] + tpr1) / (k.n[1][0] + k.n[1][1] + tpr1 + tpr0);
            fpr_sum[s] += (k.n[0][1] + fpr1) / (k.n[0][0] + k.n[0][1] + fpr1 + fpr0);
        }
        prev_sum += (truths + prev1) / (total + prev1 + prev0);
    }

    std::vector<double> p(facts);
    for (FactId f = 0; f < facts; ++f) p[f] = hits[f] / static_cast<double>(kept);
    ReliabilityModel m;
    m.tpr.resize(d.source_count());
    m.fpr.resize(d.source_count());
    for (SourceId s = 0; s < d.source_count(); ++s) {
        m.tpr[s] = tpr_sum[s] / static_cast<double>(kept);
        m.fpr[s] = fpr_sum[s] / static_cast<double>(kept);
    }
    m.prevalence = prev_sum / static_cast<double>(kept);

    DiscoveryResult r;
    r.algorithm = "ltm";
    r.estimate = make_estimate(d, std::move(p));
    r.model = std::move(m);
    r.iterations = cfg.gibbs_iterations;
    return r;
}

} // namespace ltd
