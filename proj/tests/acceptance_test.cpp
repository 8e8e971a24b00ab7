// Release criteria for the discovery engine. Each criterion re-derives its
// expectation independently of the library internals (enumeration oracles,
// re-measured statistics) and checks it at a pinned tolerance. The printed
// report is one line per criterion; every tolerance lives in a named
// constant next to the criterion that uses it.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <span>
#include <string>
#include <vector>

#include "ltd/dataset.hpp"
#include "ltd/discovery.hpp"
#include "ltd/evaluation.hpp"
#include "ltd/hyperopt.hpp"
#include "ltd/io.hpp"
#include "ltd/reliability.hpp"
#include "ltd/rng.hpp"
#include "ltd/synthgen.hpp"

namespace acceptance {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

double mean(std::span<const double> xs) {
    double sum = 0.0;
    for (double x : xs) sum += x;
    return xs.empty() ? 0.0 : sum / static_cast<double>(xs.size());
}

double pearson(std::span<const double> xs, std::span<const double> ys) {
    const double mx = mean(xs);
    const double my = mean(ys);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    if (sxx == 0.0 || syy == 0.0) return 0.0;
    return sxy / std::sqrt(sxx * syy);
}

ltd::ReliabilityModel random_model(ltd::Rng& rng, std::size_t n) {
    ltd::ReliabilityModel m;
    for (std::size_t s = 0; s < n; ++s) {
        m.tpr.push_back(0.05 + 0.9 * rng.uniform01());
        m.fpr.push_back(0.05 + 0.9 * rng.uniform01());
    }
    m.prevalence = 0.05 + 0.9 * rng.uniform01();
    return m;
}

// Enumerated posterior of the truth given full or partial votes, computed
// in plain probability space: prior * product of per-source vote likelihoods
// for each truth state, then normalized. This is the independent oracle the
// engine's log-odds plausibility is checked against.
double enumerated_posterior(const ltd::ReliabilityModel& m,
                            std::span<const ltd::SourceClaim> claims) {
    double like_true = m.prevalence;
    double like_false = 1.0 - m.prevalence;
    for (const ltd::SourceClaim& c : claims) {
        const double tpr = m.tpr[c.source];
        const double fpr = m.fpr[c.source];
        like_true *= c.positive ? tpr : 1.0 - tpr;
        like_false *= c.positive ? fpr : 1.0 - fpr;
    }
    return like_true / (like_true + like_false);
}

std::vector<ltd::SourceClaim> vector_claims(std::size_t n, unsigned bits) {
    std::vector<ltd::SourceClaim> claims;
    for (std::size_t s = 0; s < n; ++s) {
        claims.push_back({static_cast<ltd::SourceId>(s), (bits >> s & 1u) != 0});
    }
    return claims;
}

// --------------------------------------------------------------- criterion 1

constexpr double kPosteriorTol = 1e-9;
constexpr double kPosteriorBudgetSeconds = 1.0;

Outcome criterion_posterior_equivalence() {
    const auto start = Clock::now();
    ltd::Rng rng(101);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng.below(4);
        const ltd::ReliabilityModel m = ltd::clamp_rates(random_model(rng, n));
        const ltd::RbmParameters rbm = ltd::model_to_rbm(m);
        for (unsigned bits = 0; bits < (1u << n); ++bits) {
            const auto claims = vector_claims(n, bits);
            const double got = ltd::plausibility(rbm, claims);
            const double want = enumerated_posterior(m, claims);
            worst = std::max(worst, std::abs(got - want));
        }
    }
    const double elapsed = seconds_since(start);
    Outcome o;
    o.pass = worst < kPosteriorTol && elapsed < kPosteriorBudgetSeconds;
    o.detail = "max |delta| " + fmt(worst) + ", " + fmt(elapsed) + " s";
    return o;
}

// --------------------------------------------------------------- criterion 2

constexpr double kBijectionTol = 1e-12;

Outcome criterion_bijection() {
    ltd::Rng rng(202);
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 1 + rng.below(8);
        const ltd::ReliabilityModel m = ltd::clamp_rates(random_model(rng, n));
        const ltd::ReliabilityModel back = ltd::rbm_to_model(ltd::model_to_rbm(m));
        for (std::size_t s = 0; s < n; ++s) {
            worst = std::max(worst, std::abs(back.tpr[s] - m.tpr[s]));
            worst = std::max(worst, std::abs(back.fpr[s] - m.fpr[s]));
        }
        worst = std::max(worst, std::abs(back.prevalence - m.prevalence));
    }
    Outcome o;
    o.pass = worst < kBijectionTol;
    o.detail = "max |delta| " + fmt(worst) + " over 1000 models";
    return o;
}

// --------------------------------------------------------------- criterion 3

constexpr double kRestrictionTol = 1e-9;

Outcome criterion_restriction() {
    ltd::Rng rng(303);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + rng.below(6);
        const ltd::ReliabilityModel m = ltd::clamp_rates(random_model(rng, n));
        const ltd::RbmParameters rbm = ltd::model_to_rbm(m);

        // Random strict subset of sources votes; the rest stay silent.
        std::vector<ltd::SourceClaim> claims;
        ltd::ReliabilityModel sub;
        sub.prevalence = m.prevalence;
        for (std::size_t s = 0; s < n; ++s) {
            if (rng.bernoulli(0.5)) continue;
            claims.push_back({static_cast<ltd::SourceId>(s), rng.bernoulli(0.5)});
            sub.tpr.push_back(m.tpr[s]);
            sub.fpr.push_back(m.fpr[s]);
        }
        std::vector<ltd::SourceClaim> sub_claims;
        for (std::size_t i = 0; i < claims.size(); ++i) {
            sub_claims.push_back({static_cast<ltd::SourceId>(i), claims[i].positive});
        }
        const double got = ltd::plausibility(rbm, claims);
        const double want = enumerated_posterior(sub, sub_claims);
        worst = std::max(worst, std::abs(got - want));
    }
    Outcome o;
    o.pass = worst < kRestrictionTol;
    o.detail = "max |delta| " + fmt(worst) + " over 100 masks";
    return o;
}

// --------------------------------------------------------------- criterion 4

constexpr double kDualityTol = 1e-9;

// Relabeling the hidden truth unit (true <-> false) swaps each source's
// error rates and complements the prevalence; the relabeled machine must
// assign the complementary probability to every claim vector. The votes are
// NOT flipped: they are observations, and only the latent label moved.
Outcome criterion_duality() {
    ltd::Rng rng(101);  // same instance stream as the posterior criterion
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng.below(4);
        const ltd::ReliabilityModel m = ltd::clamp_rates(random_model(rng, n));
        const ltd::RbmParameters rbm = ltd::model_to_rbm(m);
        const ltd::RbmParameters dual = ltd::model_to_rbm(ltd::dual_model(m));
        for (unsigned bits = 0; bits < (1u << n); ++bits) {
            const auto claims = vector_claims(n, bits);
            const double p = ltd::plausibility(rbm, claims);
            const double q = ltd::plausibility(dual, claims);
            worst = std::max(worst, std::abs(q - (1.0 - p)));
        }
    }
    Outcome o;
    o.pass = worst < kDualityTol;
    o.detail = "max |q - (1-p)| " + fmt(worst);
    return o;
}

// --------------------------------------------------------------- criterion 5

constexpr double kCategoricalTol = 1e-9;

Outcome criterion_categorical_consistency() {
    ltd::Rng rng(505);
    double worst_delta = 0.0;
    double worst_sum = 0.0;
    int argmax_breaks = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n_sources = 1 + rng.below(8);
        const std::size_t n_values = 2 + rng.below(5);
        const ltd::ReliabilityModel m = ltd::clamp_rates(random_model(rng, n_sources));
        const ltd::RbmParameters rbm = ltd::model_to_rbm(m);

        // Every source claims the attribute: one positive vote on its chosen
        // value, negative votes on the others.
        std::vector<std::size_t> votes;
        for (std::size_t s = 0; s < n_sources; ++s) votes.push_back(rng.below(n_values));
        std::vector<std::vector<ltd::SourceClaim>> per_value(n_values);
        for (std::size_t c = 0; c < n_values; ++c) {
            for (std::size_t s = 0; s < n_sources; ++s) {
                per_value[c].push_back({static_cast<ltd::SourceId>(s), votes[s] == c});
            }
        }

        std::vector<double> raw;
        for (std::size_t c = 0; c < n_values; ++c) {
            raw.push_back(ltd::plausibility(rbm, per_value[c]));
        }
        const std::vector<double> odds_form = ltd::adjust_categorical(raw);
        const std::vector<double> softmax_form = ltd::categorical_plausibility(rbm, per_value);

        double sum = 0.0;
        for (std::size_t c = 0; c < n_values; ++c) {
            worst_delta = std::max(worst_delta, std::abs(odds_form[c] - softmax_form[c]));
            sum += softmax_form[c];
        }
        worst_sum = std::max(worst_sum, std::abs(sum - 1.0));

        const auto argmax = [](const std::vector<double>& v) {
            return std::distance(v.begin(), std::max_element(v.begin(), v.end()));
        };
        if (argmax(raw) != argmax(softmax_form)) ++argmax_breaks;
    }
    Outcome o;
    o.pass = worst_delta < kCategoricalTol && worst_sum < kCategoricalTol && argmax_breaks == 0;
    o.detail = "max form delta " + fmt(worst_delta) + ", max |sum-1| " + fmt(worst_sum) +
               ", argmax breaks " + std::to_string(argmax_breaks);
    return o;
}

// --------------------------------------------------------------- criterion 6

constexpr double kRecoveryVotingMargin = 0.005;  // may trail voting by at most this
constexpr double kRecoveryFloor = 0.85;
constexpr double kRecoveryCorrelationFloor = 0.7;
constexpr double kRecoveryBudgetSeconds = 120.0;

ltd::SynthConfig recovery_config(std::uint64_t seed) {
    ltd::SynthConfig sc;
    sc.n_sources = 20;
    sc.n_attributes = 2000;
    sc.accuracy_mean = 0.8;
    sc.accuracy_concentration = 50.0;
    sc.copy_probability = 0.2;
    sc.seed = seed;
    return sc;
}

Outcome criterion_synthetic_recovery() {
    const auto start = Clock::now();
    std::vector<double> rbm_acc, mv_acc, est_tpr, gen_acc;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const ltd::SynthResult gen = ltd::generate(recovery_config(seed));
        const ltd::Dataset& d = gen.dataset;
        ltd::RunConfig cfg;
        cfg.seed = seed;
        const ltd::DiscoveryResult rbm = ltd::discover(d, ltd::Algorithm::Rbm, cfg);
        const ltd::DiscoveryResult mv = ltd::discover(d, ltd::Algorithm::Majority, cfg);
        rbm_acc.push_back(ltd::accuracy(d, rbm.estimate));
        mv_acc.push_back(ltd::accuracy(d, mv.estimate));

        const auto profile_of = ltd::profile_index_by_dataset_source(gen);
        for (ltd::SourceId s = 0; s < d.source_count(); ++s) {
            est_tpr.push_back(rbm.model->tpr[s]);
            gen_acc.push_back(gen.profiles[profile_of[s]].accuracy);
        }
    }
    const double rbm_mean = mean(rbm_acc);
    const double mv_mean = mean(mv_acc);
    const double r = pearson(est_tpr, gen_acc);
    const double elapsed = seconds_since(start);
    Outcome o;
    o.pass = rbm_mean >= mv_mean - kRecoveryVotingMargin && rbm_mean >= kRecoveryFloor &&
             r > kRecoveryCorrelationFloor && elapsed < kRecoveryBudgetSeconds;
    o.detail = "engine mean " + fmt(rbm_mean) + ", voting mean " + fmt(mv_mean) +
               ", reliability corr " + fmt(r) + ", " + fmt(elapsed) + " s";
    return o;
}

// --------------------------------------------------------------- criterion 7

constexpr std::size_t kTrendBins = 5;
constexpr std::size_t kTrendSlackBins = 1;  // material adjacent inversions tolerated
// A bin-to-bin move smaller than this is a tie at the benchmark's noise
// scale (same margin the recovery criterion grants), not a trend break.
constexpr double kTrendNoiseFloor = 0.005;

const ltd::Algorithm kAllAlgorithms[] = {
    ltd::Algorithm::Rbm, ltd::Algorithm::RbmC,        ltd::Algorithm::Majority,
    ltd::Algorithm::Mle, ltd::Algorithm::TwoEstimates, ltd::Algorithm::Ltm,
};

// Bin (characteristic, accuracy) points, count adjacent bin-mean pairs that
// move materially the wrong way, and charge one extra violation when the
// overall first-to-last movement contradicts the expected direction.
std::size_t trend_violations(const std::vector<ltd::CharacteristicPoint>& points,
                             bool expect_increasing) {
    const auto bins = ltd::group_by_characteristic(points, kTrendBins);
    std::vector<double> means;
    for (const ltd::AccuracyBin& b : bins) {
        if (b.count > 0) means.push_back(b.mean_accuracy);
    }
    std::size_t violations = 0;
    for (std::size_t i = 0; i + 1 < means.size(); ++i) {
        const double step = means[i + 1] - means[i];
        if (expect_increasing ? step < -kTrendNoiseFloor : step > kTrendNoiseFloor) ++violations;
    }
    if (!means.empty()) {
        const double net = means.back() - means.front();
        if (expect_increasing ? net < -kTrendNoiseFloor : net > kTrendNoiseFloor) {
            violations += kTrendSlackBins + 1;  // wrong overall direction: hard fail
        }
    }
    return violations;
}

Outcome criterion_qualitative_trends() {
    ltd::SynthConfig base;
    base.n_sources = 15;
    base.n_attributes = 500;
    base.accuracy_mean = 0.8;
    base.accuracy_concentration = 50.0;

    struct Sample {
        ltd::SynthResult gen;
        double copy_level = 0.0;
    };

    std::vector<Sample> copy_sweep;
    for (int level = 0; level < 10; ++level) {
        for (std::uint64_t rep = 0; rep < 3; ++rep) {
            ltd::SynthConfig sc = base;
            sc.copy_probability = 0.1 * level;
            sc.seed = 700 + 10 * static_cast<std::uint64_t>(level) + rep;
            copy_sweep.push_back({ltd::generate(sc), 0.0});
            copy_sweep.back().copy_level = ltd::measure_copy_frequency(copy_sweep.back().gen);
        }
    }
    std::vector<Sample> accuracy_sweep;
    for (int level = 0; level < 9; ++level) {
        for (std::uint64_t rep = 0; rep < 3; ++rep) {
            ltd::SynthConfig sc = base;
            sc.accuracy_mean = 0.55 + 0.05 * level;
            sc.seed = 800 + 10 * static_cast<std::uint64_t>(level) + rep;
            accuracy_sweep.push_back({ltd::generate(sc), 0.0});
            const auto stats = ltd::dataset_stats(accuracy_sweep.back().gen.dataset);
            accuracy_sweep.back().copy_level = *stats.source_accuracy;
        }
    }

    Outcome o;
    o.pass = true;
    for (const ltd::Algorithm a : kAllAlgorithms) {
        ltd::RunConfig cfg;
        // The truth-score alternation's averaging schedule is that method's
        // published stability knob (tuned per dataset in the comparison this
        // re-measures); at the default it occasionally flips entire runs
        // into the mirrored labeling, which would swamp the trend with
        // bimodal noise unrelated to copying or source quality.
        if (a == ltd::Algorithm::TwoEstimates) cfg.lambda_steps = 2;
        const auto run = [&](const std::vector<Sample>& sweep) {
            std::vector<ltd::CharacteristicPoint> points;
            for (const Sample& s : sweep) {
                cfg.seed = s.gen.dataset.claim_count();  // any fixed per-dataset seed
                const ltd::DiscoveryResult r = ltd::discover(s.gen.dataset, a, cfg);
                points.push_back({s.copy_level, ltd::accuracy(s.gen.dataset, r.estimate)});
            }
            return points;
        };
        const std::size_t copy_bad = trend_violations(run(copy_sweep), false);
        const std::size_t acc_bad = trend_violations(run(accuracy_sweep), true);
        if (copy_bad > kTrendSlackBins || acc_bad > kTrendSlackBins) o.pass = false;
        o.detail += std::string(o.detail.empty() ? "" : ", ") +
                    std::string(ltd::algorithm_name(a)) + " " + std::to_string(copy_bad) + "/" +
                    std::to_string(acc_bad);
    }
    o.detail = "inversions per algorithm (copy/accuracy, max " +
               std::to_string(kTrendSlackBins) + "): " + o.detail;
    return o;
}

// --------------------------------------------------------------- criterion 8

constexpr double kScalingRatioCap = 15.0;
constexpr double kScalingBudgetSeconds = 60.0;

ltd::Dataset sized_dataset(std::size_t target_claims, std::uint64_t seed) {
    ltd::SynthConfig sc;
    sc.n_sources = 20;
    sc.seed = seed;
    sc.n_attributes = std::max<std::size_t>(
        1, static_cast<std::size_t>(static_cast<double>(target_claims) /
                                    (sc.claim_frequency_mean * sc.n_sources)));
    return ltd::generate(sc).dataset;
}

Outcome criterion_runtime_scaling() {
    const auto start = Clock::now();
    const ltd::Dataset small = sized_dataset(10000, 88);
    const ltd::Dataset large = sized_dataset(100000, 89);
    ltd::RunConfig cfg;
    cfg.seed = 88;
    // Minimum of three median-of-three measurements: the least-interfered
    // run is the steadiest estimate of true cost, and the ratio bound needs
    // both sides steady against scheduler jitter.
    const auto best_seconds = [&cfg](const ltd::Dataset& d, ltd::Algorithm a) {
        double best = ltd::benchmark_discovery(d, a, cfg).seconds;
        for (int again = 0; again < 2; ++again) {
            best = std::min(best, ltd::benchmark_discovery(d, a, cfg).seconds);
        }
        return best;
    };
    const double rbm_small = best_seconds(small, ltd::Algorithm::Rbm);
    const double rbm_large = best_seconds(large, ltd::Algorithm::Rbm);
    const double mv_large = best_seconds(large, ltd::Algorithm::Majority);
    const double ratio = rbm_large / rbm_small;
    const double elapsed = seconds_since(start);
    Outcome o;
    o.pass = ratio < kScalingRatioCap && mv_large < rbm_large &&
             elapsed < kScalingBudgetSeconds;
    o.detail = "time ratio " + fmt(ratio) + " (cap " + fmt(kScalingRatioCap) + "), voting " +
               fmt(mv_large) + " s vs engine " + fmt(rbm_large) + " s, total " + fmt(elapsed) +
               " s";
    return o;
}

// --------------------------------------------------------------- criterion 9

const std::vector<double> kInitialFprGrid = {0.05, 0.15, 0.25, 0.35, 0.45};

// Weak, heterogeneous sources with sparse coverage: the regime where the
// starting guess genuinely matters to an EM fit (several local optima), so
// the robustness comparison has content. On dense high-accuracy data the EM
// sweep collapses to a single optimum and both ranges are near zero.
Outcome criterion_initialization_robustness() {
    std::vector<double> rbm_ranges, mle_ranges;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        ltd::SynthConfig sc;
        sc.n_sources = 10;
        sc.n_attributes = 400;
        sc.accuracy_mean = 0.65;
        sc.accuracy_concentration = 10.0;
        sc.claim_frequency_mean = 0.3;
        sc.copy_probability = 0.2;
        sc.seed = seed;
        const ltd::Dataset d = ltd::generate(sc).dataset;
        ltd::RunConfig cfg;
        cfg.seed = seed;
        const auto range_of = [&](ltd::Algorithm a) {
            const auto points = ltd::sensitivity_sweep(d, a, cfg, ltd::Parameter::InitialFpr,
                                                       kInitialFprGrid);
            double lo = 1.0, hi = 0.0;
            for (const ltd::SweepPoint& p : points) {
                lo = std::min(lo, p.accuracy);
                hi = std::max(hi, p.accuracy);
            }
            return hi - lo;
        };
        rbm_ranges.push_back(range_of(ltd::Algorithm::Rbm));
        mle_ranges.push_back(range_of(ltd::Algorithm::Mle));
    }
    const double rbm_range = mean(rbm_ranges);
    const double mle_range = mean(mle_ranges);
    Outcome o;
    o.pass = rbm_range <= mle_range;
    o.detail = "mean accuracy range: engine " + fmt(rbm_range) + ", EM baseline " +
               fmt(mle_range);
    return o;
}

// -------------------------------------------------------------- criterion 10

Outcome criterion_determinism() {
    ltd::SynthConfig sc;
    sc.n_sources = 12;
    sc.n_attributes = 150;
    sc.copy_probability = 0.3;
    sc.seed = 77;

    Outcome o;
    o.pass = true;
    std::size_t payloads = 0;

    const auto digest_pair = [&](const std::string& first, const std::string& second,
                                 const char* what) {
        ++payloads;
        if (ltd::fnv1a64(first) != ltd::fnv1a64(second)) {
            o.pass = false;
            o.detail += std::string(o.detail.empty() ? "" : ", ") + what;
        }
    };

    // Generator payloads.
    const ltd::SynthResult gen_a = ltd::generate(sc);
    const ltd::SynthResult gen_b = ltd::generate(sc);
    digest_pair(ltd::profiles_to_json(gen_a).dump(), ltd::profiles_to_json(gen_b).dump(),
                "generator profiles");

    // Every algorithm's full result payload.
    const ltd::Dataset& d = gen_a.dataset;
    for (const ltd::Algorithm a : kAllAlgorithms) {
        ltd::RunConfig cfg;
        cfg.seed = 5;
        const ltd::Json echo = ltd::run_config_to_json(cfg);
        const std::string one =
            ltd::result_to_json(d, ltd::discover(d, a, cfg), echo, cfg.seed).dump();
        const std::string two =
            ltd::result_to_json(d, ltd::discover(d, a, cfg), echo, cfg.seed).dump();
        digest_pair(one, two, ltd::algorithm_name(a).data());
    }

    // Optimizer sweep payload.
    const ltd::ParameterGrid grid{ltd::Parameter::InitialTpr, {0.7, 0.9}};
    ltd::RunConfig base;
    base.seed = 5;
    const auto sweep_payload = [&] {
        const ltd::OptimizeResult r =
            ltd::alternating_optimize(d, ltd::Algorithm::Mle, {&grid, 1}, base, 10, 2);
        ltd::Json j;
        j["best"] = ltd::run_config_to_json(r.best);
        j["best_accuracy"] = r.best_accuracy;
        j["cycles"] = r.cycles;
        for (const ltd::TraceEntry& e : r.trace) {
            j["trace"].push_back({{"cycle", e.cycle},
                                  {"parameter", std::string(ltd::parameter_name(e.parameter))},
                                  {"value", e.value},
                                  {"accuracy", e.accuracy}});
        }
        return j.dump();
    };
    digest_pair(sweep_payload(), sweep_payload(), "optimizer sweep");

    o.detail = o.pass ? std::to_string(payloads) + " payload pairs digest-identical"
                      : "mismatched payloads: " + o.detail;
    return o;
}

struct Criterion {
    const char* label;
    Outcome (*run)();
};

const Criterion kCriteria[] = {
    {"untrained plausibility matches enumerated posterior", criterion_posterior_equivalence},
    {"rate and parameter maps invert each other", criterion_bijection},
    {"claimed-subset plausibility matches sub-model posterior", criterion_restriction},
    {"truth-relabel dual complements every plausibility", criterion_duality},
    {"categorical normalization forms agree", criterion_categorical_consistency},
    {"synthetic recovery tracks voting and source reliability", criterion_synthetic_recovery},
    {"accuracy trends with copying and source quality", criterion_qualitative_trends},
    {"training time scales acceptably with claim count", criterion_runtime_scaling},
    {"initialization sweep range at most the EM baseline's", criterion_initialization_robustness},
    {"byte-identical payloads across reruns", criterion_determinism},
};

} // namespace

int run_all() {
    int failures = 0;
    for (std::size_t i = 0; i < std::size(kCriteria); ++i) {
        const Outcome o = kCriteria[i].run();
        if (!o.pass) ++failures;
        std::printf("criterion %2zu (%s): %s  [%s]\n", i + 1, kCriteria[i].label,
                    o.pass ? "PASS" : "FAIL", o.detail.c_str());
        std::fflush(stdout);
    }
    if (failures > 0) {
        std::printf("%d of %zu criteria failed\n", failures, std::size(kCriteria));
    } else {
        std::printf("all %zu criteria passed\n", std::size(kCriteria));
    }
    return failures == 0 ? 0 : 1;
}

} // namespace acceptance
