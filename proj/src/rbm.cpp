#include "ltd/rbm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ltd/errors.hpp"
#include "ltd/math.hpp"
#include "ltd/rng.hpp"

namespace ltd {

namespace {

// Gradient accumulator for one minibatch. Dense per-source arrays plus a
// touched list keep reset cost proportional to the batch, not the dataset.
struct BatchAccumulator {
    std::vector<double> grad_weight;
    std::vector<double> grad_visible_bias;
    std::vector<std::size_t> fact_uses;  // batch facts that involve the source
    std::vector<SourceId> touched;
    std::vector<std::uint8_t> is_touched;
    double hidden_gradient = 0.0;

    explicit BatchAccumulator(std::size_t sources)
        : grad_weight(sources, 0.0),
          grad_visible_bias(sources, 0.0),
          fact_uses(sources, 0),
          is_touched(sources, 0) {}

    void touch(SourceId s) {
        if (!is_touched[s]) {
            is_touched[s] = 1;
            touched.push_back(s);
        }
    }

    void reset() {
        for (SourceId s : touched) {
            grad_weight[s] = 0.0;
            grad_visible_bias[s] = 0.0;
            fact_uses[s] = 0;
            is_touched[s] = 0;
        }
        touched.clear();
        hidden_gradient = 0.0;
    }
};

double hidden_bias_share_from_params(double visible_bias, double weight) {
    // log(1 - tpr) - log(1 - fpr) with tpr = sigmoid(a + w), fpr = sigmoid(a);
    // 1 - sigmoid(x) = sigmoid(-x), so no cancellation near saturation.
    return log_sigmoid(-(visible_bias + weight)) - log_sigmoid(-visible_bias);
}

// Apply one batch's averaged gradients. The per-source hidden-bias shares
// are recomputed from the updated rates; the global bias absorbs the
// averaged per-fact hidden gradient minus the mean shift the share updates
// caused on the batch facts' restricted biases, so each fact's effective
// hidden bias moves by the CD step alone. Returns the largest absolute
// parameter change.
double apply_batch(RbmParameters& rbm, const BatchAccumulator& acc, double eta,
                   std::size_t batch_facts) {
    const double inv = 1.0 / static_cast<double>(batch_facts);
    double max_change = 0.0;
    double share_shift = 0.0;
    for (SourceId s : acc.touched) {
        const double da = eta * acc.grad_visible_bias[s] * inv;
        const double dw = eta * acc.grad_weight[s] * inv;
        rbm.visible_bias[s] += da;
        rbm.weight[s] += dw;
        const double share = hidden_bias_share_from_params(rbm.visible_bias[s], rbm.weight[s]);
        const double dshare = share - rbm.hidden_bias_share[s];
        rbm.hidden_bias_share[s] = share;
        share_shift += static_cast<double>(acc.fact_uses[s]) * dshare;
        max_change = std::max({max_change, std::abs(da), std::abs(dw), std::abs(dshare)});
    }
    const double db = eta * acc.hidden_gradient * inv - share_shift * inv;
    rbm.hidden_bias_global += db;
    max_change = std::max(max_change, std::abs(db));
    return max_change;
}

void check_finite(const RbmParameters& rbm, std::size_t epoch, std::size_t batch) {
    auto all_finite = [](const std::vector<double>& v) {
        return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
    };
    if (all_finite(rbm.visible_bias) && all_finite(rbm.weight) &&
        all_finite(rbm.hidden_bias_share) && std::isfinite(rbm.hidden_bias_global)) {
        return;
    }
    throw AlgorithmError("training diverged: non-finite parameter at epoch " +
                         std::to_string(epoch) + ", batch " + std::to_string(batch));
}

double learning_rate(const RunConfig& cfg, std::size_t epoch) {
    return cfg.learning_rate_base *
           std::exp(-cfg.learning_rate_decay * static_cast<double>(epoch));
}

TrainResult finish(RbmParameters rbm, std::size_t epochs, bool converged) {
    TrainResult r;
    r.model = rbm_to_model(rbm);
    r.rbm = std::move(rbm);
    r.epochs = epochs;
    r.converged = converged;
    return r;
}

} // namespace

TrainResult train(const Dataset& d, const RunConfig& cfg) {
    cfg.validate();
    if (d.fact_count() == 0) throw InputError("train: dataset has no facts");
    RbmParameters rbm = model_to_rbm(initial_model_for(cfg, d.source_count()));
    Rng rng(cfg.seed);

    std::vector<FactId> order(d.fact_count());
    std::iota(order.begin(), order.end(), FactId{0});
    BatchAccumulator acc(d.source_count());
    std::vector<double> recon;

    std::size_t epochs_run = 0;
    bool converged = false;
    for (std::size_t epoch = 0; epoch < cfg.max_epochs && !converged; ++epoch) {
        const double eta = learning_rate(cfg, epoch);
        rng.shuffle(order);
        double epoch_change = 0.0;
        std::size_t batch_index = 0;
        for (std::size_t start = 0; start < order.size();
             start += cfg.minibatch_size, ++batch_index) {
            const std::size_t end = std::min(start + cfg.minibatch_size, order.size());
            acc.reset();
            for (std::size_t i = start; i < end; ++i) {
                const auto claims = d.claims_of_fact(order[i]);
                const double p_data = plausibility(rbm, claims);
                const double h = rng.bernoulli(p_data) ? 1.0 : 0.0;
                double x = restricted_hidden_bias(rbm, claims);
                recon.clear();
                for (const SourceClaim& c : claims) {
                    const double pv =
                        sigmoid(rbm.visible_bias[c.source] + rbm.weight[c.source] * h);
                    const double v = rng.bernoulli(pv) ? 1.0 : 0.0;
                    recon.push_back(v);
                    x += v * rbm.weight[c.source];
                }
                const double p_recon = sigmoid(x);
                for (std::size_t j = 0; j < claims.size(); ++j) {
                    const SourceClaim& c = claims[j];
                    const double v = c.positive ? 1.0 : 0.0;
                    acc.touch(c.source);
                    acc.grad_weight[c.source] += v * p_data - recon[j] * p_recon;
                    acc.grad_visible_bias[c.source] += v - recon[j];
                    ++acc.fact_uses[c.source];
                }
                acc.hidden_gradient += p_data - p_recon;
            }
            epoch_change = std::max(epoch_change, apply_batch(rbm, acc, eta, end - start));
            check_finite(rbm, epoch, batch_index);
        }
        epochs_run = epoch + 1;
        converged = epoch_change < cfg.convergence_tolerance;
    }
    return finish(std::move(rbm), epochs_run, converged);
}

TrainResult train_categorical(const Dataset& d, const RunConfig& cfg) {
    cfg.validate();
    if (!d.categorical() || d.attribute_count() == 0) {
        throw InputError("train_categorical: dataset has no attribute structure");
    }
    RbmParameters rbm = model_to_rbm(initial_model_for(cfg, d.source_count()));
    Rng rng(cfg.seed);

    std::vector<AttributeId> order(d.attribute_count());
    std::iota(order.begin(), order.end(), AttributeId{0});
    BatchAccumulator acc(d.source_count());
    std::vector<double> p_star, score, recon;

    std::size_t epochs_run = 0;
    bool converged = false;
    for (std::size_t epoch = 0; epoch < cfg.max_epochs && !converged; ++epoch) {
        const double eta = learning_rate(cfg, epoch);
        rng.shuffle(order);
        double epoch_change = 0.0;
        std::size_t batch_index = 0;
        std::size_t next = 0;
        while (next < order.size()) {
            // Pack whole attributes until the fact budget is reached.
            const std::size_t batch_start = next;
            std::size_t batch_facts = 0;
            while (next < order.size() && batch_facts < cfg.minibatch_size) {
                const auto [first, last] = d.facts_of_attribute(order[next]);
                batch_facts += last - first;
                ++next;
            }
            acc.reset();
            for (std::size_t i = batch_start; i < next; ++i) {
                const auto [first, last] = d.facts_of_attribute(order[i]);
                const std::size_t k = last - first;
                // All of an attribute's facts share the same claiming set, so
                // the restricted hidden bias is one number for the group.
                const double bias = restricted_hidden_bias(rbm, d.claims_of_fact(first));
                score.assign(k, bias);
                for (std::size_t c = 0; c < k; ++c) {
                    for (const SourceClaim& sc : d.claims_of_fact(first + c)) {
                        if (sc.positive) score[c] += rbm.weight[sc.source];
                    }
                }
                const double top = *std::max_element(score.begin(), score.end());
                p_star.resize(k);
                double total = 0.0;
                for (std::size_t c = 0; c < k; ++c) {
                    p_star[c] = std::exp(score[c] - top);
                    total += p_star[c];
                }
                for (double& p : p_star) p /= total;

                // Hidden sample: exactly one of the attribute's facts is true.
                std::size_t c_star = k - 1;
                double u = rng.uniform01();
                for (std::size_t c = 0; c < k; ++c) {
                    u -= p_star[c];
                    if (u < 0.0) {
                        c_star = c;
                        break;
                    }
                }

                // Reconstruction per fact, then the softmax-adjusted
                // negative-phase hidden distribution from the new scores.
                double neg_total = 0.0;
                std::vector<double> neg_score(k, bias);
                recon.clear();
                for (std::size_t c = 0; c < k; ++c) {
                    const double h = c == c_star ? 1.0 : 0.0;
                    for (const SourceClaim& sc : d.claims_of_fact(first + c)) {
                        const double pv =
                            sigmoid(rbm.visible_bias[sc.source] + rbm.weight[sc.source] * h);
                        const double v = rng.bernoulli(pv) ? 1.0 : 0.0;
                        recon.push_back(v);
                        neg_score[c] += v * rbm.weight[sc.source];
                    }
                }
                const double neg_top = *std::max_element(neg_score.begin(), neg_score.end());
                for (double& s : neg_score) {
                    s = std::exp(s - neg_top);
                    neg_total += s;
                }
                std::size_t slot = 0;
                for (std::size_t c = 0; c < k; ++c) {
                    const double p_recon = neg_score[c] / neg_total;
                    for (const SourceClaim& sc : d.claims_of_fact(first + c)) {
                        const double v = sc.positive ? 1.0 : 0.0;
                        acc.touch(sc.source);
                        acc.grad_weight[sc.source] += v * p_star[c] - recon[slot] * p_recon;
                        acc.grad_visible_bias[sc.source] += v - recon[slot];
                        ++acc.fact_uses[sc.source];
                        ++slot;
                    }
                    acc.hidden_gradient += p_star[c] - p_recon;
                }
            }
            epoch_change = std::max(epoch_change, apply_batch(rbm, acc, eta, batch_facts));
            check_finite(rbm, epoch, batch_index);
            ++batch_index;
        }
        epochs_run = epoch + 1;
        converged = epoch_change < cfg.convergence_tolerance;
    }
    return finish(std::move(rbm), epochs_run, converged);
}

} // namespace ltd
