#include "ltd/reliability.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "ltd/math.hpp"

namespace ltd {

ReliabilityModel clamp_rates(ReliabilityModel m) {
    for (double& p : m.tpr) p = clamp_unit_open(p, kRateClamp);
    for (double& p : m.fpr) p = clamp_unit_open(p, kRateClamp);
    m.prevalence = clamp_unit_open(m.prevalence, kRateClamp);
    return m;
}

double hidden_bias_share_from_rates(double tpr, double fpr) {
    // log(1 - tpr) - log(1 - fpr), written through log_sigmoid of the
    // log-odds so the subtraction from 1 never cancels.
    return log_sigmoid(-logit(tpr)) - log_sigmoid(-logit(fpr));
}

RbmParameters model_to_rbm(const ReliabilityModel& m) {
    if (m.tpr.size() != m.fpr.size()) {
        throw std::invalid_argument("model_to_rbm: tpr/fpr length mismatch");
    }
    const ReliabilityModel c = clamp_rates(m);
    const std::size_t n = c.source_count();
    RbmParameters r;
    r.visible_bias.resize(n);
    r.weight.resize(n);
    r.hidden_bias_share.resize(n);
    for (std::size_t s = 0; s < n; ++s) {
        r.visible_bias[s] = logit(c.fpr[s]);
        r.weight[s] = logit(c.tpr[s]) - logit(c.fpr[s]);
        r.hidden_bias_share[s] = hidden_bias_share_from_rates(c.tpr[s], c.fpr[s]);
    }
    r.hidden_bias_global = logit(c.prevalence);
    return r;
}

ReliabilityModel rbm_to_model(const RbmParameters& r) {
    const std::size_t n = r.source_count();
    ReliabilityModel m;
    m.tpr.resize(n);
    m.fpr.resize(n);
    for (std::size_t s = 0; s < n; ++s) {
        m.tpr[s] = sigmoid(r.visible_bias[s] + r.weight[s]);
        m.fpr[s] = sigmoid(r.visible_bias[s]);
    }
    m.prevalence = sigmoid(r.hidden_bias_global);
    return m;
}

double restricted_hidden_bias(const RbmParameters& r, std::span<const SourceClaim> claims) {
    double b = r.hidden_bias_global;
    for (const SourceClaim& c : claims) {
        b += r.hidden_bias_share[c.source];
    }
    return b;
}

double plausibility(const RbmParameters& r, std::span<const SourceClaim> claims) {
    double x = restricted_hidden_bias(r, claims);
    for (const SourceClaim& c : claims) {
        if (c.positive) x += r.weight[c.source];
    }
    return sigmoid(x);
}

std::vector<double> adjust_categorical(std::span<const double> plausibilities) {
    if (plausibilities.empty()) {
        throw std::invalid_argument("adjust_categorical: empty input");
    }
    std::vector<double> out(plausibilities.size());
    double total = 0.0;
    for (std::size_t i = 0; i < plausibilities.size(); ++i) {
        const double p = clamp_unit_open(plausibilities[i], kRateClamp);
        out[i] = p / (1.0 - p);
        total += out[i];
    }
    for (double& v : out) v /= total;
    return out;
}

std::vector<double> categorical_plausibility(
    const RbmParameters& r, std::span<const std::vector<SourceClaim>> per_value_claims) {
    if (per_value_claims.empty()) {
        throw std::invalid_argument("categorical_plausibility: empty input");
    }
    // The attribute's claiming set is shared by all its values; take the
    // union in case a caller passes ragged vectors.
    std::set<SourceId> claiming;
    for (const auto& claims : per_value_claims) {
        for (const SourceClaim& c : claims) claiming.insert(c.source);
    }
    double bias = r.hidden_bias_global;
    for (SourceId s : claiming) bias += r.hidden_bias_share[s];

    std::vector<double> score(per_value_claims.size(), bias);
    for (std::size_t i = 0; i < per_value_claims.size(); ++i) {
        for (const SourceClaim& c : per_value_claims[i]) {
            if (c.positive) score[i] += r.weight[c.source];
        }
    }
    const double top = *std::max_element(score.begin(), score.end());
    double total = 0.0;
    std::vector<double> out(score.size());
    for (std::size_t i = 0; i < score.size(); ++i) {
        out[i] = std::exp(score[i] - top);
        total += out[i];
    }
    for (double& v : out) v /= total;
    return out;
}

ReliabilityModel dual_model(ReliabilityModel m) {
    std::swap(m.tpr, m.fpr);
    m.prevalence = 1.0 - m.prevalence;
    return m;
}

} // namespace ltd
