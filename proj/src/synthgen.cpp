#include "ltd/synthgen.hpp"

#include <unordered_map>

#include "ltd/errors.hpp"
#include "ltd/rng.hpp"

namespace ltd {

void SynthConfig::validate() const {
    if (n_sources == 0) throw ConfigError("n_sources must be positive");
    if (n_attributes == 0) throw ConfigError("n_attributes must be positive");
    if (values_min == 0 || values_max < values_min) {
        throw ConfigError("values_per_attribute range must satisfy 1 <= min <= max");
    }
    if (!(claim_frequency_mean > 0.0 && claim_frequency_mean <= 1.0)) {
        throw ConfigError("claim_frequency_mean must lie in (0, 1]");
    }
    if (!(accuracy_mean > 0.0 && accuracy_mean < 1.0)) {
        throw ConfigError("accuracy_mean must lie strictly inside (0, 1)");
    }
    if (!(claim_frequency_concentration > 0.0) || !(accuracy_concentration > 0.0)) {
        throw ConfigError("concentration parameters must be > 0");
    }
    if (!(copy_probability >= 0.0 && copy_probability <= 1.0)) {
        throw ConfigError("copy_probability must lie in [0, 1]");
    }
}

SynthResult generate(const SynthConfig& cfg) {
    cfg.validate();
    Rng rng(cfg.seed);

    // Attribute structure: candidate value count and the true value index.
    std::vector<std::uint32_t> value_count(cfg.n_attributes);
    std::vector<std::uint32_t> truth_index(cfg.n_attributes);
    for (std::size_t a = 0; a < cfg.n_attributes; ++a) {
        value_count[a] = static_cast<std::uint32_t>(
            cfg.values_min + rng.below(cfg.values_max - cfg.values_min + 1));
        truth_index[a] = static_cast<std::uint32_t>(rng.below(value_count[a]));
    }

    // Source behavior. A frequency mean of exactly 1 degenerates the Beta
    // draw to certainty. Copiers pick their original among already-generated
    // sources, so the first source never copies and copy resolution needs a
    // single pass in source order.
    SynthResult result;
    result.profiles.resize(cfg.n_sources);
    for (std::size_t s = 0; s < cfg.n_sources; ++s) {
        SourceProfile& p = result.profiles[s];
        p.name = "s" + std::to_string(s);
        p.claim_frequency =
            cfg.claim_frequency_mean >= 1.0
                ? 1.0
                : beta_from_mean(rng, cfg.claim_frequency_mean, cfg.claim_frequency_concentration);
        p.accuracy = beta_from_mean(rng, cfg.accuracy_mean, cfg.accuracy_concentration);
        if (s > 0 && rng.bernoulli(cfg.copy_probability)) {
            p.copies_from = static_cast<SourceId>(rng.below(s));
            p.copy_frequency = rng.uniform01();
        }
    }

    // Claims, one source at a time. claim_of[s][a] is the chosen value index
    // or -1. Copy substitution reads the copied source's finalized row.
    std::vector<std::vector<std::int32_t>> claim_of(
        cfg.n_sources, std::vector<std::int32_t>(cfg.n_attributes, -1));
    for (std::size_t s = 0; s < cfg.n_sources; ++s) {
        SourceProfile& p = result.profiles[s];
        for (std::size_t a = 0; a < cfg.n_attributes; ++a) {
            if (!rng.bernoulli(p.claim_frequency)) continue;
            std::int32_t value;
            if (rng.bernoulli(p.accuracy) || value_count[a] == 1) {
                value = static_cast<std::int32_t>(truth_index[a]);
            } else {
                // Uniform over the wrong values: skip the truth slot.
                std::uint64_t pick = rng.below(value_count[a] - 1);
                value = static_cast<std::int32_t>(pick >= truth_index[a] ? pick + 1 : pick);
            }
            if (p.copies_from && claim_of[*p.copies_from][a] >= 0 &&
                rng.bernoulli(p.copy_frequency)) {
                value = claim_of[*p.copies_from][a];
                ++p.copied_claims;
                ++result.copied_claims;
            }
            claim_of[s][a] = value;
            ++p.claim_count;
            ++result.total_claims;
        }
    }

    std::vector<RawClaim> claims;
    claims.reserve(result.total_claims);
    std::vector<std::string> attribute_name(cfg.n_attributes);
    for (std::size_t a = 0; a < cfg.n_attributes; ++a) {
        attribute_name[a] = "a" + std::to_string(a);
    }
    for (std::size_t s = 0; s < cfg.n_sources; ++s) {
        for (std::size_t a = 0; a < cfg.n_attributes; ++a) {
            if (claim_of[s][a] < 0) continue;
            claims.push_back(RawClaim{result.profiles[s].name, attribute_name[a],
                                      "v" + std::to_string(claim_of[s][a])});
        }
    }
    std::vector<std::pair<std::string, std::string>> truth;
    truth.reserve(cfg.n_attributes);
    for (std::size_t a = 0; a < cfg.n_attributes; ++a) {
        truth.emplace_back(attribute_name[a], "v" + std::to_string(truth_index[a]));
    }
    result.dataset = Dataset::binarize(claims, truth);
    return result;
}

double measure_copy_frequency(const SynthResult& r) {
    if (r.total_claims == 0) return 0.0;
    return static_cast<double>(r.copied_claims) / static_cast<double>(r.total_claims);
}

std::vector<std::size_t> profile_index_by_dataset_source(const SynthResult& r) {
    std::unordered_map<std::string, std::size_t> by_name;
    by_name.reserve(r.profiles.size() * 2);
    for (std::size_t i = 0; i < r.profiles.size(); ++i) by_name.emplace(r.profiles[i].name, i);
    const auto& names = r.dataset.source_names();
    std::vector<std::size_t> out(names.size());
    for (std::size_t s = 0; s < names.size(); ++s) out[s] = by_name.at(names[s]);
    return out;
}

} // namespace ltd
