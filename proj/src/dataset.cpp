#include "ltd/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "ltd/errors.hpp"

namespace ltd {

namespace {

class Interner {
  public:
    std::uint32_t intern(const std::string& name) {
        auto [it, inserted] = index_.try_emplace(name, static_cast<std::uint32_t>(names_.size()));
        if (inserted) names_.push_back(name);
        return it->second;
    }
    const std::uint32_t* find(const std::string& name) const {
        auto it = index_.find(name);
        return it == index_.end() ? nullptr : &it->second;
    }
    std::vector<std::string> take() { return std::move(names_); }

  private:
    std::unordered_map<std::string, std::uint32_t> index_;
    std::vector<std::string> names_;
};

std::uint64_t pair_key(std::uint32_t a, std::uint32_t b) {
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

} // namespace

void Dataset::build_claim_index(std::vector<std::pair<SourceId, FactClaim>>&& votes) {
    const std::size_t facts = categorical_ ? fact_attribute_.size() : binary_fact_names_.size();
    std::sort(votes.begin(), votes.end(), [](const auto& lhs, const auto& rhs) {
        if (lhs.second.fact != rhs.second.fact) return lhs.second.fact < rhs.second.fact;
        return lhs.first < rhs.first;
    });
    fact_claim_begin_.assign(facts + 1, 0);
    claims_by_fact_.resize(votes.size());
    for (std::size_t i = 0; i < votes.size(); ++i) {
        const auto& [source, fc] = votes[i];
        claims_by_fact_[i] = SourceClaim{source, fc.positive};
        ++fact_claim_begin_[fc.fact + 1];
    }
    for (std::size_t f = 1; f <= facts; ++f) fact_claim_begin_[f] += fact_claim_begin_[f - 1];

    std::sort(votes.begin(), votes.end(), [](const auto& lhs, const auto& rhs) {
        if (lhs.first != rhs.first) return lhs.first < rhs.first;
        return lhs.second.fact < rhs.second.fact;
    });
    source_claim_begin_.assign(source_names_.size() + 1, 0);
    claims_by_source_.resize(votes.size());
    for (std::size_t i = 0; i < votes.size(); ++i) {
        claims_by_source_[i] = votes[i].second;
        ++source_claim_begin_[votes[i].first + 1];
    }
    for (std::size_t s = 1; s <= source_names_.size(); ++s) {
        source_claim_begin_[s] += source_claim_begin_[s - 1];
    }
}

Dataset Dataset::binarize(std::span<const RawClaim> claims,
                          std::span<const std::pair<std::string, std::string>> truth) {
    Interner sources;
    Interner attributes;
    Interner values;
    struct IdClaim {
        SourceId source;
        AttributeId attribute;
        ValueId value;
    };
    std::vector<IdClaim> ids;
    ids.reserve(claims.size());
    for (const RawClaim& c : claims) {
        ids.push_back(IdClaim{sources.intern(c.source), attributes.intern(c.attribute),
                              values.intern(c.value)});
    }

    Dataset d;
    d.categorical_ = true;
    d.source_names_ = sources.take();
    d.attribute_names_ = attributes.take();

    // One chosen value per (source, attribute); a second, different value for
    // the same pair is a hard conflict.
    std::unordered_map<std::uint64_t, ValueId> chosen;
    chosen.reserve(ids.size() * 2);
    std::vector<std::vector<ValueId>> claimed_values(d.attribute_names_.size());
    for (const IdClaim& c : ids) {
        auto [it, inserted] = chosen.try_emplace(pair_key(c.attribute, c.source), c.value);
        if (!inserted) {
            if (it->second != c.value) {
                throw InputError("conflicting claims: source '" + d.source_names_[c.source] +
                                 "' asserts two values for attribute '" +
                                 d.attribute_names_[c.attribute] + "'");
            }
            continue;
        }
        claimed_values[c.attribute].push_back(c.value);
    }
    for (auto& vals : claimed_values) {
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    }

    // Facts are laid out attribute-major, values ascending within each
    // attribute, which makes "first fact of the attribute" and "lowest
    // ValueId" the same tie-break.
    d.attribute_fact_begin_.assign(d.attribute_names_.size() + 1, 0);
    for (std::size_t a = 0; a < claimed_values.size(); ++a) {
        d.attribute_fact_begin_[a + 1] = d.attribute_fact_begin_[a] + claimed_values[a].size();
    }
    const std::size_t fact_count = d.attribute_fact_begin_.back();
    d.fact_attribute_.resize(fact_count);
    d.fact_value_.resize(fact_count);
    for (std::size_t a = 0; a < claimed_values.size(); ++a) {
        std::size_t base = d.attribute_fact_begin_[a];
        for (std::size_t i = 0; i < claimed_values[a].size(); ++i) {
            d.fact_attribute_[base + i] = static_cast<AttributeId>(a);
            d.fact_value_[base + i] = claimed_values[a][i];
        }
    }
    auto fact_of = [&](AttributeId a, ValueId v) -> FactId {
        const auto& vals = claimed_values[a];
        const auto it = std::lower_bound(vals.begin(), vals.end(), v);
        return static_cast<FactId>(d.attribute_fact_begin_[a] + (it - vals.begin()));
    };

    // Each claiming source votes on every claimed value of the attribute:
    // positively on its own value, negatively on the rest.
    std::vector<std::pair<SourceId, FactClaim>> votes;
    std::size_t vote_count = 0;
    std::vector<std::size_t> claimants(d.attribute_names_.size(), 0);
    for (const auto& [key, value] : chosen) {
        (void)value;
        ++claimants[key >> 32];
    }
    for (std::size_t a = 0; a < claimed_values.size(); ++a) {
        vote_count += claimants[a] * claimed_values[a].size();
    }
    votes.reserve(vote_count);
    for (const auto& [key, value] : chosen) {
        const auto a = static_cast<AttributeId>(key >> 32);
        const auto s = static_cast<SourceId>(key & 0xffffffffu);
        for (ValueId c : claimed_values[a]) {
            votes.emplace_back(s, FactClaim{fact_of(a, c), c == value});
        }
    }

    // Ground truth: duplicate rows naming two different values drop the whole
    // attribute from the truth set; rows for unclaimed attributes are ignored.
    d.attribute_truth_.assign(d.attribute_names_.size(), kNoId);
    std::vector<std::uint8_t> conflicted(d.attribute_names_.size(), 0);
    if (!truth.empty()) {
        std::unordered_map<std::string, AttributeId> attr_index;
        attr_index.reserve(d.attribute_names_.size() * 2);
        for (std::size_t a = 0; a < d.attribute_names_.size(); ++a) {
            attr_index.emplace(d.attribute_names_[a], static_cast<AttributeId>(a));
        }
        for (const auto& [attr_name, value_name] : truth) {
            auto it = attr_index.find(attr_name);
            if (it == attr_index.end()) continue;
            const AttributeId a = it->second;
            if (conflicted[a]) continue;
            const ValueId v = values.intern(value_name);
            if (d.attribute_truth_[a] == kNoId) {
                d.attribute_truth_[a] = v;
            } else if (d.attribute_truth_[a] != v) {
                conflicted[a] = 1;
                d.attribute_truth_[a] = kNoId;
            }
        }
    }
    d.value_names_ = values.take();
    d.fact_truth_.assign(fact_count, kTruthUnknown);
    for (FactId f = 0; f < fact_count; ++f) {
        const ValueId t = d.attribute_truth_[d.fact_attribute_[f]];
        if (t == kNoId) continue;
        d.fact_truth_[f] = d.fact_value_[f] == t ? kTruthTrue : kTruthFalse;
        d.has_truth_ = true;
    }

    d.build_claim_index(std::move(votes));
    return d;
}

Dataset Dataset::from_binary(std::span<const RawBinaryClaim> claims,
                             std::span<const std::pair<std::string, bool>> truth) {
    Interner sources;
    Interner facts;
    std::unordered_map<std::uint64_t, bool> seen;
    std::vector<std::pair<SourceId, FactClaim>> votes;
    votes.reserve(claims.size());
    for (const RawBinaryClaim& c : claims) {
        const SourceId s = sources.intern(c.source);
        const FactId f = facts.intern(c.fact);
        auto [it, inserted] = seen.try_emplace(pair_key(s, f), c.positive);
        if (!inserted) {
            if (it->second != c.positive) {
                throw InputError("conflicting claims: source '" + c.source +
                                 "' votes both ways on fact '" + c.fact + "'");
            }
            continue;
        }
        votes.emplace_back(s, FactClaim{f, c.positive});
    }

    Dataset d;
    d.categorical_ = false;
    d.source_names_ = sources.take();
    d.binary_fact_names_ = facts.take();
    d.attribute_fact_begin_ = {0};
    d.fact_truth_.assign(d.binary_fact_names_.size(), kTruthUnknown);
    if (!truth.empty()) {
        std::unordered_map<std::string, FactId> fact_index;
        fact_index.reserve(d.binary_fact_names_.size() * 2);
        for (std::size_t f = 0; f < d.binary_fact_names_.size(); ++f) {
            fact_index.emplace(d.binary_fact_names_[f], static_cast<FactId>(f));
        }
        std::vector<std::uint8_t> conflicted(d.binary_fact_names_.size(), 0);
        for (const auto& [fact_name, value] : truth) {
            auto it = fact_index.find(fact_name);
            if (it == fact_index.end()) continue;
            const FactId f = it->second;
            if (conflicted[f]) continue;
            const std::uint8_t t = value ? kTruthTrue : kTruthFalse;
            if (d.fact_truth_[f] == kTruthUnknown) {
                d.fact_truth_[f] = t;
                d.has_truth_ = true;
            } else if (d.fact_truth_[f] != t) {
                conflicted[f] = 1;
                d.fact_truth_[f] = kTruthUnknown;
            }
        }
        d.has_truth_ = std::any_of(d.fact_truth_.begin(), d.fact_truth_.end(),
                                   [](std::uint8_t t) { return t != kTruthUnknown; });
    }

    d.build_claim_index(std::move(votes));
    return d;
}

std::string Dataset::fact_name(FactId f) const {
    if (categorical_) {
        return attribute_names_[fact_attribute_[f]] + "=" + value_names_[fact_value_[f]];
    }
    return binary_fact_names_[f];
}

std::vector<RawClaim> Dataset::categorical_claims() const {
    if (!categorical_) {
        throw InputError("categorical_claims: dataset has no attribute structure");
    }
    std::vector<RawClaim> out;
    for (SourceId s = 0; s < source_count(); ++s) {
        for (const FactClaim& c : claims_of_source(s)) {
            if (!c.positive) continue;
            out.push_back(RawClaim{source_names_[s], attribute_names_[fact_attribute_[c.fact]],
                                   value_names_[fact_value_[c.fact]]});
        }
    }
    return out;
}

double normalized_entropy(const Dataset& d, AttributeId attribute) {
    if (!d.categorical()) {
        throw InputError("normalized_entropy: dataset has no attribute structure");
    }
    const auto [first, last] = d.facts_of_attribute(attribute);
    if (first == last) {
        throw InputError("normalized_entropy: attribute has no claims");
    }
    const std::size_t value_count = last - first;
    if (value_count == 1) return 0.0;
    double total = 0.0;
    std::vector<double> support(value_count, 0.0);
    for (FactId f = first; f < last; ++f) {
        for (const SourceClaim& c : d.claims_of_fact(f)) {
            if (c.positive) support[f - first] += 1.0;
        }
        total += support[f - first];
    }
    if (total == 0.0) {
        throw InputError("normalized_entropy: attribute has no claims");
    }
    double h = 0.0;
    for (double n : support) {
        if (n == 0.0) continue;
        const double p = n / total;
        h -= p * std::log(p);
    }
    return h / std::log(static_cast<double>(value_count));
}

double average_source_accuracy(const Dataset& d) {
    if (!d.has_truth()) {
        throw InputError("average_source_accuracy: dataset has no ground truth");
    }
    // A categorical source's claims are the values it asserted (its positive
    // votes); the derived negative votes are not claims. Binary votes are
    // assertions either way.
    double sum = 0.0;
    std::size_t counted = 0;
    for (SourceId s = 0; s < d.source_count(); ++s) {
        std::size_t evaluable = 0;
        std::size_t correct = 0;
        for (const FactClaim& c : d.claims_of_source(s)) {
            if (d.categorical() && !c.positive) continue;
            const std::uint8_t t = d.fact_truth(c.fact);
            if (t == kTruthUnknown) continue;
            ++evaluable;
            if (c.positive == (t == kTruthTrue)) ++correct;
        }
        if (evaluable == 0) continue;
        sum += static_cast<double>(correct) / static_cast<double>(evaluable);
        ++counted;
    }
    if (counted == 0) {
        throw InputError("average_source_accuracy: ground truth overlaps no claims");
    }
    return sum / static_cast<double>(counted);
}

DatasetStats dataset_stats(const Dataset& d) {
    DatasetStats stats;
    stats.claim_count = d.claim_count();
    if (d.categorical()) {
        stats.attribute_entropy.resize(d.attribute_count());
        double sum = 0.0;
        for (AttributeId a = 0; a < d.attribute_count(); ++a) {
            stats.attribute_entropy[a] = normalized_entropy(d, a);
            sum += stats.attribute_entropy[a];
        }
        stats.mean_entropy =
            d.attribute_count() == 0 ? 0.0 : sum / static_cast<double>(d.attribute_count());
    }
    if (d.has_truth()) {
        stats.source_accuracy = average_source_accuracy(d);
    }
    stats.source_claim_frequency.resize(d.source_count(), 0.0);
    const double denom = d.categorical() ? static_cast<double>(d.attribute_count())
                                         : static_cast<double>(d.fact_count());
    for (SourceId s = 0; s < d.source_count(); ++s) {
        std::size_t n = 0;
        for (const FactClaim& c : d.claims_of_source(s)) {
            if (!d.categorical() || c.positive) ++n;
        }
        stats.source_claim_frequency[s] = denom == 0.0 ? 0.0 : static_cast<double>(n) / denom;
    }
    return stats;
}

} // namespace ltd
