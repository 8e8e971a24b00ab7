#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ltd/types.hpp"

namespace ltd {

// A source's vote on a fact, seen from the source side.
struct FactClaim {
    FactId fact = 0;
    bool positive = false;
};

// Binary-form input claim: a source votes 0/1 on a named fact.
struct RawBinaryClaim {
    std::string source;
    std::string fact;
    bool positive = false;
};

inline constexpr std::uint8_t kTruthFalse = 0;
inline constexpr std::uint8_t kTruthTrue = 1;
inline constexpr std::uint8_t kTruthUnknown = 2;

// Immutable claim collection. Categorical datasets keep the attribute/value
// structure (facts are (attribute, value) pairs, grouped per attribute in
// ascending ValueId order); binary datasets are a flat list of named facts.
// Claims are stored twice, grouped by fact and by source, for O(1) access
// from either side. Safe to share across threads once built.
class Dataset {
  public:
    std::size_t source_count() const { return source_names_.size(); }
    std::size_t fact_count() const { return fact_claim_begin_.size() - 1; }
    std::size_t attribute_count() const { return attribute_names_.size(); }
    std::size_t claim_count() const { return claims_by_fact_.size(); }
    bool categorical() const { return categorical_; }

    const std::vector<std::string>& source_names() const { return source_names_; }
    const std::vector<std::string>& attribute_names() const { return attribute_names_; }
    const std::vector<std::string>& value_names() const { return value_names_; }

    // Empty for binary-form datasets (use fact_name instead).
    AttributeId fact_attribute(FactId f) const { return fact_attribute_[f]; }
    ValueId fact_value(FactId f) const { return fact_value_[f]; }
    std::string fact_name(FactId f) const;

    std::span<const SourceClaim> claims_of_fact(FactId f) const {
        return {claims_by_fact_.data() + fact_claim_begin_[f],
                fact_claim_begin_[f + 1] - fact_claim_begin_[f]};
    }
    std::span<const FactClaim> claims_of_source(SourceId s) const {
        return {claims_by_source_.data() + source_claim_begin_[s],
                source_claim_begin_[s + 1] - source_claim_begin_[s]};
    }

    // Facts of one attribute as a contiguous id range [first, last).
    std::pair<FactId, FactId> facts_of_attribute(AttributeId a) const {
        return {static_cast<FactId>(attribute_fact_begin_[a]),
                static_cast<FactId>(attribute_fact_begin_[a + 1])};
    }

    bool has_truth() const { return has_truth_; }
    // kNoId when the attribute's truth is unknown.
    ValueId attribute_truth(AttributeId a) const { return attribute_truth_[a]; }
    // kTruthFalse / kTruthTrue / kTruthUnknown.
    std::uint8_t fact_truth(FactId f) const { return fact_truth_[f]; }

    // Construction from categorical triples; optional (attribute, value)
    // ground truth. Duplicate identical claims are merged; a source claiming
    // two different values for one attribute is a conflict error. Attributes
    // with conflicting ground-truth rows lose their truth entirely.
    static Dataset binarize(std::span<const RawClaim> claims,
                            std::span<const std::pair<std::string, std::string>> truth = {});

    // Construction from binary votes on named facts; optional (fact, 0/1)
    // ground truth.
    static Dataset from_binary(std::span<const RawBinaryClaim> claims,
                               std::span<const std::pair<std::string, bool>> truth = {});

    // Inverse of binarize over the positive claims: (source, attribute,
    // value) name triples in (source, attribute) order.
    std::vector<RawClaim> categorical_claims() const;

  private:
    std::vector<std::string> source_names_;
    std::vector<std::string> attribute_names_;
    std::vector<std::string> value_names_;
    std::vector<std::string> binary_fact_names_;

    std::vector<AttributeId> fact_attribute_;
    std::vector<ValueId> fact_value_;

    std::vector<std::size_t> fact_claim_begin_;
    std::vector<SourceClaim> claims_by_fact_;
    std::vector<std::size_t> source_claim_begin_;
    std::vector<FactClaim> claims_by_source_;

    std::vector<std::size_t> attribute_fact_begin_;

    bool has_truth_ = false;
    std::vector<ValueId> attribute_truth_;
    std::vector<std::uint8_t> fact_truth_;

    bool categorical_ = false;

    void build_claim_index(std::vector<std::pair<SourceId, FactClaim>>&& votes);
};

// Shannon entropy of the positive-claim support over the attribute's values,
// normalized by log of the value count; 0 for a single-value attribute.
double normalized_entropy(const Dataset& d, AttributeId attribute);

// Mean over sources of the fraction of their claims that match fact truth.
// Sources without any claim on a truth-labeled fact are left out of the mean.
double average_source_accuracy(const Dataset& d);

struct DatasetStats {
    std::size_t claim_count = 0;
    std::vector<double> attribute_entropy;
    double mean_entropy = 0.0;
    std::optional<double> source_accuracy;
    std::vector<double> source_claim_frequency;
};

DatasetStats dataset_stats(const Dataset& d);

} // namespace ltd
