#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ltd/dataset.hpp"

namespace ltd {

// Generator for random categorical datasets with known ground truth:
// source claim frequencies and accuracies are Beta-distributed around the
// configured means (alpha = mean * concentration, beta = (1 - mean) *
// concentration), and a configurable share of sources copies an
// earlier-generated source instead of answering independently.
struct SynthConfig {
    std::size_t n_sources = 20;
    std::size_t n_attributes = 1000;
    std::size_t values_min = 2;
    std::size_t values_max = 10;
    double claim_frequency_mean = 0.5;
    double claim_frequency_concentration = 10.0;
    double accuracy_mean = 0.8;
    double accuracy_concentration = 50.0;
    double copy_probability = 0.0;
    std::uint64_t seed = 0;

    void validate() const;
};

struct SourceProfile {
    std::string name;
    double claim_frequency = 0.0;
    double accuracy = 0.0;
    std::optional<SourceId> copies_from;  // generator index of the copied source
    double copy_frequency = 0.0;
    std::size_t claim_count = 0;
    std::size_t copied_claims = 0;
};

struct SynthResult {
    Dataset dataset;
    std::vector<SourceProfile> profiles;  // indexed by generator source index
    std::size_t total_claims = 0;
    std::size_t copied_claims = 0;
};

SynthResult generate(const SynthConfig& cfg);

// Fraction of generated claims that were substituted by a copied claim.
double measure_copy_frequency(const SynthResult& r);

// Map from dataset SourceId to generator profile index (sources that made
// no claims do not appear in the dataset).
std::vector<std::size_t> profile_index_by_dataset_source(const SynthResult& r);

} // namespace ltd
