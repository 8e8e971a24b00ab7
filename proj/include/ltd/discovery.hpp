#pragma once

#include <optional>
#include <string_view>

#include "ltd/config.hpp"
#include "ltd/dataset.hpp"
#include "ltd/estimate.hpp"

namespace ltd {

enum class Algorithm {
    Rbm,          // contrastive-divergence trained truth model
    RbmC,         // categorical variant (softmax hidden sampling)
    Majority,     // vote fraction
    Mle,          // expectation-maximization
    Ltm,          // collapsed Gibbs sampling
    TwoEstimates, // alternating truth/error scores
};

std::optional<Algorithm> parse_algorithm(std::string_view tag);
std::string_view algorithm_name(Algorithm a);

// Run one discovery algorithm end to end on a dataset.
DiscoveryResult discover(const Dataset& d, Algorithm a, const RunConfig& cfg);

} // namespace ltd
