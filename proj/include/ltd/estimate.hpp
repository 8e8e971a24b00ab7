#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ltd/dataset.hpp"
#include "ltd/reliability.hpp"
#include "ltd/types.hpp"

namespace ltd {

// Per-fact truth plausibilities plus, for categorical datasets, the
// within-attribute normalized distribution and the chosen value.
struct TruthEstimate {
    std::vector<double> plausibility;  // one per fact
    std::vector<double> adjusted;      // one per fact; empty for binary datasets
    std::vector<FactId> winner;        // one per attribute; kNoId when undecided
    std::vector<FactId> unclaimed;     // facts that fell back to the prior
};

// Fill adjusted scores and per-attribute winners from raw plausibilities.
// The winner is the fact with the highest adjusted score; ties go to the
// earliest fact, which within an attribute is the lowest ValueId.
TruthEstimate make_estimate(const Dataset& d, std::vector<double> plausibility);

// Output of one discovery run, shared by every algorithm.
struct DiscoveryResult {
    std::string algorithm;
    TruthEstimate estimate;
    // Per-source rates; absent for algorithms that do not model sources.
    // The prevalence is NaN for algorithms without a truth prior.
    std::optional<ReliabilityModel> model;
    std::size_t iterations = 0;
    bool converged = true;
};

} // namespace ltd
