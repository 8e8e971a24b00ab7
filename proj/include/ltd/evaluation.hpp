#pragma once

#include <span>
#include <vector>

#include "ltd/config.hpp"
#include "ltd/dataset.hpp"
#include "ltd/discovery.hpp"
#include "ltd/estimate.hpp"

namespace ltd {

// Fraction of truth-labeled attributes whose winning value matches the
// truth. Attributes without a winner in the estimate count as incorrect.
double accuracy(const Dataset& d, const TruthEstimate& estimate);

// One evaluated dataset: an x-axis characteristic and the accuracy achieved.
struct CharacteristicPoint {
    double characteristic = 0.0;
    double accuracy = 0.0;
};

struct AccuracyBin {
    double center = 0.0;
    double mean_accuracy = 0.0;
    double std_accuracy = 0.0;
    std::size_t count = 0;
};

// Equal-width bins over the observed characteristic range; per-bin mean,
// population standard deviation, and membership count. Empty bins stay in
// the series with count 0.
std::vector<AccuracyBin> group_by_characteristic(std::span<const CharacteristicPoint> points,
                                                 std::size_t n_bins = 20);

struct BenchPoint {
    std::size_t claims = 0;  // positive (categorical) claims in the dataset
    double seconds = 0.0;    // median wall-clock time of the discovery call
};

// Time discovery on one dataset: at least three repeats, median seconds.
// Only the discovery call is timed; dataset construction is excluded.
BenchPoint benchmark_discovery(const Dataset& d, Algorithm a, const RunConfig& cfg,
                               std::size_t repeats = 3);

} // namespace ltd
