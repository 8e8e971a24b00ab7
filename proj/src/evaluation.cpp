#include "ltd/evaluation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "ltd/errors.hpp"

namespace ltd {

double accuracy(const Dataset& d, const TruthEstimate& estimate) {
    if (!d.categorical()) {
        throw InputError("accuracy: dataset has no attribute structure");
    }
    std::size_t labeled = 0;
    std::size_t correct = 0;
    for (AttributeId a = 0; a < d.attribute_count(); ++a) {
        const ValueId truth = d.attribute_truth(a);
        if (truth == kNoId) continue;
        ++labeled;
        if (a >= estimate.winner.size()) continue;
        const FactId w = estimate.winner[a];
        if (w != kNoId && d.fact_value(w) == truth) ++correct;
    }
    if (labeled == 0) {
        throw InputError("accuracy: ground truth covers no evaluated attribute");
    }
    return static_cast<double>(correct) / static_cast<double>(labeled);
}

std::vector<AccuracyBin> group_by_characteristic(std::span<const CharacteristicPoint> points,
                                                 std::size_t n_bins) {
    if (points.empty()) throw InputError("group_by_characteristic: no points");
    if (n_bins == 0) throw ConfigError("group_by_characteristic: n_bins must be positive");
    double lo = points[0].characteristic;
    double hi = points[0].characteristic;
    for (const CharacteristicPoint& p : points) {
        lo = std::min(lo, p.characteristic);
        hi = std::max(hi, p.characteristic);
    }
    const double width = (hi - lo) / static_cast<double>(n_bins);

    std::vector<AccuracyBin> bins(n_bins);
    std::vector<double> sum(n_bins, 0.0);
    std::vector<double> sum_sq(n_bins, 0.0);
    for (std::size_t b = 0; b < n_bins; ++b) {
        bins[b].center = width > 0.0 ? lo + (static_cast<double>(b) + 0.5) * width : lo;
    }
    for (const CharacteristicPoint& p : points) {
        std::size_t b = width > 0.0
                            ? static_cast<std::size_t>((p.characteristic - lo) / width)
                            : 0;
        if (b >= n_bins) b = n_bins - 1;  // the range maximum lands in the last bin
        ++bins[b].count;
        sum[b] += p.accuracy;
        sum_sq[b] += p.accuracy * p.accuracy;
    }
    for (std::size_t b = 0; b < n_bins; ++b) {
        if (bins[b].count == 0) continue;
        const double n = static_cast<double>(bins[b].count);
        bins[b].mean_accuracy = sum[b] / n;
        const double variance =
            std::max(0.0, sum_sq[b] / n - bins[b].mean_accuracy * bins[b].mean_accuracy);
        bins[b].std_accuracy = std::sqrt(variance);
    }
    return bins;
}

BenchPoint benchmark_discovery(const Dataset& d, Algorithm a, const RunConfig& cfg,
                               std::size_t repeats) {
    if (repeats < 3) repeats = 3;
    std::vector<double> times(repeats);
    for (std::size_t i = 0; i < repeats; ++i) {
        const auto start = std::chrono::steady_clock::now();
        const DiscoveryResult r = discover(d, a, cfg);
        const auto stop = std::chrono::steady_clock::now();
        (void)r;
        times[i] = std::chrono::duration<double>(stop - start).count();
    }
    std::sort(times.begin(), times.end());
    BenchPoint p;
    std::size_t positives = 0;
    for (FactId f = 0; f < d.fact_count(); ++f) {
        for (const SourceClaim& c : d.claims_of_fact(f)) positives += c.positive ? 1 : 0;
    }
    p.claims = d.categorical() ? positives : d.claim_count();
    p.seconds = times[repeats / 2];
    return p;
}

} // namespace ltd
