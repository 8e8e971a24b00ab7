#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace ltd {

// Deterministic random source. std::mt19937_64 produces a bit-exact stream on
// every conforming implementation, but the std distribution templates do not,
// so every distribution used anywhere in the project is implemented here.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform double in [0, 1) with 53 random mantissa bits.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform01();
    }

    bool bernoulli(double p) { return uniform01() < p; }

    // Uniform integer in [0, n). Rejection sampling keeps it exactly uniform.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw std::invalid_argument("Rng::below: n must be positive");
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                    std::numeric_limits<std::uint64_t>::max() % n;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

    // Marsaglia polar method; one value per call, the pair partner is discarded
    // to keep consumption independent of call history.
    double normal(double mean, double stddev) {
        double u, v, s;
        do {
            u = 2.0 * uniform01() - 1.0;
            v = 2.0 * uniform01() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        return mean + stddev * u * std::sqrt(-2.0 * std::log(s) / s);
    }

    // Marsaglia-Tsang for shape >= 1; shapes below 1 are boosted and scaled.
    double gamma(double shape, double scale = 1.0) {
        if (!(shape > 0.0) || !(scale > 0.0)) {
            throw std::invalid_argument("Rng::gamma: shape and scale must be positive");
        }
        if (shape < 1.0) {
            const double u = uniform01();
            return gamma(shape + 1.0, scale) * std::pow(u, 1.0 / shape);
        }
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x, v;
            do {
                x = normal(0.0, 1.0);
                v = 1.0 + c * x;
            } while (v <= 0.0);
            v = v * v * v;
            const double u = uniform01();
            if (u < 1.0 - 0.0331 * x * x * x * x) return d * v * scale;
            if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v * scale;
        }
    }

    double beta(double alpha, double beta_param) {
        const double x = gamma(alpha);
        const double y = gamma(beta_param);
        return x / (x + y);
    }

    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

  private:
    std::mt19937_64 engine_;
};

// Beta parameterized by mean and concentration: alpha = mean * nu, beta = (1 - mean) * nu.
inline double beta_from_mean(Rng& rng, double mean, double concentration) {
    if (!(mean > 0.0 && mean < 1.0)) {
        throw std::invalid_argument("beta_from_mean: mean must lie strictly inside (0, 1)");
    }
    if (!(concentration > 0.0)) {
        throw std::invalid_argument("beta_from_mean: concentration must be positive");
    }
    return rng.beta(mean * concentration, (1.0 - mean) * concentration);
}

} // namespace ltd
