#pragma once

#include <cmath>
#include <stdexcept>

namespace ltd {

inline double sigmoid(double x) {
    // Evaluate from the side that keeps the exponential argument negative,
    // so neither branch can overflow.
    if (x >= 0.0) {
        return 1.0 / (1.0 + std::exp(-x));
    }
    const double e = std::exp(x);
    return e / (1.0 + e);
}

inline double logit(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw std::domain_error("logit: argument must lie strictly inside (0, 1)");
    }
    return std::log(p / (1.0 - p));
}

// log(sigmoid(x)) without underflowing to log(0) for very negative x.
inline double log_sigmoid(double x) {
    if (x < -30.0) return x;
    return -std::log1p(std::exp(-x));
}

inline double clamp_unit_open(double p, double eps) {
    if (p < eps) return eps;
    if (p > 1.0 - eps) return 1.0 - eps;
    return p;
}

} // namespace ltd
