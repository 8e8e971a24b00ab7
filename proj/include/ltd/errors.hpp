#pragma once

#include <stdexcept>
#include <string>

namespace ltd {

// Bad input data: malformed files, conflicting claims, out-of-range ids.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical or algorithmic failure during a run (e.g. parameters became
// non-finite while training).
struct AlgorithmError : std::runtime_error {
    explicit AlgorithmError(const std::string& what) : std::runtime_error(what) {}
};

// Invalid configuration: unknown keys, out-of-range hyperparameters.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ltd
