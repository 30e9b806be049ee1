#pragma once

#include <stdexcept>
#include <string>

namespace kklo {

// Bad user-facing configuration (unknown keys, inconsistent dimensions
// between artifacts, invalid field values). CLI exit code 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical failure: singular/ill-conditioned factorization, iteration
// that does not converge, diverging trajectories or losses. CLI exit code 3.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// Filesystem / serialization failure. CLI exit code 4.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace kklo
