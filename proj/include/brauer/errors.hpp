#pragma once

#include <stdexcept>
#include <string>

namespace brauer {

/// Raised when a result cannot be determined at the working p-adic precision.
struct PrecisionLoss : std::runtime_error {
    explicit PrecisionLoss(const std::string& msg) : std::runtime_error(msg) {}
};

/// Raised when an operation is asked for outside its certified scope
/// (uncertified extensions, non-Frobenius cyclic data, missing norm oracles).
struct Unsupported : std::runtime_error {
    explicit Unsupported(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace brauer
