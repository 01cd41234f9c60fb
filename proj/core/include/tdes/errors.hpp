#pragma once

#include <stdexcept>
#include <string>

namespace tdes {

// Invalid argument to an operation (negative index, malformed range).
struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Parameters outside the region where an operation is defined.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// A Gamma/zeta pole was hit and could not be resolved.
struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

// A series or quadrature could not reach the requested accuracy.
struct TruncationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace tdes
