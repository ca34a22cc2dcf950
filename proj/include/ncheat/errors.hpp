#pragma once

#include <stdexcept>

namespace ncheat {

/// Parameter outside the mathematical domain of an operation.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// theta*eta > hbar^2: the scaling constraint has no real solution.
struct NoRealScaling : DomainError {
    using DomainError::DomainError;
};

/// The two local energies never cross for the given occupations.
struct NoEquilibrium : DomainError {
    using DomainError::DomainError;
};

/// Quadrature order too small to integrate the requested state exactly.
struct OrderTooLow : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A matrix that must be symmetric is not.
struct NonSymmetric : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A matrix that must be positive definite is not.
struct NonPositive : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Invalid or inconsistent run configuration.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ncheat
