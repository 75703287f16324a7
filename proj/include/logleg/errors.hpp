#pragma once

#include <stdexcept>
#include <string>

namespace logleg {

/// An order or size argument exceeded the configured ceiling.
class BoundsError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Arguments outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An iterative or floating computation failed to produce a usable value.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace logleg
