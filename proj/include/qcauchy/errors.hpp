#pragma once

#include <stdexcept>
#include <string>

namespace qcauchy {

// Argument outside the domain where an operation is defined.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Evaluation exactly at a pole of a kernel.
class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

// A refinement sequence failed to shrink.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A finite-difference step too large for the expected error order.
class StepError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace qcauchy
