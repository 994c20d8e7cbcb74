#pragma once

#include <stdexcept>
#include <string>

namespace qcurv {

// Violated mathematical precondition (bad argument, pole, non-convergent mass).
struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Inconsistent discretization controls (truncation vs. quadrature resolution, grid range).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A construction-time identity failed beyond tolerance.
struct ConstructionError : std::runtime_error {
    explicit ConstructionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qcurv
