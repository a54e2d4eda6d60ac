#pragma once

#include <stdexcept>
#include <string>

namespace ptns {

/// Iterative solver failed to reach the requested residual within its cap.
struct SolverDiverged : std::runtime_error {
    explicit SolverDiverged(const std::string& what) : std::runtime_error(what) {}
};

/// Advective time step violates the CFL precondition.
struct CflViolation : std::runtime_error {
    explicit CflViolation(const std::string& what) : std::runtime_error(what) {}
};

/// A field value was negative where a nonnegative argument is required.
struct NegativeArgument : std::runtime_error {
    explicit NegativeArgument(const std::string& what) : std::runtime_error(what) {}
};

/// A given density left the admissible band [m/2, 2M].
struct DensityOutOfBand : std::runtime_error {
    explicit DensityOutOfBand(const std::string& what) : std::runtime_error(what) {}
};

/// Density hit zero or below where a strictly positive value is required.
struct VacuumDensity : std::runtime_error {
    explicit VacuumDensity(const std::string& what) : std::runtime_error(what) {}
};

/// A field expected to vanish on the boundary does not.
struct NotZeroTrace : std::runtime_error {
    explicit NotZeroTrace(const std::string& what) : std::runtime_error(what) {}
};

/// Fixed-point window shrank past its retry budget without converging.
struct WindowCollapse : std::runtime_error {
    explicit WindowCollapse(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ptns
