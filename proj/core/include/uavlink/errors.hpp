#pragma once

#include <stdexcept>
#include <string>

namespace uavlink {

/// Base for every error raised by the propagation and link models.
class ModelError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An input lies outside the domain of a model equation.
class DomainError : public ModelError {
public:
    using ModelError::ModelError;
};

/// UAV and ground node coincide, so distance and angle are undefined.
class GeometryError : public ModelError {
public:
    using ModelError::ModelError;
};

/// A named preset or label is not known.
class LookupError : public ModelError {
public:
    using ModelError::ModelError;
};

/// The coverage solver could not produce a well-defined answer.
class SolverError : public ModelError {
public:
    using ModelError::ModelError;
};

/// No altitude in the search range yields any coverage.
class InfeasibleError : public SolverError {
public:
    using SolverError::SolverError;
};

/// Malformed or invalid configuration. Kept apart from ModelError so the
/// CLI can map it to a distinct exit status.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline void require(bool ok, const std::string& what)
{
    if (!ok)
        throw DomainError(what);
}

} // namespace detail
} // namespace uavlink
