#ifndef TFA_ERRORS_HPP
#define TFA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tfa {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Thermodynamic state outside the validity domain of the EoS.
class InvalidStateError : public Error {
public:
    using Error::Error;
};

/// Mixture with vanishing mean density or otherwise degenerate inputs.
class DegenerateMixtureError : public Error {
public:
    using Error::Error;
};

/// Volume fraction at a boundary where the requested formula is singular.
class BoundaryRegimeError : public Error {
public:
    using Error::Error;
};

/// Iterative solver failed to reach its tolerance.
class NonConvergenceError : public Error {
public:
    using Error::Error;
};

/// Eigenvalue with an imaginary part above the realness tolerance.
class HyperbolicityError : public Error {
public:
    using Error::Error;
};

/// Viscous damping so strong that the acoustic pair stops propagating.
class OverDampedError : public Error {
public:
    using Error::Error;
};

/// Time step too large for the fastest mode of the evolved system.
class StabilityError : public Error {
public:
    using Error::Error;
};

/// Signal modes not separable at the given sampling.
class RankDeficiencyError : public Error {
public:
    using Error::Error;
};

/// Error sequence unusable for a log-log order fit.
class DegenerateFitError : public Error {
public:
    using Error::Error;
};

/// Malformed or inconsistent run configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Malformed input data file (bad CSV row etc.).
class DataFormatError : public Error {
public:
    using Error::Error;
};

} // namespace tfa

#endif
