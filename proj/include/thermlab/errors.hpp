#pragma once

#include <stdexcept>
#include <string>

namespace thermlab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidEpsilon : Error { using Error::Error; };
struct PackingInfeasible : Error { using Error::Error; };
struct IncommensurateSpacing : Error { using Error::Error; };
struct UnresolvedInclusion : Error { using Error::Error; };
struct NonpositiveCoefficient : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };
struct GridMismatch : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };

} // namespace thermlab
