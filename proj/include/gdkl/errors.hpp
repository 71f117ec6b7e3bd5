#pragma once

#include <stdexcept>
#include <string>

namespace gdkl {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define GDKL_DEFINE_ERROR(name)                  \
    struct name : Error {                        \
        using Error::Error;                      \
    };

GDKL_DEFINE_ERROR(DimensionMismatch)
GDKL_DEFINE_ERROR(NotPositiveDefinite)
GDKL_DEFINE_ERROR(DomainError)
GDKL_DEFINE_ERROR(NonPositiveVariance)
GDKL_DEFINE_ERROR(InvalidArchitecture)
GDKL_DEFINE_ERROR(NoRecordedForward)
GDKL_DEFINE_ERROR(LengthMismatch)
GDKL_DEFINE_ERROR(TooFewPoints)
GDKL_DEFINE_ERROR(InvalidLabel)
GDKL_DEFINE_ERROR(DegenerateFeatures)
GDKL_DEFINE_ERROR(ParseError)
GDKL_DEFINE_ERROR(ConfigError)
GDKL_DEFINE_ERROR(NonFiniteError)
GDKL_DEFINE_ERROR(NumericalFailure)

#undef GDKL_DEFINE_ERROR

}  // namespace gdkl
