#pragma once

#include <stdexcept>
#include <string>

namespace curvspace {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define CURVSPACE_DEFINE_ERROR(Name)                                   \
    struct Name : Error {                                              \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    }

CURVSPACE_DEFINE_ERROR(FrameMismatch);
CURVSPACE_DEFINE_ERROR(InvalidBounds);
CURVSPACE_DEFINE_ERROR(InvalidCurve);
CURVSPACE_DEFINE_ERROR(InadmissibleU);
CURVSPACE_DEFINE_ERROR(NotCondensed);
CURVSPACE_DEFINE_ERROR(NotDiffuse);
CURVSPACE_DEFINE_ERROR(NotLocallyConvex);
CURVSPACE_DEFINE_ERROR(TurningMismatch);
CURVSPACE_DEFINE_ERROR(TurningIncompatible);
CURVSPACE_DEFINE_ERROR(NoAxis);
CURVSPACE_DEFINE_ERROR(GridTooCoarse);
CURVSPACE_DEFINE_ERROR(Unreachable);
CURVSPACE_DEFINE_ERROR(BadWindow);
CURVSPACE_DEFINE_ERROR(PairingViolation);
CURVSPACE_DEFINE_ERROR(ParameterOutOfRange);
CURVSPACE_DEFINE_ERROR(DomainError);
CURVSPACE_DEFINE_ERROR(NotApplicable);
CURVSPACE_DEFINE_ERROR(OutOfBounds);
CURVSPACE_DEFINE_ERROR(AsymmetricBoundsOnNonorientable);

#undef CURVSPACE_DEFINE_ERROR

}  // namespace curvspace
