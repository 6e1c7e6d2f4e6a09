#pragma once

#include <stdexcept>
#include <string>

namespace adsfn {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Algebra-level degeneracies.
struct LightLikeElement : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };

// Boundary / cross-ratio.
struct NotSpacelike : Error { using Error::Error; };
struct InfiniteCrossRatio : Error { using Error::Error; };

// Isometry classification.
struct NotAdmissible : Error { using Error::Error; };
struct NotLoxodromic : Error { using Error::Error; };

// Half-space model.
struct BoundaryHit : Error { using Error::Error; };
struct LightLikeDisplacement : Error { using Error::Error; };
struct NonSpacelikeSegment : Error { using Error::Error; };

// Pants and gluing.
struct ConeViolation : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };
struct MissingRecord : Error { using Error::Error; };

// Surface coordinates.
struct DegenerateCurve : Error { using Error::Error; };
struct NotContained : Error { using Error::Error; };
struct InvalidStratumPoint : Error { using Error::Error; };
struct ScheduleInvalid : Error { using Error::Error; };
struct AxisDegenerate : Error { using Error::Error; };

} // namespace adsfn
