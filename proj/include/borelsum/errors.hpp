#ifndef BORELSUM_ERRORS_HPP
#define BORELSUM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace borelsum {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// special_fn
struct PoleOfGamma : Error { using Error::Error; };
struct SeriesNotConverged : Error { using Error::Error; };

// datum
struct AtPole : Error { using Error::Error; };

// formal
struct GrowthOrderViolation : Error { using Error::Error; };
struct NoMinimum : Error { using Error::Error; };

// borel
struct SingularDirection : Error { using Error::Error; };
struct RayHitsPole : Error { using Error::Error; };
struct TailBoundFails : Error { using Error::Error; };

// stokes
struct OutsideJumpSector : Error { using Error::Error; };
struct OutsideDisc : Error { using Error::Error; };
struct PoleOnBoundaryRay : Error { using Error::Error; };
struct NoStokesLines : Error { using Error::Error; };

// family
struct EpsilonTooLarge : Error { using Error::Error; };
struct StencilOutOfDomain : Error { using Error::Error; };

}  // namespace borelsum

#endif
