#pragma once

#include <stdexcept>
#include <string>

namespace csl {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// algebra_kernel
struct RankDeficient : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct ZeroDivisor : Error { using Error::Error; };
struct BadAlgebra : Error { using Error::Error; };

// semigroup_core
struct NotAssociative : Error { using Error::Error; };
struct NotCommutative : Error { using Error::Error; };
struct BadTable : Error { using Error::Error; };

// quadratic_orders
struct BadDiscriminant : Error { using Error::Error; };
struct RealQuadraticUnsupported : Error { using Error::Error; };
struct ZeroIdeal : Error { using Error::Error; };
struct WrongMultiplier : Error { using Error::Error; };
struct BoundTooSmall : Error { using Error::Error; };

// window_rings
struct NotSubalgebra : Error { using Error::Error; };

// pvd_pullbacks
struct BadTower : Error { using Error::Error; };
struct UnsupportedDegree : Error { using Error::Error; };

// regularity / cli
struct EmptyBattery : Error { using Error::Error; };
struct UnknownExample : Error { using Error::Error; };

// violated internal postcondition: always a bug, never an input error
struct InternalInvariant : Error { using Error::Error; };

}  // namespace csl
