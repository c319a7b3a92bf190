#pragma once

#include <stdexcept>

namespace relspin {

// Absolute tolerance for metric preservation of O(1)-entry Lorentz matrices.
inline constexpr double kMetricTol = 1e-10;

// Relative tolerance for the mass-shell invariant (p0^2 - |p|^2 = M^2).
inline constexpr double kShellRelTol = 1e-8;

// Orthogonality tolerance accepted for 3x3 rotation input.
inline constexpr double kRotationTol = 1e-8;

// Tolerance on the time row/column of a 4x4 Wigner product.
inline constexpr double kWignerBlockTol = 1e-8;

// Unitarity tolerance for 2x2 spin matrices.
inline constexpr double kUnitaryTol = 1e-10;

// Norm tolerance accepted for state amplitudes before renormalization.
inline constexpr double kStateNormTol = 1e-8;

/// Thrown when a computed quantity violates a structural guarantee of the
/// construction itself (e.g. a Wigner product whose time block is not the
/// identity), as opposed to a caller passing bad input.
struct internal_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace relspin
