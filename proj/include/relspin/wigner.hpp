#pragma once

#include <utility>

#include "relspin/lorentz.hpp"

namespace relspin {

/// Element of SO(3) carrying its canonical axis-angle form.
///
/// The angle is kept in [0, pi]; orientation lives in the sign of the axis.
/// At angle 0 the axis is arbitrary and reported as +z, at angle pi the two
/// axis signs are equivalent and the dominant component is made positive.
class Rotation3 {
public:
    explicit Rotation3(const Eigen::Matrix3d& m, double tol = kRotationTol);

    static Rotation3 about(const Eigen::Vector3d& axis, double angle);
    static Rotation3 identity();

    const Eigen::Matrix3d& matrix() const { return m_; }
    const Eigen::Vector3d& axis() const { return axis_; }
    double angle() const { return angle_; }

    /// Rotation angle taken with the sign of (axis . reference): the signed
    /// angle of a rotation known to be about +/-reference.
    double signed_angle_about(const Eigen::Vector3d& reference) const;

private:
    Eigen::Matrix3d m_;
    Eigen::Vector3d axis_;
    double angle_;
};

/// Rotation angle of the little-group element for the configuration of a
/// particle boosted along x with rapidity xi seen by an observer boosted
/// along z with rapidity chi.
struct WignerAngle {
    double delta;  ///< signed rotation angle about +y, radians
    double xi;
    double chi;
};

/// Canonical axis-angle decomposition of a special orthogonal matrix.
/// angle = atan2(|R - R^T| vector, trace - 1) in [0, pi]; the axis comes
/// from the antisymmetric part away from the endpoints, from the symmetric
/// part at angle ~ pi, and is +z by convention at angle ~ 0.
std::pair<Eigen::Vector3d, double> extract_axis_angle(const Eigen::Matrix3d& r,
                                                      double tol = kRotationTol);

/// The momentum-dependent rotation W(Lambda, p) = L^-1(Lambda p) Lambda L(p),
/// computed as an explicit 4x4 product. The time row and column of the
/// product must be (1,0,0,0) up to kWignerBlockTol; anything else throws
/// internal_error (a broken standard-boost convention, or a product outside
/// the rapidity range double precision can support).
Rotation3 wigner_rotation(const LorentzMatrix& lambda, const FourMomentum& p);

/// Closed form delta = atan2(sinh xi sinh chi, cosh xi + cosh chi),
/// exact at any rapidity.
WignerAngle wigner_angle_closed_form(Rapidity xi, Rapidity chi);

}  // namespace relspin
