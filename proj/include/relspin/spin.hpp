#pragma once

#include "relspin/wigner.hpp"

namespace relspin {

/// The Pauli matrices in the sigma_z eigenbasis, |up> = (1,0), |down> = (0,1).
const Eigen::Matrix2cd& pauli_x();
const Eigen::Matrix2cd& pauli_y();
const Eigen::Matrix2cd& pauli_z();

/// n . sigma for a unit vector n.
Eigen::Matrix2cd pauli_dot(const Eigen::Vector3d& n);

/// Special unitary 2x2 matrix: the spin-1/2 image of a spatial rotation.
class SpinHalfUnitary {
public:
    explicit SpinHalfUnitary(const Eigen::Matrix2cd& u, double tol = kUnitaryTol);

    const Eigen::Matrix2cd& matrix() const { return u_; }

private:
    Eigen::Matrix2cd u_;
};

/// Spin measurement along a direction: the traceless Hermitian matrix
/// n . sigma with outcomes +/-1. The direction is normalized on construction.
class SpinObservable {
public:
    explicit SpinObservable(const Eigen::Vector3d& direction);

    const Eigen::Vector3d& direction() const { return n_; }
    const Eigen::Matrix2cd& matrix() const { return m_; }

private:
    Eigen::Vector3d n_;
    Eigen::Matrix2cd m_;
};

/// exp(-i angle/2 axis.sigma) = cos(angle/2) I - i sin(angle/2) axis.sigma.
/// Takes the raw (non-canonical) axis-angle pair, so the double cover is
/// visible: a 2*pi angle gives -I.
SpinHalfUnitary su2_about(const Eigen::Vector3d& axis, double angle);

/// SU(2) lift of a rotation, using its canonical axis-angle form (the
/// preimage continuous with the identity on angle in [0, pi]). The other
/// preimage differs by a global sign, which no expectation value sees.
SpinHalfUnitary su2_from_rotation(const Rotation3& r);

SpinObservable observable(const Eigen::Vector3d& direction);

}  // namespace relspin
