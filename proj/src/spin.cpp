#include "relspin/spin.hpp"

#include <cmath>
#include <complex>

namespace relspin {

namespace {
using namespace std::complex_literals;
}

const Eigen::Matrix2cd& pauli_x() {
    static const Eigen::Matrix2cd m = (Eigen::Matrix2cd() << 0, 1, 1, 0).finished();
    return m;
}

const Eigen::Matrix2cd& pauli_y() {
    static const Eigen::Matrix2cd m = (Eigen::Matrix2cd() << 0, -1i, 1i, 0).finished();
    return m;
}

const Eigen::Matrix2cd& pauli_z() {
    static const Eigen::Matrix2cd m = (Eigen::Matrix2cd() << 1, 0, 0, -1).finished();
    return m;
}

Eigen::Matrix2cd pauli_dot(const Eigen::Vector3d& n) {
    return n.x() * pauli_x() + n.y() * pauli_y() + n.z() * pauli_z();
}

SpinHalfUnitary::SpinHalfUnitary(const Eigen::Matrix2cd& u, double tol) : u_(u) {
    if (!u_.allFinite() ||
        (u_.adjoint() * u_ - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() > tol ||
        std::abs(u_.determinant() - 1.0) > tol) {
        throw std::domain_error("SpinHalfUnitary: matrix is not special unitary");
    }
}

SpinObservable::SpinObservable(const Eigen::Vector3d& direction) {
    const double n = direction.norm();
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw std::domain_error("SpinObservable: direction must be a nonzero vector");
    }
    n_ = direction / n;
    m_ = pauli_dot(n_);
}

SpinHalfUnitary su2_about(const Eigen::Vector3d& axis, double angle) {
    const double n = axis.norm();
    if (!(n > 0.0) || !std::isfinite(n) || !std::isfinite(angle)) {
        throw std::domain_error("su2_about: need a nonzero axis and finite angle");
    }
    const Eigen::Matrix2cd u =
        std::cos(0.5 * angle) * Eigen::Matrix2cd::Identity() -
        1i * std::sin(0.5 * angle) * pauli_dot(axis / n);
    return SpinHalfUnitary(u);
}

SpinHalfUnitary su2_from_rotation(const Rotation3& r) {
    return su2_about(r.axis(), r.angle());
}

SpinObservable observable(const Eigen::Vector3d& direction) {
    return SpinObservable(direction);
}

}  // namespace relspin
