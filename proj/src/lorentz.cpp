#include "relspin/lorentz.hpp"

#include <cmath>
#include <string>

namespace relspin {

namespace {

// Threshold below which the (gamma-1) p_i p_k / |p|^2 term is taken at its
// |p| -> 0 limit.
constexpr double kRestThreshold = 1e-12;

void require_finite(const Eigen::Vector4d& v, const char* what) {
    if (!v.allFinite()) {
        throw std::domain_error(std::string(what) + ": non-finite components");
    }
}

}  // namespace

FourMomentum::FourMomentum(const Eigen::Vector4d& components, double mass)
    : p_(components), mass_(mass) {
    require_finite(p_, "FourMomentum");
    if (!(mass_ > 0.0) || !std::isfinite(mass_)) {
        throw std::domain_error("FourMomentum: mass must be positive");
    }
    if (!(p_[0] > 0.0)) {
        throw std::domain_error("FourMomentum: energy must be positive");
    }
    const double inv = invariant();
    const double scale = std::max(p_[0] * p_[0], mass_ * mass_);
    if (std::abs(inv - mass_ * mass_) > kShellRelTol * scale) {
        throw std::domain_error("FourMomentum: components are off the mass shell");
    }
}

FourMomentum FourMomentum::from_spatial(const Eigen::Vector3d& p, double mass) {
    if (!(mass > 0.0) || !std::isfinite(mass)) {
        throw std::domain_error("FourMomentum: mass must be positive");
    }
    Eigen::Vector4d c;
    c[0] = std::sqrt(p.squaredNorm() + mass * mass);
    c.tail<3>() = p;
    return FourMomentum(c, mass);
}

double FourMomentum::invariant() const {
    return p_[0] * p_[0] - p_.tail<3>().squaredNorm();
}

const Eigen::Matrix4d& minkowski_metric() {
    static const Eigen::Matrix4d eta =
        Eigen::Vector4d(1.0, -1.0, -1.0, -1.0).asDiagonal();
    return eta;
}

double metric_deviation(const Eigen::Matrix4d& m) {
    const Eigen::Matrix4d& eta = minkowski_metric();
    return (m.transpose() * eta * m - eta).cwiseAbs().maxCoeff();
}

LorentzMatrix::LorentzMatrix(const Eigen::Matrix4d& m, double tol) : m_(m) {
    if (!m_.allFinite()) {
        throw std::domain_error("LorentzMatrix: non-finite entries");
    }
    const double amax = m_.cwiseAbs().maxCoeff();
    const double scale = std::max(1.0, amax * amax);
    if (metric_deviation(m_) > tol * scale) {
        throw std::domain_error("LorentzMatrix: does not preserve the metric");
    }
    if (std::abs(m_.determinant() - 1.0) > tol * scale || m_(0, 0) < 1.0 - tol * scale) {
        throw std::domain_error("LorentzMatrix: not proper orthochronous");
    }
}

LorentzMatrix LorentzMatrix::identity() {
    return LorentzMatrix(Eigen::Matrix4d::Identity());
}

FourMomentum rest_momentum(double mass) {
    if (!(mass > 0.0) || !std::isfinite(mass)) {
        throw std::domain_error("rest_momentum: mass must be positive");
    }
    return FourMomentum(Eigen::Vector4d(mass, 0.0, 0.0, 0.0), mass);
}

LorentzMatrix standard_boost(const FourMomentum& p) {
    const double m = p.mass();
    const double gamma = p.gamma();
    const Eigen::Vector3d sp = p.spatial();
    const double n2 = sp.squaredNorm();

    Eigen::Matrix4d L = Eigen::Matrix4d::Identity();
    L(0, 0) = gamma;
    L.block<1, 3>(0, 1) = sp.transpose() / m;
    L.block<3, 1>(1, 0) = sp / m;
    if (std::sqrt(n2) > kRestThreshold * m) {
        L.block<3, 3>(1, 1) += (gamma - 1.0) * sp * sp.transpose() / n2;
    }
    return LorentzMatrix(L);
}

LorentzMatrix boost_x(Rapidity xi) {
    if (!std::isfinite(xi)) {
        throw std::domain_error("boost_x: rapidity must be finite");
    }
    const double c = std::cosh(xi), s = std::sinh(xi);
    Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
    m(0, 0) = c;
    m(0, 1) = s;
    m(1, 0) = s;
    m(1, 1) = c;
    return LorentzMatrix(m);
}

LorentzMatrix boost_z(Rapidity chi) {
    if (!std::isfinite(chi)) {
        throw std::domain_error("boost_z: rapidity must be finite");
    }
    const double c = std::cosh(chi), s = std::sinh(chi);
    Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
    m(0, 0) = c;
    m(0, 3) = -s;
    m(3, 0) = -s;
    m(3, 3) = c;
    return LorentzMatrix(m);
}

LorentzMatrix rotation_about(const Eigen::Vector3d& axis, double angle) {
    const double n = axis.norm();
    if (!(n > 0.0) || !std::isfinite(n) || !std::isfinite(angle)) {
        throw std::domain_error("rotation_about: need a nonzero axis and finite angle");
    }
    Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
    m.block<3, 3>(1, 1) = Eigen::AngleAxisd(angle, axis / n).toRotationMatrix();
    return LorentzMatrix(m);
}

LorentzMatrix compose(const LorentzMatrix& a, const LorentzMatrix& b) {
    return LorentzMatrix(a.matrix() * b.matrix());
}

LorentzMatrix inverse(const LorentzMatrix& a) {
    const Eigen::Matrix4d& eta = minkowski_metric();
    return LorentzMatrix(eta * a.matrix().transpose() * eta);
}

FourMomentum apply(const LorentzMatrix& a, const FourMomentum& p) {
    return FourMomentum(a.matrix() * p.components(), p.mass());
}

}  // namespace relspin
