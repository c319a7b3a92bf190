#include "relspin/wigner.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace relspin {

namespace {

constexpr double kZeroAngle = 1e-9;       // below this the axis is conventional
constexpr double kPiMargin = 1e-6;        // within this of pi, use the symmetric part

Eigen::Vector3d antisymmetric_vector(const Eigen::Matrix3d& r) {
    return {r(2, 1) - r(1, 2), r(0, 2) - r(2, 0), r(1, 0) - r(0, 1)};
}

}  // namespace

std::pair<Eigen::Vector3d, double> extract_axis_angle(const Eigen::Matrix3d& r,
                                                      double tol) {
    if (!r.allFinite() ||
        (r.transpose() * r - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() > tol ||
        std::abs(r.determinant() - 1.0) > tol) {
        throw std::domain_error("extract_axis_angle: input is not a rotation");
    }

    // R - R^T = 2 sin(theta) [axis]_x and trace = 1 + 2 cos(theta).
    const Eigen::Vector3d a = antisymmetric_vector(r);
    const double angle = std::atan2(a.norm(), r.trace() - 1.0);

    if (angle < kZeroAngle) {
        return {Eigen::Vector3d::UnitZ(), angle};
    }
    if (angle > std::numbers::pi - kPiMargin) {
        // Near pi the antisymmetric part vanishes; (R + I)/2 ~ n n^T.
        const Eigen::Matrix3d b = 0.5 * (r + Eigen::Matrix3d::Identity());
        int j = 0;
        b.diagonal().maxCoeff(&j);
        Eigen::Vector3d n = b.col(j).normalized();
        int k = 0;
        n.cwiseAbs().maxCoeff(&k);
        if (n[k] < 0.0) n = -n;
        return {n, angle};
    }
    return {a.normalized(), angle};
}

Rotation3::Rotation3(const Eigen::Matrix3d& m, double tol) : m_(m) {
    auto [axis, angle] = extract_axis_angle(m_, tol);
    axis_ = axis;
    angle_ = angle;
}

Rotation3 Rotation3::about(const Eigen::Vector3d& axis, double angle) {
    const double n = axis.norm();
    if (!(n > 0.0) || !std::isfinite(n) || !std::isfinite(angle)) {
        throw std::domain_error("Rotation3::about: need a nonzero axis and finite angle");
    }
    return Rotation3(Eigen::AngleAxisd(angle, axis / n).toRotationMatrix());
}

Rotation3 Rotation3::identity() {
    return Rotation3(Eigen::Matrix3d::Identity());
}

double Rotation3::signed_angle_about(const Eigen::Vector3d& reference) const {
    const double d = axis_.dot(reference);
    return d < 0.0 ? -angle_ : (d > 0.0 ? angle_ : 0.0);
}

Rotation3 wigner_rotation(const LorentzMatrix& lambda, const FourMomentum& p) {
    const LorentzMatrix moved = standard_boost(apply(lambda, p));
    const Eigen::Matrix4d w =
        inverse(moved).matrix() * lambda.matrix() * standard_boost(p).matrix();

    const double time_dev =
        std::max({std::abs(w(0, 0) - 1.0), w.block<1, 3>(0, 1).cwiseAbs().maxCoeff(),
                  w.block<3, 1>(1, 0).cwiseAbs().maxCoeff()});
    if (time_dev > kWignerBlockTol) {
        throw internal_error(
            "wigner_rotation: product is not block-diagonal (time-part deviation " +
            std::to_string(time_dev) + ")");
    }
    return Rotation3(w.block<3, 3>(1, 1));
}

WignerAngle wigner_angle_closed_form(Rapidity xi, Rapidity chi) {
    if (!std::isfinite(xi) || !std::isfinite(chi)) {
        throw std::domain_error("wigner_angle_closed_form: rapidities must be finite");
    }
    // cosh xi + cosh chi >= 2, so the quadrant is always well defined.
    const double delta =
        std::atan2(std::sinh(xi) * std::sinh(chi), std::cosh(xi) + std::cosh(chi));
    return {delta, xi, chi};
}

}  // namespace relspin
