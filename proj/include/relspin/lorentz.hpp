#pragma once

#include <Eigen/Dense>

#include "relspin/common.hpp"

namespace relspin {

/// Additive boost parameter; velocity v = tanh(rapidity) in units c = 1.
using Rapidity = double;

/// Timelike four-momentum (p0, p1, p2, p3) of a massive particle, c = 1.
///
/// Construction enforces p0 > 0 and the mass-shell relation
/// p0^2 - |p|^2 = M^2 (relative tolerance, so large boosts validate too).
class FourMomentum {
public:
    FourMomentum(const Eigen::Vector4d& components, double mass);

    /// Builds the on-shell momentum with the given spatial part,
    /// p0 = sqrt(|p|^2 + M^2).
    static FourMomentum from_spatial(const Eigen::Vector3d& p, double mass);

    const Eigen::Vector4d& components() const { return p_; }
    double operator[](int mu) const { return p_[mu]; }
    double energy() const { return p_[0]; }
    Eigen::Vector3d spatial() const { return p_.tail<3>(); }
    double mass() const { return mass_; }

    /// Lorentz factor p0 / M.
    double gamma() const { return p_[0] / mass_; }

    /// p0^2 - |p|^2, equal to M^2 up to rounding.
    double invariant() const;

private:
    Eigen::Vector4d p_;
    double mass_;
};

/// Proper orthochronous Lorentz transformation Lambda^mu_nu.
/// Row index is the upper index, so applying to a column four-vector is a
/// plain matrix-vector product.
///
/// Construction checks Lambda^T eta Lambda = eta, det = +1 and
/// Lambda^0_0 >= 1. The check is scaled by the squared magnitude of the
/// largest entry: for O(1) matrices it is the absolute tolerance `tol`,
/// while high-rapidity boosts are held to the best double precision admits.
class LorentzMatrix {
public:
    explicit LorentzMatrix(const Eigen::Matrix4d& m, double tol = kMetricTol);

    static LorentzMatrix identity();

    const Eigen::Matrix4d& matrix() const { return m_; }
    double operator()(int mu, int nu) const { return m_(mu, nu); }

private:
    Eigen::Matrix4d m_;
};

/// diag(+1, -1, -1, -1).
const Eigen::Matrix4d& minkowski_metric();

/// max |m^T eta m - eta|, entrywise.
double metric_deviation(const Eigen::Matrix4d& m);

/// Rest momentum (M, 0, 0, 0).
FourMomentum rest_momentum(double mass);

/// The canonical boost L(p) taking the rest momentum to p:
///   L^0_0 = gamma,  L^0_i = L^i_0 = p_i / M,
///   L^i_k = delta_ik + (gamma - 1) p_i p_k / |p|^2,
/// with the |p| -> 0 limit of the last term defined as 0.
LorentzMatrix standard_boost(const FourMomentum& p);

/// Boost along +x with rapidity xi (takes (M,0,0,0) to
/// (M cosh xi, M sinh xi, 0, 0)).
LorentzMatrix boost_x(Rapidity xi);

/// Frame transformation for an observer moving along +z with velocity
/// tanh(chi): takes (M,0,0,0) to (M cosh chi, 0, 0, -M sinh chi).
LorentzMatrix boost_z(Rapidity chi);

/// Spatial rotation embedded as a 4x4 Lorentz transformation.
LorentzMatrix rotation_about(const Eigen::Vector3d& axis, double angle);

/// Matrix product a * b (apply b first, then a).
LorentzMatrix compose(const LorentzMatrix& a, const LorentzMatrix& b);

/// Group inverse via eta-conjugation: Lambda^-1 = eta Lambda^T eta.
LorentzMatrix inverse(const LorentzMatrix& a);

/// Transformed momentum Lambda p (mass label unchanged).
FourMomentum apply(const LorentzMatrix& a, const FourMomentum& p);

}  // namespace relspin
