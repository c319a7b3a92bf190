#include "relspin/state.hpp"

#include <cmath>

namespace relspin {

namespace {

// Relative transverse-momentum threshold for treating a tag as x-collinear.
constexpr double kAxisTol = 1e-9;

Eigen::Vector4cd kron_apply(const Eigen::Matrix2cd& u1, const Eigen::Matrix2cd& u2,
                            const Eigen::Vector4cd& a) {
    Eigen::Vector4cd out = Eigen::Vector4cd::Zero();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    out[2 * i + j] += u1(i, k) * u2(j, l) * a[2 * k + l];
    return out;
}

bool x_collinear(const FourMomentum& p) {
    const double t = std::max(std::abs(p[2]), std::abs(p[3]));
    return t <= kAxisTol * p.energy();
}

// Signed x-rapidity recovered from an x-collinear tag.
double x_rapidity(const FourMomentum& p) {
    return std::asinh(p[1] / p.mass());
}

}  // namespace

TwoParticleState::TwoParticleState(const Eigen::Vector4cd& amplitudes,
                                   const FourMomentum& plus, const FourMomentum& minus)
    : a_(amplitudes), p_plus_(plus), p_minus_(minus) {
    if (!a_.allFinite()) {
        throw std::domain_error("TwoParticleState: non-finite amplitudes");
    }
    const double norm = a_.norm();
    if (std::abs(norm - 1.0) > kStateNormTol) {
        throw std::domain_error("TwoParticleState: amplitudes are not normalized");
    }
    a_ /= norm;
    if (std::abs(p_plus_.mass() - p_minus_.mass()) >
        kShellRelTol * std::max(p_plus_.mass(), p_minus_.mass())) {
        throw std::domain_error("TwoParticleState: momentum tags must share one mass");
    }
}

TwoParticleState epr_singlet(Rapidity xi, double mass) {
    if (!(mass > 0.0) || !std::isfinite(mass)) {
        throw std::domain_error("epr_singlet: mass must be positive");
    }
    if (!std::isfinite(xi)) {
        throw std::domain_error("epr_singlet: rapidity must be finite");
    }
    const double s = 1.0 / std::sqrt(2.0);
    const Eigen::Vector4cd amps(0.0, s, -s, 0.0);
    const double e = mass * std::cosh(xi);
    const double px = mass * std::sinh(xi);
    const FourMomentum plus(Eigen::Vector4d(e, px, 0.0, 0.0), mass);
    const FourMomentum minus(Eigen::Vector4d(e, -px, 0.0, 0.0), mass);
    return TwoParticleState(amps, plus, minus);
}

TwoParticleState boost_state(Rapidity chi, const TwoParticleState& s) {
    const LorentzMatrix lam = boost_z(chi);
    if (!x_collinear(s.momentum_plus()) || !x_collinear(s.momentum_minus())) {
        return transform_general(lam, s);
    }
    const double delta_plus =
        wigner_angle_closed_form(x_rapidity(s.momentum_plus()), chi).delta;
    const double delta_minus =
        wigner_angle_closed_form(x_rapidity(s.momentum_minus()), chi).delta;
    const SpinHalfUnitary u_plus = su2_about(Eigen::Vector3d::UnitY(), delta_plus);
    const SpinHalfUnitary u_minus = su2_about(Eigen::Vector3d::UnitY(), delta_minus);
    return TwoParticleState(
        kron_apply(u_plus.matrix(), u_minus.matrix(), s.amplitudes()),
        apply(lam, s.momentum_plus()), apply(lam, s.momentum_minus()));
}

TwoParticleState transform_general(const LorentzMatrix& lambda,
                                   const TwoParticleState& s) {
    const SpinHalfUnitary u_plus =
        su2_from_rotation(wigner_rotation(lambda, s.momentum_plus()));
    const SpinHalfUnitary u_minus =
        su2_from_rotation(wigner_rotation(lambda, s.momentum_minus()));
    return TwoParticleState(
        kron_apply(u_plus.matrix(), u_minus.matrix(), s.amplitudes()),
        apply(lambda, s.momentum_plus()), apply(lambda, s.momentum_minus()));
}

SingletFraction singlet_fraction(const TwoParticleState& s) {
    const Eigen::Vector4cd& a = s.amplitudes();
    const double r = 1.0 / std::sqrt(2.0);
    SingletFraction f;
    f.singlet = r * (a[1] - a[2]);
    f.triplet = {a[0], r * (a[1] + a[2]), a[3]};
    return f;
}

Eigen::Matrix2cd reduced_density(const TwoParticleState& s, int particle) {
    if (particle != 0 && particle != 1) {
        throw std::domain_error("reduced_density: particle index must be 0 or 1");
    }
    const Eigen::Vector4cd& a = s.amplitudes();
    Eigen::Matrix2cd rho = Eigen::Matrix2cd::Zero();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                if (particle == 0)
                    rho(i, j) += a[2 * i + k] * std::conj(a[2 * j + k]);
                else
                    rho(i, j) += a[2 * k + i] * std::conj(a[2 * k + j]);
            }
    return rho;
}

double entanglement_entropy_bits(const TwoParticleState& s) {
    const Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(reduced_density(s, 0));
    double bits = 0.0;
    for (int i = 0; i < 2; ++i) {
        const double lam = es.eigenvalues()[i];
        if (lam > 0.0) bits -= lam * std::log2(lam);
    }
    return bits;
}

}  // namespace relspin
