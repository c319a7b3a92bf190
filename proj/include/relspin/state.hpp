#pragma once

#include <array>
#include <complex>

#include "relspin/spin.hpp"

namespace relspin {

/// Two spin-1/2 particles with sharp momenta.
///
/// The spin part is a normalized 4-vector of amplitudes over the product
/// basis {|up,up>, |up,down>, |down,up>, |down,down>}; the first slot always
/// belongs to the particle tagged momentum_plus (the +x mover for a pair
/// built by epr_singlet). Momenta are classical labels, not superposed.
class TwoParticleState {
public:
    TwoParticleState(const Eigen::Vector4cd& amplitudes, const FourMomentum& plus,
                     const FourMomentum& minus);

    const Eigen::Vector4cd& amplitudes() const { return a_; }
    const FourMomentum& momentum_plus() const { return p_plus_; }
    const FourMomentum& momentum_minus() const { return p_minus_; }

private:
    Eigen::Vector4cd a_;
    FourMomentum p_plus_;
    FourMomentum p_minus_;
};

/// Amplitudes in the total-spin basis: the singlet (|ud> - |du>)/sqrt(2)
/// and the triplet components with z-projection m = +1, 0, -1.
struct SingletFraction {
    std::complex<double> singlet;
    std::array<std::complex<double>, 3> triplet;
};

/// The total-spin-zero pair (|ud> - |du>)/sqrt(2) moving apart along x with
/// momenta (M cosh xi, +/- M sinh xi, 0, 0).
TwoParticleState epr_singlet(Rapidity xi, double mass);

/// The state seen by observers moving along +z with velocity tanh(chi).
///
/// Each particle's spin is rotated about y by its own little-group angle
/// (opposite signs for opposite movers), evaluated in closed form, which
/// stays exact at rapidities where an explicit 4x4 product would drown in
/// rounding. Momenta tags transform by the z frame change. Requires the
/// momentum tags to lie on the x-axis; anything else falls back to
/// transform_general.
TwoParticleState boost_state(Rapidity chi, const TwoParticleState& s);

/// Same transformation law for an arbitrary Lorentz transformation, built
/// from the explicit Wigner rotation of each momentum tag.
TwoParticleState transform_general(const LorentzMatrix& lambda,
                                   const TwoParticleState& s);

/// Projection of the spin amplitudes onto the singlet/triplet basis.
SingletFraction singlet_fraction(const TwoParticleState& s);

/// Reduced spin density matrix of one particle (0 = plus slot, 1 = minus).
Eigen::Matrix2cd reduced_density(const TwoParticleState& s, int particle);

/// Von Neumann entropy of the reduced single-particle state, in bits.
/// 1 for a maximally entangled pair, 0 for a product state.
double entanglement_entropy_bits(const TwoParticleState& s);

}  // namespace relspin
