// Shared randomized-input generators for the test binaries. Everything is
// seeded explicitly so failures reproduce.

#pragma once

#include <complex>
#include <numbers>
#include <random>

#include "relspin/state.hpp"

namespace testutil {

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64{seed}; }

inline double uniform(std::mt19937_64& gen, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen);
}

/// Isotropic unit vector (normalized Gaussian triple).
inline Eigen::Vector3d random_unit(std::mt19937_64& gen) {
    std::normal_distribution<double> normal;
    Eigen::Vector3d v{normal(gen), normal(gen), normal(gen)};
    while (v.norm() < 1e-6) v = {normal(gen), normal(gen), normal(gen)};
    return v.normalized();
}

inline relspin::Rotation3 random_rotation(std::mt19937_64& gen) {
    return relspin::Rotation3::about(random_unit(gen),
                                     uniform(gen, 0.0, std::numbers::pi));
}

/// On-shell momentum with |p| up to pmax, isotropic direction.
inline relspin::FourMomentum random_momentum(std::mt19937_64& gen, double mass,
                                             double pmax) {
    const Eigen::Vector3d p = random_unit(gen) * uniform(gen, 0.0, pmax);
    return relspin::FourMomentum::from_spatial(p, mass);
}

/// Haar-ish random normalized two-qubit amplitude vector.
inline Eigen::Vector4cd random_amplitudes(std::mt19937_64& gen) {
    std::normal_distribution<double> normal;
    Eigen::Vector4cd a;
    for (int i = 0; i < 4; ++i) a[i] = {normal(gen), normal(gen)};
    while (a.norm() < 1e-6)
        for (int i = 0; i < 4; ++i) a[i] = {normal(gen), normal(gen)};
    return a / a.norm();
}

/// Random spin state on back-to-back x-axis momentum tags.
inline relspin::TwoParticleState random_state(std::mt19937_64& gen, double xi_max) {
    const double xi = uniform(gen, 0.0, xi_max);
    const double mass = uniform(gen, 0.5, 2.0);
    const Eigen::Vector3d px{mass * std::sinh(xi), 0.0, 0.0};
    return relspin::TwoParticleState(
        random_amplitudes(gen), relspin::FourMomentum::from_spatial(px, mass),
        relspin::FourMomentum::from_spatial(-px, mass));
}

/// Largest entrywise deviation between two complex matrices/vectors.
template <typename A, typename B>
double max_abs_diff(const A& a, const B& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

/// Distance up to a global phase: min over phases of the sup-norm difference.
inline double phase_free_distance(const Eigen::Vector4cd& a, const Eigen::Vector4cd& b) {
    const std::complex<double> overlap = a.dot(b);  // conjugate-linear in a
    if (std::abs(overlap) < 1e-15) return (a - b).cwiseAbs().maxCoeff();
    const std::complex<double> phase = overlap / std::abs(overlap);
    return (phase * a - b).cwiseAbs().maxCoeff();
}

}  // namespace testutil
