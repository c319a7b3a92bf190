#pragma once

#include <cstdint>
#include <utility>

#include "relspin/state.hpp"

namespace relspin {

/// Measurement directions for a CHSH run: q, r on the first particle,
/// s, t on the second. Normalized on construction.
class ChshSetting {
public:
    ChshSetting(const Eigen::Vector3d& q, const Eigen::Vector3d& r,
                const Eigen::Vector3d& s, const Eigen::Vector3d& t);

    /// The setting that attains the Tsirelson bound 2*sqrt(2) on the spin
    /// singlet: q = z, r = y, s = -(y+z)/sqrt(2), t = (z-y)/sqrt(2).
    static ChshSetting optimal_for_singlet();

    const Eigen::Vector3d& q() const { return q_; }
    const Eigen::Vector3d& r() const { return r_; }
    const Eigen::Vector3d& s() const { return s_; }
    const Eigen::Vector3d& t() const { return t_; }

private:
    Eigen::Vector3d q_, r_, s_, t_;
};

/// The four joint expectation values and their CHSH combination
/// <QS> + <RS> + <RT> - <QT>.
struct CorrelationReport {
    double e_qs;
    double e_rs;
    double e_rt;
    double e_qt;
    double chsh;
};

/// Outcome probabilities for a pair of +/-1 measurements, in the order
/// (+,+), (+,-), (-,+), (-,-).
struct JointProbabilities {
    double pp;
    double pm;
    double mp;
    double mm;
};

/// Tallies from a Monte Carlo run of joint measurements.
struct OutcomeCounts {
    std::int64_t pp = 0;
    std::int64_t pm = 0;
    std::int64_t mp = 0;
    std::int64_t mm = 0;

    std::int64_t total() const { return pp + pm + mp + mm; }
    double empirical_correlation() const;
};

/// <(a.sigma) x (b.sigma)> in the given state; a real number in [-1, 1].
double correlation(const TwoParticleState& state, const Eigen::Vector3d& a,
                   const Eigen::Vector3d& b);

/// Outcome probabilities via the spectral projectors (I +/- n.sigma)/2.
JointProbabilities joint_probabilities(const TwoParticleState& state,
                                       const Eigen::Vector3d& a,
                                       const Eigen::Vector3d& b);

/// CHSH evaluation with directions (q, r) against (s, t).
CorrelationReport chsh(const TwoParticleState& state, const ChshSetting& setting);

/// Measurement directions precessed to follow the spin rotation: the first
/// particle's axis rotated about y by +delta, the second's by -delta.
std::pair<Eigen::Vector3d, Eigen::Vector3d> compensated_directions(
    const Eigen::Vector3d& n, double delta);

/// A full CHSH setting precessed the same way: q, r by +delta, s, t by -delta.
ChshSetting compensated_chsh_setting(const ChshSetting& setting, double delta);

/// Samples n joint outcomes from the exact distribution; deterministic for a
/// given seed. Demo machinery: expectation values themselves are computed
/// exactly, never sampled.
OutcomeCounts sample_outcomes(const TwoParticleState& state, const Eigen::Vector3d& a,
                              const Eigen::Vector3d& b, std::int64_t n,
                              std::uint64_t seed);

}  // namespace relspin
