#include "relspin/correlation.hpp"

#include <cmath>
#include <random>
#include <string>

namespace relspin {

namespace {

Eigen::Vector3d normalized_direction(const Eigen::Vector3d& v, const char* what) {
    const double n = v.norm();
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw std::domain_error(std::string(what) + ": direction must be nonzero");
    }
    return v / n;
}

Eigen::Matrix4cd kron2(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
    Eigen::Matrix4cd out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    return out;
}

double expectation(const TwoParticleState& state, const Eigen::Matrix4cd& op) {
    const Eigen::Vector4cd& a = state.amplitudes();
    return (a.adjoint() * op * a)(0, 0).real();
}

Eigen::Matrix3d rotation_y(double angle) {
    return Eigen::AngleAxisd(angle, Eigen::Vector3d::UnitY()).toRotationMatrix();
}

}  // namespace

ChshSetting::ChshSetting(const Eigen::Vector3d& q, const Eigen::Vector3d& r,
                         const Eigen::Vector3d& s, const Eigen::Vector3d& t)
    : q_(normalized_direction(q, "ChshSetting")),
      r_(normalized_direction(r, "ChshSetting")),
      s_(normalized_direction(s, "ChshSetting")),
      t_(normalized_direction(t, "ChshSetting")) {}

ChshSetting ChshSetting::optimal_for_singlet() {
    const double r = 1.0 / std::sqrt(2.0);
    return ChshSetting(Eigen::Vector3d(0, 0, 1), Eigen::Vector3d(0, 1, 0),
                       Eigen::Vector3d(0, -r, -r), Eigen::Vector3d(0, -r, r));
}

double OutcomeCounts::empirical_correlation() const {
    const std::int64_t n = total();
    if (n == 0) return 0.0;
    return static_cast<double>(pp - pm - mp + mm) / static_cast<double>(n);
}

double correlation(const TwoParticleState& state, const Eigen::Vector3d& a,
                   const Eigen::Vector3d& b) {
    const SpinObservable oa = observable(a);
    const SpinObservable ob = observable(b);
    return expectation(state, kron2(oa.matrix(), ob.matrix()));
}

JointProbabilities joint_probabilities(const TwoParticleState& state,
                                       const Eigen::Vector3d& a,
                                       const Eigen::Vector3d& b) {
    const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
    const Eigen::Matrix2cd sa = observable(a).matrix();
    const Eigen::Matrix2cd sb = observable(b).matrix();
    const Eigen::Matrix2cd ap = 0.5 * (id + sa), am = 0.5 * (id - sa);
    const Eigen::Matrix2cd bp = 0.5 * (id + sb), bm = 0.5 * (id - sb);
    return {expectation(state, kron2(ap, bp)), expectation(state, kron2(ap, bm)),
            expectation(state, kron2(am, bp)), expectation(state, kron2(am, bm))};
}

CorrelationReport chsh(const TwoParticleState& state, const ChshSetting& setting) {
    CorrelationReport rep;
    rep.e_qs = correlation(state, setting.q(), setting.s());
    rep.e_rs = correlation(state, setting.r(), setting.s());
    rep.e_rt = correlation(state, setting.r(), setting.t());
    rep.e_qt = correlation(state, setting.q(), setting.t());
    rep.chsh = rep.e_qs + rep.e_rs + rep.e_rt - rep.e_qt;
    return rep;
}

std::pair<Eigen::Vector3d, Eigen::Vector3d> compensated_directions(
    const Eigen::Vector3d& n, double delta) {
    const Eigen::Vector3d unit = normalized_direction(n, "compensated_directions");
    return {rotation_y(delta) * unit, rotation_y(-delta) * unit};
}

ChshSetting compensated_chsh_setting(const ChshSetting& setting, double delta) {
    const Eigen::Matrix3d plus = rotation_y(delta);
    const Eigen::Matrix3d minus = rotation_y(-delta);
    return ChshSetting(plus * setting.q(), plus * setting.r(), minus * setting.s(),
                       minus * setting.t());
}

OutcomeCounts sample_outcomes(const TwoParticleState& state, const Eigen::Vector3d& a,
                              const Eigen::Vector3d& b, std::int64_t n,
                              std::uint64_t seed) {
    if (n < 0) {
        throw std::domain_error("sample_outcomes: sample count must be nonnegative");
    }
    const JointProbabilities p = joint_probabilities(state, a, b);
    std::mt19937_64 rng(seed);
    std::discrete_distribution<int> dist({std::max(p.pp, 0.0), std::max(p.pm, 0.0),
                                          std::max(p.mp, 0.0), std::max(p.mm, 0.0)});
    OutcomeCounts counts;
    for (std::int64_t i = 0; i < n; ++i) {
        switch (dist(rng)) {
            case 0: ++counts.pp; break;
            case 1: ++counts.pm; break;
            case 2: ++counts.mp; break;
            default: ++counts.mm; break;
        }
    }
    return counts;
}

}  // namespace relspin
