#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "relspin/correlation.hpp"
#include "test_helpers.hpp"

using relspin::boost_state;
using relspin::chsh;
using relspin::ChshSetting;
using relspin::compensated_chsh_setting;
using relspin::compensated_directions;
using relspin::correlation;
using relspin::epr_singlet;
using relspin::joint_probabilities;
using relspin::sample_outcomes;
using relspin::TwoParticleState;
using relspin::wigner_angle_closed_form;

namespace {

const double kTsirelson = 2.0 * std::sqrt(2.0);  // 2.8284271247461903

TwoParticleState boosted(double xi, double chi) {
    return boost_state(chi, epr_singlet(xi, 1.0));
}

}  // namespace

TEST_CASE("singlet correlations follow the minus-dot-product law") {
    auto gen = testutil::rng(51);
    const TwoParticleState s = epr_singlet(0.8, 1.0);
    for (int i = 0; i < 500; ++i) {
        const Eigen::Vector3d a = testutil::random_unit(gen);
        const Eigen::Vector3d b = testutil::random_unit(gen);
        CHECK(std::abs(correlation(s, a, b) + a.dot(b)) < 1e-12);
    }
}

TEST_CASE("equal-axis measurement on the singlet is perfectly anti-correlated") {
    auto gen = testutil::rng(52);
    const TwoParticleState s = epr_singlet(1.1, 1.0);
    for (int i = 0; i < 100; ++i) {
        const Eigen::Vector3d n = testutil::random_unit(gen);
        CHECK(std::abs(correlation(s, n, n) + 1.0) < 1e-12);
    }
}

TEST_CASE("y-axis anti-correlation survives any observer boost") {
    const Eigen::Vector3d y = Eigen::Vector3d::UnitY();
    for (double xi = 0.0; xi <= 3.01; xi += 0.25) {
        for (double chi = 0.0; chi <= 3.01; chi += 0.25) {
            CHECK(std::abs(correlation(boosted(xi, chi), y, y) + 1.0) < 1e-10);
        }
    }
}

TEST_CASE("z-axis correlation degrades as the double-angle cosine") {
    const Eigen::Vector3d z = Eigen::Vector3d::UnitZ();
    for (double xi : {0.5, 1.0, 2.0}) {
        for (double chi : {0.5, 1.0, 2.0}) {
            const double delta = wigner_angle_closed_form(xi, chi).delta;
            CHECK(std::abs(correlation(boosted(xi, chi), z, z) +
                           std::cos(2.0 * delta)) < 1e-12);
        }
    }
    // -cos(2 delta) at xi = chi = 1, frozen
    CHECK(std::abs(correlation(boosted(1.0, 1.0), z, z) - (-0.6662944625998648)) <
          1e-12);
}

TEST_CASE("joint probabilities of the singlet match the textbook table") {
    const TwoParticleState s = epr_singlet(0.0, 1.0);
    const Eigen::Vector3d z = Eigen::Vector3d::UnitZ();
    const Eigen::Vector3d y = Eigen::Vector3d::UnitY();

    const auto same = joint_probabilities(s, z, z);
    CHECK(std::abs(same.pp) < 1e-14);
    CHECK(std::abs(same.pm - 0.5) < 1e-14);
    CHECK(std::abs(same.mp - 0.5) < 1e-14);
    CHECK(std::abs(same.mm) < 1e-14);

    const auto cross = joint_probabilities(s, z, y);
    for (double p : {cross.pp, cross.pm, cross.mp, cross.mm})
        CHECK(std::abs(p - 0.25) < 1e-14);
}

TEST_CASE("boosted pair leaks same-sign outcomes at the sine-squared rate") {
    const double delta = wigner_angle_closed_form(1.0, 1.0).delta;
    const Eigen::Vector3d z = Eigen::Vector3d::UnitZ();
    const auto probs = joint_probabilities(boosted(1.0, 1.0), z, z);
    const double half_sin2 = std::sin(delta) * std::sin(delta) / 2.0;
    // sin^2(delta)/2 at xi = chi = 1, frozen
    CHECK(std::abs(probs.pp - 0.083426384350033841) < 1e-12);
    CHECK(std::abs(probs.pp - half_sin2) < 1e-12);
    CHECK(std::abs(probs.mm - half_sin2) < 1e-12);
}

TEST_CASE("joint probabilities are a distribution reproducing the correlation") {
    auto gen = testutil::rng(53);
    for (int i = 0; i < 500; ++i) {
        const TwoParticleState s = testutil::random_state(gen, 3.0);
        const Eigen::Vector3d a = testutil::random_unit(gen);
        const Eigen::Vector3d b = testutil::random_unit(gen);
        const auto probs = joint_probabilities(s, a, b);
        for (double p : {probs.pp, probs.pm, probs.mp, probs.mm}) CHECK(p >= -1e-14);
        CHECK(std::abs(probs.pp + probs.pm + probs.mp + probs.mm - 1.0) < 1e-12);
        const double from_probs = probs.pp - probs.pm - probs.mp + probs.mm;
        CHECK(std::abs(from_probs - correlation(s, a, b)) < 1e-12);
    }
}

TEST_CASE("optimal setting reaches the quantum bound on the singlet") {
    const auto report = chsh(epr_singlet(0.0, 1.0), ChshSetting::optimal_for_singlet());
    CHECK(std::abs(report.chsh - kTsirelson) < 1e-12);
    const double inv = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(report.e_qs - inv) < 1e-12);
    CHECK(std::abs(report.e_rs - inv) < 1e-12);
    CHECK(std::abs(report.e_rt - inv) < 1e-12);
    CHECK(std::abs(report.e_qt + inv) < 1e-12);
}

TEST_CASE("bell violation decays as cos-squared of the rotation angle") {
    const ChshSetting setting = ChshSetting::optimal_for_singlet();
    for (double xi = 0.0; xi <= 3.01; xi += 0.25) {
        for (double chi = 0.0; chi <= 3.01; chi += 0.25) {
            const double delta = wigner_angle_closed_form(xi, chi).delta;
            const double expected = kTsirelson * std::cos(delta) * std::cos(delta);
            CHECK(std::abs(chsh(boosted(xi, chi), setting).chsh - expected) < 1e-10);
        }
    }
    // 2 sqrt(2) cos^2(delta) at xi = chi = 1, frozen
    CHECK(std::abs(chsh(boosted(1.0, 1.0), setting).chsh - 2.3564962279159167) < 1e-12);
}

TEST_CASE("bell violation decreases strictly with either rapidity") {
    const ChshSetting setting = ChshSetting::optimal_for_singlet();
    for (double fixed : {0.5, 1.0, 2.0}) {
        double prev_xi = 1e9, prev_chi = 1e9;
        for (int i = 1; i <= 12; ++i) {
            const double r = 0.25 * i;
            const double along_xi = chsh(boosted(r, fixed), setting).chsh;
            const double along_chi = chsh(boosted(fixed, r), setting).chsh;
            CHECK(along_xi < prev_xi);
            CHECK(along_chi < prev_chi);
            prev_xi = along_xi;
            prev_chi = along_chi;
        }
    }
}

TEST_CASE("no setting or state beats the quantum bound") {
    auto gen = testutil::rng(54);
    for (int i = 0; i < 500; ++i) {
        const TwoParticleState s = testutil::random_state(gen, 3.0);
        const ChshSetting setting{testutil::random_unit(gen), testutil::random_unit(gen),
                                  testutil::random_unit(gen), testutil::random_unit(gen)};
        const auto report = chsh(s, setting);
        CHECK(std::abs(report.chsh) <= kTsirelson + 1e-10);
        for (double e : {report.e_qs, report.e_rs, report.e_rt, report.e_qt})
            CHECK(std::abs(e) <= 1.0 + 1e-12);
    }
}

TEST_CASE("zero compensation angle leaves directions untouched") {
    const Eigen::Vector3d n{0.3, -0.5, 0.8};
    const auto [a, b] = compensated_directions(n.normalized(), 0.0);
    CHECK(testutil::max_abs_diff(a, n.normalized()) < 1e-15);
    CHECK(testutil::max_abs_diff(b, n.normalized()) < 1e-15);
}

TEST_CASE("quarter-turn compensation swings z into plus-minus x") {
    const auto [a, b] =
        compensated_directions(Eigen::Vector3d::UnitZ(), std::acos(-1.0) / 2.0);
    CHECK(testutil::max_abs_diff(a, Eigen::Vector3d::UnitX()) < 1e-12);
    CHECK(testutil::max_abs_diff(b, (-Eigen::Vector3d::UnitX()).eval()) < 1e-12);
}

TEST_CASE("compensated axes restore perfect anti-correlation") {
    auto gen = testutil::rng(55);
    for (int i = 0; i < 100; ++i) {
        const double xi = testutil::uniform(gen, 0.0, 3.0);
        const double chi = testutil::uniform(gen, 0.0, 3.0);
        const double delta = wigner_angle_closed_form(xi, chi).delta;
        const Eigen::Vector3d n = testutil::random_unit(gen);
        const auto [a, b] = compensated_directions(n, delta);
        CHECK(std::abs(correlation(boosted(xi, chi), a, b) + 1.0) < 1e-10);
    }
}

TEST_CASE("zero-angle compensation returns the same setting") {
    const ChshSetting setting = ChshSetting::optimal_for_singlet();
    const ChshSetting same = compensated_chsh_setting(setting, 0.0);
    CHECK(testutil::max_abs_diff(same.q(), setting.q()) < 1e-15);
    CHECK(testutil::max_abs_diff(same.r(), setting.r()) < 1e-15);
    CHECK(testutil::max_abs_diff(same.s(), setting.s()) < 1e-15);
    CHECK(testutil::max_abs_diff(same.t(), setting.t()) < 1e-15);
}

TEST_CASE("compensated setting restores the maximal violation everywhere") {
    const ChshSetting base = ChshSetting::optimal_for_singlet();
    for (double xi = 0.0; xi <= 3.01; xi += 0.5) {
        for (double chi = 0.0; chi <= 3.01; chi += 0.5) {
            const double delta = wigner_angle_closed_form(xi, chi).delta;
            const ChshSetting setting = compensated_chsh_setting(base, delta);
            CHECK(std::abs(chsh(boosted(xi, chi), setting).chsh - kTsirelson) < 1e-10);
        }
    }
}

TEST_CASE("naive-versus-compensated gap at unit rapidities") {
    const double delta = wigner_angle_closed_form(1.0, 1.0).delta;
    const ChshSetting base = ChshSetting::optimal_for_singlet();
    const double naive = chsh(boosted(1.0, 1.0), base).chsh;
    const double fixed =
        chsh(boosted(1.0, 1.0), compensated_chsh_setting(base, delta)).chsh;
    // 2 sqrt(2) (1 - cos^2 delta) at xi = chi = 1, frozen
    CHECK(std::abs((fixed - naive) - 0.47193089683027356) < 1e-12);
}

TEST_CASE("settings normalize their directions and reject zero vectors") {
    const ChshSetting setting{{0.0, 0.0, 2.0}, {0.0, 3.0, 0.0}, {1.0, 1.0, 0.0},
                              {0.0, -2.0, 2.0}};
    for (const auto& v : {setting.q(), setting.r(), setting.s(), setting.t()})
        CHECK(std::abs(v.norm() - 1.0) < 1e-12);
    CHECK_THROWS_AS(ChshSetting({0.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0},
                                {0.0, 1.0, 0.0}),
                    std::domain_error);
}

TEST_CASE("outcome sampling is seed-deterministic and converges") {
    const TwoParticleState s = boosted(1.0, 1.0);
    const Eigen::Vector3d z = Eigen::Vector3d::UnitZ();
    const auto counts1 = sample_outcomes(s, z, z, 20000, 7);
    const auto counts2 = sample_outcomes(s, z, z, 20000, 7);
    CHECK(counts1.pp == counts2.pp);
    CHECK(counts1.pm == counts2.pm);
    CHECK(counts1.mp == counts2.mp);
    CHECK(counts1.mm == counts2.mm);
    CHECK(counts1.total() == 20000);

    const double exact = correlation(s, z, z);
    // 5-sigma band for a +/-1 average over n draws
    CHECK(std::abs(counts1.empirical_correlation() - exact) <
          5.0 / std::sqrt(20000.0));
}
