// Python bindings for the relspin core: a small functional surface over the
// Wigner-rotation, boosted-singlet and correlation machinery.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "relspin/cli.hpp"
#include "relspin/correlation.hpp"
#include "relspin/state.hpp"

namespace py = pybind11;

namespace {

relspin::TwoParticleState boosted_pair(double xi, double chi, double mass) {
    return relspin::boost_state(chi, relspin::epr_singlet(xi, mass));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() =
        "Relativistic EPR correlations: Wigner rotations of boosted "
        "spin-singlet pairs, CHSH values and compensated measurement axes.";

    m.def(
        "wigner_angle",
        [](double xi, double chi) {
            return relspin::wigner_angle_closed_form(xi, chi).delta;
        },
        py::arg("xi"), py::arg("chi"),
        "Closed-form little-group angle atan2(sinh xi sinh chi, cosh xi + cosh chi).");

    m.def(
        "wigner_angle_matrix",
        [](double xi, double chi, double mass) {
            const auto p = relspin::apply(relspin::boost_x(xi),
                                          relspin::rest_momentum(mass));
            const auto w = relspin::wigner_rotation(relspin::boost_z(chi), p);
            return w.signed_angle_about(Eigen::Vector3d::UnitY());
        },
        py::arg("xi"), py::arg("chi"), py::arg("mass") = 1.0,
        "Same angle from the explicit 4x4 product L^-1(Lambda p) Lambda L(p).");

    m.def(
        "boost_x", [](double xi) { return relspin::boost_x(xi).matrix(); },
        py::arg("xi"), "4x4 boost along +x with rapidity xi.");
    m.def(
        "boost_z", [](double chi) { return relspin::boost_z(chi).matrix(); },
        py::arg("chi"),
        "4x4 frame change to an observer moving along +z with velocity tanh(chi).");
    m.def(
        "standard_boost",
        [](const Eigen::Vector3d& p, double mass) {
            return relspin::standard_boost(relspin::FourMomentum::from_spatial(p, mass))
                .matrix();
        },
        py::arg("momentum"), py::arg("mass") = 1.0,
        "Canonical boost L(p) taking (M,0,0,0) to the on-shell momentum with "
        "the given spatial part.");

    m.def(
        "su2_about",
        [](const Eigen::Vector3d& axis, double angle) {
            return relspin::su2_about(axis, angle).matrix();
        },
        py::arg("axis"), py::arg("angle"),
        "Spin-1/2 rotation exp(-i angle/2 axis.sigma).");

    m.def(
        "singlet_amplitudes",
        [](double xi, double mass) {
            return relspin::epr_singlet(xi, mass).amplitudes();
        },
        py::arg("xi"), py::arg("mass") = 1.0,
        "Spin amplitudes (uu, ud, du, dd) of the back-to-back singlet pair.");

    m.def(
        "boosted_amplitudes",
        [](double xi, double chi, double mass) {
            return boosted_pair(xi, chi, mass).amplitudes();
        },
        py::arg("xi"), py::arg("chi"), py::arg("mass") = 1.0,
        "Spin amplitudes of the pair as seen by the moving observer.");

    m.def(
        "singlet_weight",
        [](double xi, double chi, double mass) {
            return relspin::singlet_fraction(boosted_pair(xi, chi, mass)).singlet;
        },
        py::arg("xi"), py::arg("chi"), py::arg("mass") = 1.0,
        "Overlap of the boosted state with the spin singlet.");

    m.def(
        "entanglement_entropy_bits",
        [](double xi, double chi, double mass) {
            return relspin::entanglement_entropy_bits(boosted_pair(xi, chi, mass));
        },
        py::arg("xi"), py::arg("chi"), py::arg("mass") = 1.0,
        "Von Neumann entropy of one particle's reduced state, in bits.");

    m.def(
        "correlation",
        [](double xi, double chi, const Eigen::Vector3d& a, const Eigen::Vector3d& b,
           double mass) {
            return relspin::correlation(boosted_pair(xi, chi, mass), a, b);
        },
        py::arg("xi"), py::arg("chi"), py::arg("a"), py::arg("b"),
        py::arg("mass") = 1.0,
        "Joint expectation <(a.sigma)(b.sigma)> in the boosted state.");

    m.def(
        "compensated_directions",
        [](const Eigen::Vector3d& n, double delta) {
            return relspin::compensated_directions(n, delta);
        },
        py::arg("n"), py::arg("delta"),
        "Measurement axes precessed with the spins: n rotated about y by "
        "+delta for the first particle, -delta for the second.");

    m.def(
        "evaluate_point",
        [](double xi, double chi, double mass) {
            const relspin::SweepRow row = relspin::evaluate_point(xi, chi, mass);
            py::dict d;
            d["xi"] = row.xi;
            d["chi"] = row.chi;
            d["delta"] = row.delta;
            d["e_zz"] = row.e_zz;
            d["e_yy"] = row.e_yy;
            d["chsh_naive"] = row.chsh_naive;
            d["chsh_compensated"] = row.chsh_compensated;
            return d;
        },
        py::arg("xi"), py::arg("chi"), py::arg("mass") = 1.0,
        "Full single-point evaluation: Wigner angle, z-z and y-y "
        "correlations, naive and compensated CHSH values.");
}
