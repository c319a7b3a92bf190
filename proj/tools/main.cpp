// Command line front end: single-point reports and (xi, chi) grid sweeps
// of the spin correlations an EPR pair shows to moving observers.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "relspin/cli.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;

// "a:b:n" -> (min, max, steps)
bool parse_range(const std::string& text, double& lo, double& hi, int& steps) {
    const auto c1 = text.find(':');
    const auto c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) return false;
    try {
        std::size_t used = 0;
        lo = std::stod(text.substr(0, c1), &used);
        if (used != c1) return false;
        const std::string mid = text.substr(c1 + 1, c2 - c1 - 1);
        hi = std::stod(mid, &used);
        if (used != mid.size()) return false;
        const std::string last = text.substr(c2 + 1);
        steps = std::stoi(last, &used);
        if (used != last.size()) return false;
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Relativistic EPR correlations: Wigner rotations, boosted "
                 "spin-singlet states, CHSH values and compensated directions"};
    app.require_subcommand(1);

    double xi = 0.0, chi = 0.0, mass = 1.0;
    std::int64_t samples = 0;
    std::uint64_t seed = 1;

    CLI::App* point = app.add_subcommand("point", "Report one (xi, chi) evaluation");
    point->add_option("--xi", xi, "Particle rapidity")->required();
    point->add_option("--chi", chi, "Observer rapidity")->required();
    point->add_option("--mass", mass, "Particle mass (c = 1)");
    point->add_option("--samples", samples, "Also draw this many z-z outcome samples");
    point->add_option("--seed", seed, "Sampler seed");

    std::string xi_range, chi_range, out_path, format_name = "csv";
    bool gnuplot = false;
    CLI::App* sweep = app.add_subcommand("sweep", "Write a (xi, chi) grid to a file");
    sweep->add_option("--xi-range", xi_range, "Particle rapidity grid a:b:n")->required();
    sweep->add_option("--chi-range", chi_range, "Observer rapidity grid a:b:n")->required();
    sweep->add_option("--mass", mass, "Particle mass (c = 1)");
    sweep->add_option("--out", out_path, "Output file path")->required();
    sweep->add_option("--format", format_name, "Output format: csv or tsv")
        ->check(CLI::IsMember({"csv", "tsv"}));
    sweep->add_flag("--gnuplot", gnuplot, "Also write a companion gnuplot script");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (point->parsed()) {
            std::cout << relspin::point_report(xi, chi, mass, samples, seed);
            return 0;
        }

        relspin::SweepConfig config;
        if (!parse_range(xi_range, config.xi_min, config.xi_max, config.xi_steps)) {
            std::cerr << "error: --xi-range must look like a:b:n\n";
            return kExitUsage;
        }
        if (!parse_range(chi_range, config.chi_min, config.chi_max, config.chi_steps)) {
            std::cerr << "error: --chi-range must look like a:b:n\n";
            return kExitUsage;
        }
        config.mass = mass;
        config.output_path = out_path;
        config.format =
            format_name == "tsv" ? relspin::SweepFormat::tsv : relspin::SweepFormat::csv;
        config.emit_gnuplot = gnuplot;
        relspin::write_sweep(config);
        return 0;
    } catch (const relspin::io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
}
