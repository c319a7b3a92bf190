#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "relspin/correlation.hpp"

namespace relspin {

/// Thrown by write_sweep when the output file cannot be produced.
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class SweepFormat { csv, tsv };

/// A rectangular (xi, chi) grid evaluation: endpoints inclusive, a single
/// point when steps == 1.
struct SweepConfig {
    double xi_min = 0.0;
    double xi_max = 3.0;
    int xi_steps = 13;
    double chi_min = 0.0;
    double chi_max = 3.0;
    int chi_steps = 13;
    double mass = 1.0;
    std::string output_path;
    SweepFormat format = SweepFormat::csv;
    bool emit_gnuplot = false;
};

/// One evaluated grid point.
struct SweepRow {
    double xi;
    double chi;
    double delta;
    double e_zz;
    double e_yy;
    double chsh_naive;
    double chsh_compensated;
};

/// Full evaluation of one (xi, chi) point through the state pipeline.
SweepRow evaluate_point(double xi, double chi, double mass);

/// All grid rows, xi outer, chi inner. Throws std::invalid_argument on a
/// malformed config (min > max, steps < 1, mass <= 0).
std::vector<SweepRow> sweep_rows(const SweepConfig& config);

/// Header plus one line per row, 15 significant digits, '\n' endings.
std::string format_sweep(const std::vector<SweepRow>& rows, SweepFormat format);

/// Evaluates the grid and writes it to config.output_path; with
/// emit_gnuplot also writes a companion plot script next to it.
void write_sweep(const SweepConfig& config);

/// Human-readable single-point report: both Wigner-angle routes, the
/// singlet/triplet split, key correlations and both CHSH values. With
/// samples > 0 a Monte Carlo tally of z-z outcomes is appended.
std::string point_report(double xi, double chi, double mass,
                         std::int64_t samples = 0, std::uint64_t seed = 1);

}  // namespace relspin
