#include "relspin/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

namespace relspin {

namespace {

std::string fmt(double v, int digits = 15) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
    return buf;
}

std::vector<double> linspace(double lo, double hi, int steps) {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(steps));
    if (steps == 1) {
        out.push_back(lo);
        return out;
    }
    for (int i = 0; i < steps; ++i) {
        out.push_back(lo + (hi - lo) * static_cast<double>(i) /
                               static_cast<double>(steps - 1));
    }
    return out;
}

void validate(const SweepConfig& c) {
    if (!(c.mass > 0.0) || !std::isfinite(c.mass)) {
        throw std::invalid_argument("sweep: mass must be positive");
    }
    if (c.xi_steps < 1 || c.chi_steps < 1) {
        throw std::invalid_argument("sweep: step counts must be >= 1");
    }
    if (!(c.xi_min <= c.xi_max) || !(c.chi_min <= c.chi_max)) {
        throw std::invalid_argument("sweep: range minimum exceeds maximum");
    }
}

}  // namespace

SweepRow evaluate_point(double xi, double chi, double mass) {
    const double delta = wigner_angle_closed_form(xi, chi).delta;
    const TwoParticleState boosted = boost_state(chi, epr_singlet(xi, mass));
    const Eigen::Vector3d ez = Eigen::Vector3d::UnitZ();
    const Eigen::Vector3d ey = Eigen::Vector3d::UnitY();
    const ChshSetting naive = ChshSetting::optimal_for_singlet();

    SweepRow row;
    row.xi = xi;
    row.chi = chi;
    row.delta = delta;
    row.e_zz = correlation(boosted, ez, ez);
    row.e_yy = correlation(boosted, ey, ey);
    row.chsh_naive = chsh(boosted, naive).chsh;
    row.chsh_compensated = chsh(boosted, compensated_chsh_setting(naive, delta)).chsh;
    return row;
}

std::vector<SweepRow> sweep_rows(const SweepConfig& config) {
    validate(config);
    std::vector<SweepRow> rows;
    rows.reserve(static_cast<std::size_t>(config.xi_steps) *
                 static_cast<std::size_t>(config.chi_steps));
    for (double xi : linspace(config.xi_min, config.xi_max, config.xi_steps)) {
        for (double chi : linspace(config.chi_min, config.chi_max, config.chi_steps)) {
            rows.push_back(evaluate_point(xi, chi, config.mass));
        }
    }
    return rows;
}

std::string format_sweep(const std::vector<SweepRow>& rows, SweepFormat format) {
    const char sep = format == SweepFormat::csv ? ',' : '\t';
    std::ostringstream out;
    const char* names[] = {"xi",   "chi",        "delta",           "e_zz",
                           "e_yy", "chsh_naive", "chsh_compensated"};
    for (std::size_t i = 0; i < 7; ++i) {
        if (i) out << sep;
        out << names[i];
    }
    out << '\n';
    for (const SweepRow& r : rows) {
        const double vals[] = {r.xi,  r.chi,        r.delta,          r.e_zz,
                               r.e_yy, r.chsh_naive, r.chsh_compensated};
        for (std::size_t i = 0; i < 7; ++i) {
            if (i) out << sep;
            out << fmt(vals[i]);
        }
        out << '\n';
    }
    return out.str();
}

void write_sweep(const SweepConfig& config) {
    const std::vector<SweepRow> rows = sweep_rows(config);
    if (config.output_path.empty()) {
        throw std::invalid_argument("sweep: output path is empty");
    }
    std::ofstream out(config.output_path, std::ios::binary);
    if (!out) {
        throw io_error("sweep: cannot open output file: " + config.output_path);
    }
    out << format_sweep(rows, config.format);
    out.flush();
    if (!out) {
        throw io_error("sweep: failed writing output file: " + config.output_path);
    }

    if (config.emit_gnuplot) {
        const std::string script_path = config.output_path + ".gp";
        std::ofstream gp(script_path, std::ios::binary);
        if (!gp) {
            throw io_error("sweep: cannot open plot script: " + script_path);
        }
        const char* sep = config.format == SweepFormat::csv ? "," : "\t";
        gp << "set datafile separator '" << sep << "'\n"
           << "set xlabel 'xi'\nset ylabel 'chi'\n"
           << "set title 'CHSH value seen by moving observers'\n"
           << "set dgrid3d " << config.xi_steps << "," << config.chi_steps << "\n"
           << "set hidden3d\n"
           << "splot '" << config.output_path
           << "' every ::1 using 1:2:6 with lines title 'naive', '"
           << config.output_path
           << "' every ::1 using 1:2:7 with lines title 'compensated'\n";
        gp.flush();
        if (!gp) {
            throw io_error("sweep: failed writing plot script: " + script_path);
        }
    }
}

std::string point_report(double xi, double chi, double mass, std::int64_t samples,
                         std::uint64_t seed) {
    const SweepRow row = evaluate_point(xi, chi, mass);
    const TwoParticleState boosted = boost_state(chi, epr_singlet(xi, mass));
    const SingletFraction frac = singlet_fraction(boosted);

    // The explicit 4x4 product is only representable in doubles up to
    // moderate rapidity; report it when it survives its own consistency gate.
    std::optional<double> delta_matrix;
    try {
        const Rotation3 w =
            wigner_rotation(boost_z(chi), epr_singlet(xi, mass).momentum_plus());
        delta_matrix = w.signed_angle_about(Eigen::Vector3d::UnitY());
    } catch (const internal_error&) {
    }

    std::ostringstream out;
    out << "xi                 = " << fmt(xi, 12) << "\n"
        << "chi                = " << fmt(chi, 12) << "\n"
        << "mass               = " << fmt(mass, 12) << "\n"
        << "delta (closed)     = " << fmt(row.delta, 12) << "\n"
        << "delta (matrix)     = "
        << (delta_matrix ? fmt(*delta_matrix, 12)
                         : std::string("not representable at this rapidity"))
        << "\n"
        << "singlet amplitude  = " << fmt(std::abs(frac.singlet), 12) << "\n"
        << "triplet amplitude  = "
        << fmt(std::sqrt(std::norm(frac.triplet[0]) + std::norm(frac.triplet[1]) +
                         std::norm(frac.triplet[2])),
               12)
        << "\n"
        << "E(z,z)             = " << fmt(row.e_zz, 12) << "\n"
        << "E(y,y)             = " << fmt(row.e_yy, 12) << "\n"
        << "CHSH naive         = " << fmt(row.chsh_naive, 12) << "\n"
        << "CHSH compensated   = " << fmt(row.chsh_compensated, 12) << "\n";

    if (samples > 0) {
        const Eigen::Vector3d ez = Eigen::Vector3d::UnitZ();
        const OutcomeCounts c = sample_outcomes(boosted, ez, ez, samples, seed);
        out << "sampled z-z run    = ++:" << c.pp << " +-:" << c.pm << " -+:" << c.mp
            << " --:" << c.mm << " (E ~ " << fmt(c.empirical_correlation(), 6)
            << ", n = " << c.total() << ", seed = " << seed << ")\n";
    }
    return out.str();
}

}  // namespace relspin
