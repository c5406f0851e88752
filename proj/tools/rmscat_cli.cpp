// Command-line front end: tabulates scattering coefficients, wavefunction
// samples, bound spectra, the spectral measure, transform round trips, and
// runs the validation suite. Outputs CSV or JSON.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "rmscat/errors.hpp"
#include "rmscat/tables.hpp"
#include "rmscat/validation.hpp"
#include "rmscat/version.hpp"

namespace {

using rmscat::tables::Format;
using rmscat::tables::Table;

struct CommonOpts {
    double alpha = 1.0;
    double beta = 0.0;
    std::string out;
    std::string format = "csv";
};

Format parse_format(const std::string& f) {
    if (f == "csv") return Format::Csv;
    if (f == "json") return Format::Json;
    throw rmscat::DomainError("unknown format: " + f);
}

void emit(const Table& t, const CommonOpts& c) {
    if (c.out.empty()) {
        rmscat::tables::write(t, std::cout, parse_format(c.format));
    } else {
        rmscat::tables::write_file(t, c.out, parse_format(c.format));
    }
}

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("--alpha", c.alpha, "well-depth parameter alpha")
        ->capture_default_str();
    cmd->add_option("--beta", c.beta, "asymmetry parameter beta (>= 0)")
        ->capture_default_str();
    cmd->add_option("--out", c.out, "output file (stdout when omitted)");
    cmd->add_option("--format", c.format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rosen-Morse scattering toolkit"};
    app.set_version_flag("--version", std::string("rmscat ") + rmscat::kVersion);
    app.set_config("--config", "", "read defaults from a config file");
    app.require_subcommand(0, 1);

    bool show_config = false;
    app.add_flag("--show-config", show_config,
                 "print the effective configuration and exit");

    CommonOpts c_coef, c_state, c_spec, c_meas, c_tran;
    double k_min = 2.5, k_max = 8.0, k = 3.0;
    int n = 101;
    double x_min = -20.0, x_max = 20.0;
    int nx = 801;
    double tk_min = 1.5, tk_max = 4.5;
    int tn = 301;
    double tx_min = -30.0, tx_max = 30.0;
    int tnx = 1201;
    double k_center = 3.0, k_sigma = 0.25;
    std::string preset = "fast";
    std::string report;

    CLI::App* coef = app.add_subcommand("coefficients",
                                        "reflection/transmission table over k");
    add_common(coef, c_coef);
    coef->add_option("--k-min", k_min, "lower end of the k range")->capture_default_str();
    coef->add_option("--k-max", k_max, "upper end of the k range")->capture_default_str();
    coef->add_option("--n", n, "number of samples")->capture_default_str();

    CLI::App* state = app.add_subcommand("state", "scattering wavefunction samples");
    add_common(state, c_state);
    state->add_option("--k", k, "wavenumber")->capture_default_str();
    state->add_option("--x-min", x_min, "left end of the x range")->capture_default_str();
    state->add_option("--x-max", x_max, "right end of the x range")->capture_default_str();
    state->add_option("--n", nx, "number of samples")->capture_default_str();

    CLI::App* spectrum = app.add_subcommand("spectrum", "bound-state table");
    add_common(spectrum, c_spec);

    CLI::App* meas = app.add_subcommand("measure", "spectral measure w(k) over k");
    add_common(meas, c_meas);
    meas->add_option("--k-min", k_min, "lower end of the k range")->capture_default_str();
    meas->add_option("--k-max", k_max, "upper end of the k range")->capture_default_str();
    meas->add_option("--n", n, "number of samples")->capture_default_str();

    CLI::App* tran = app.add_subcommand(
        "transform", "synthesize a Gaussian momentum profile and round-trip it");
    add_common(tran, c_tran);
    tran->add_option("--k-center", k_center, "profile center")->capture_default_str();
    tran->add_option("--k-sigma", k_sigma, "profile width")->capture_default_str();
    tran->add_option("--k-min", tk_min, "lower end of the k grid")->capture_default_str();
    tran->add_option("--k-max", tk_max, "upper end of the k grid")->capture_default_str();
    tran->add_option("--n", tn, "k-grid samples")->capture_default_str();
    tran->add_option("--x-min", tx_min, "left end of the x grid")->capture_default_str();
    tran->add_option("--x-max", tx_max, "right end of the x grid")->capture_default_str();
    tran->add_option("--nx", tnx, "x-grid samples")->capture_default_str();

    CLI::App* validate = app.add_subcommand("validate", "run the validation suite");
    validate->add_option("--preset", preset, "fast or full")
        ->check(CLI::IsMember({"fast", "full"}))
        ->capture_default_str();
    validate->add_option("--out", report, "report file (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (show_config) {
        std::cout << app.config_to_str(true, true);
        return 0;
    }

    try {
        if (coef->parsed()) {
            emit(rmscat::tables::coefficients_table(
                     {c_coef.alpha, c_coef.beta}, k_min, k_max, n),
                 c_coef);
        } else if (state->parsed()) {
            emit(rmscat::tables::state_table({c_state.alpha, c_state.beta}, k, x_min,
                                             x_max, nx),
                 c_state);
        } else if (spectrum->parsed()) {
            emit(rmscat::tables::spectrum_table({c_spec.alpha, c_spec.beta}), c_spec);
        } else if (meas->parsed()) {
            emit(rmscat::tables::measure_table({c_meas.alpha, c_meas.beta}, k_min,
                                               k_max, n),
                 c_meas);
        } else if (tran->parsed()) {
            emit(rmscat::tables::transform_table({c_tran.alpha, c_tran.beta}, k_center,
                                                 k_sigma, tk_min, tk_max, tn, tx_min,
                                                 tx_max, tnx),
                 c_tran);
        } else if (validate->parsed()) {
            const auto results = rmscat::validation::run(preset == "full");
            std::ostringstream os;
            os << "# rmscat " << rmscat::kVersion << " validation (" << preset
               << " preset)\n";
            for (const auto& r : results) {
                os << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail
                   << "\n";
            }
            if (report.empty()) {
                std::cout << os.str();
            } else {
                std::ofstream f(report);
                if (!f) throw rmscat::DomainError("cannot open report file: " + report);
                f << os.str();
            }
            return rmscat::validation::all_passed(results) ? 0 : 1;
        } else {
            std::cout << app.help();
        }
    } catch (const rmscat::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
