#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "rmscat/rosenmorse.hpp"

namespace rmscat::tables {

enum class Format { Csv, Json };

/// Numeric table plus key/value metadata. The writers render metadata as
/// '#'-prefixed comment lines (CSV) or a metadata object (JSON), with doubles
/// at 17 significant digits so files round-trip exactly.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<std::pair<std::string, std::string>> metadata;
};

/// k, R, T, Re/Im B/A, Re/Im C/A, unitarity residual over a k range.
Table coefficients_table(const rosenmorse::RMParams& p, double k_min, double k_max,
                         int n);

/// x, Re psi, Im psi, |psi| for the scattering state at wavenumber k.
Table state_table(const rosenmorse::RMParams& p, double k, double x_min, double x_max,
                  int n);

/// n, E_n, mu_n, eta_n of the bound spectrum.
Table spectrum_table(const rosenmorse::RMParams& p);

/// k, w(k) over a k range.
Table measure_table(const rosenmorse::RMParams& p, double k_min, double k_max, int n);

/// Synthesize f from a Gaussian F0(k), transform back, and tabulate
/// k, F0, Re F, Im F; metadata records the round-trip relative L2 error.
Table transform_table(const rosenmorse::RMParams& p, double k_center, double k_sigma,
                      double k_min, double k_max, int nk, double x_min, double x_max,
                      int nx);

void write(const Table& t, std::ostream& os, Format format);
void write_file(const Table& t, const std::string& path, Format format);

/// 17-significant-digit rendering used by both writers.
std::string format_double(double v);

}  // namespace rmscat::tables
