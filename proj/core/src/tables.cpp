#include "rmscat/tables.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include <nlohmann/json.hpp>

#include "rmscat/errors.hpp"
#include "rmscat/scatter.hpp"
#include "rmscat/spectral.hpp"
#include "rmscat/version.hpp"

namespace rmscat::tables {

namespace {

std::vector<double> linspace(double lo, double hi, int n) {
    if (n < 2) throw DomainError("table range: need at least 2 points");
    if (!(lo < hi)) throw DomainError("table range: need min < max");
    std::vector<double> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        v[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
    }
    return v;
}

void add_common_metadata(Table& t, const rosenmorse::RMParams& p) {
    t.metadata.emplace_back("artifact", std::string("rmscat ") + kVersion);
    t.metadata.emplace_back("alpha", format_double(p.alpha));
    t.metadata.emplace_back("beta", format_double(p.beta));
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

Table coefficients_table(const rosenmorse::RMParams& p, double k_min, double k_max,
                         int n) {
    Table t;
    t.columns = {"k", "R", "T", "re_B_over_A", "im_B_over_A",
                 "re_C_over_A", "im_C_over_A", "unitarity_residual"};
    add_common_metadata(t, p);
    t.metadata.emplace_back("k_min", format_double(k_min));
    t.metadata.emplace_back("k_max", format_double(k_max));
    for (double k : linspace(k_min, k_max, n)) {
        const scatter::ScatterResult r = scatter::solve(p, k);
        t.rows.push_back({k, r.R, r.T, r.B_over_A.real(), r.B_over_A.imag(),
                          r.C_over_A.real(), r.C_over_A.imag(), r.R + r.T - 1.0});
    }
    return t;
}

Table state_table(const rosenmorse::RMParams& p, double k, double x_min, double x_max,
                  int n) {
    Table t;
    t.columns = {"x", "re_psi", "im_psi", "abs_psi"};
    add_common_metadata(t, p);
    t.metadata.emplace_back("k", format_double(k));
    const genleg::GenLegendre D(rosenmorse::params_from_k(p, k));
    for (double x : linspace(x_min, x_max, n)) {
        const Complex psi = D.eval_tanh(x);
        t.rows.push_back({x, psi.real(), psi.imag(), std::abs(psi)});
    }
    return t;
}

Table spectrum_table(const rosenmorse::RMParams& p) {
    Table t;
    t.columns = {"n", "energy", "mu", "eta"};
    add_common_metadata(t, p);
    for (const rosenmorse::BoundState& s : rosenmorse::bound_spectrum(p)) {
        t.rows.push_back({static_cast<double>(s.n), s.energy, s.mu, s.eta});
    }
    return t;
}

Table measure_table(const rosenmorse::RMParams& p, double k_min, double k_max, int n) {
    Table t;
    t.columns = {"k", "w"};
    add_common_metadata(t, p);
    for (double k : linspace(k_min, k_max, n)) {
        t.rows.push_back({k, spectral::measure(p, k)});
    }
    return t;
}

Table transform_table(const rosenmorse::RMParams& p, double k_center, double k_sigma,
                      double k_min, double k_max, int nk, double x_min, double x_max,
                      int nx) {
    if (!(k_sigma > 0.0)) throw DomainError("transform: k_sigma must be positive");
    const std::vector<double> k_grid = linspace(k_min, k_max, nk);
    const std::vector<double> x_grid = linspace(x_min, x_max, nx);

    GridFunction F0;
    F0.nodes = k_grid;
    F0.provenance = "gaussian momentum profile";
    F0.values.reserve(k_grid.size());
    for (double k : k_grid) {
        const double u = (k - k_center) / k_sigma;
        F0.values.emplace_back(std::exp(-0.5 * u * u), 0.0);
    }

    const GridFunction f = spectral::inverse_transform(p, F0, x_grid);
    const GridFunction F = spectral::forward_transform(p, f, k_grid);

    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < k_grid.size(); ++i) {
        num += std::norm(F.values[i] - F0.values[i]);
        den += std::norm(F0.values[i]);
    }
    const double l2 = den > 0.0 ? std::sqrt(num / den) : 0.0;

    Table t;
    t.columns = {"k", "F0", "re_F", "im_F"};
    add_common_metadata(t, p);
    t.metadata.emplace_back("k_center", format_double(k_center));
    t.metadata.emplace_back("k_sigma", format_double(k_sigma));
    t.metadata.emplace_back("roundtrip_rel_l2_error", format_double(l2));
    for (std::size_t i = 0; i < k_grid.size(); ++i) {
        t.rows.push_back({k_grid[i], F0.values[i].real(), F.values[i].real(),
                          F.values[i].imag()});
    }
    return t;
}

void write(const Table& t, std::ostream& os, Format format) {
    if (format == Format::Csv) {
        for (const auto& [key, value] : t.metadata) {
            os << "# " << key << " = " << value << "\n";
        }
        for (std::size_t c = 0; c < t.columns.size(); ++c) {
            os << (c ? "," : "") << t.columns[c];
        }
        os << "\n";
        for (const auto& row : t.rows) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                os << (c ? "," : "") << format_double(row[c]);
            }
            os << "\n";
        }
        return;
    }
    nlohmann::ordered_json j;
    nlohmann::ordered_json meta;
    for (const auto& [key, value] : t.metadata) meta[key] = value;
    j["metadata"] = meta;
    j["columns"] = t.columns;
    j["data"] = t.rows;
    os << j.dump(2) << "\n";
}

void write_file(const Table& t, const std::string& path, Format format) {
    std::ofstream os(path);
    if (!os) throw DomainError("cannot open output file: " + path);
    write(t, os, format);
}

}  // namespace rmscat::tables
