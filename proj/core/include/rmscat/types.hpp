#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "rmscat/errors.hpp"

namespace rmscat {

using Complex = std::complex<double>;

/// Convergence control for power-series evaluations.
struct SeriesControl {
    double rel_tol = 1e-15;
    int max_terms = 20000;
};

/// Sampled complex-valued function on a real interval.
///
/// Nodes are stored explicitly; uniform() builds an equally spaced grid.
/// `provenance` is free-text metadata recording how the samples were made.
struct GridFunction {
    std::vector<double> nodes;
    std::vector<Complex> values;
    std::string provenance;

    static GridFunction uniform(double x0, double dx, std::size_t n,
                                std::string provenance = {}) {
        if (n < 2) throw DomainError("GridFunction: need at least 2 nodes");
        if (dx <= 0) throw DomainError("GridFunction: dx must be positive");
        GridFunction g;
        g.nodes.resize(n);
        g.values.assign(n, Complex{0.0, 0.0});
        for (std::size_t i = 0; i < n; ++i) g.nodes[i] = x0 + dx * static_cast<double>(i);
        g.provenance = std::move(provenance);
        return g;
    }

    std::size_t size() const noexcept { return nodes.size(); }
};

}  // namespace rmscat
