#pragma once

#include <functional>

#include "rmscat/types.hpp"

namespace rmscat::quadrature {

struct QuadratureControl {
    double abs_tol = 1e-10;
    double rel_tol = 1e-9;
    int max_depth = 32;
    // initial uniform subdivision; callers raise it to resolve oscillations
    int initial_intervals = 1;
};

/// Adaptive Gauss-Kronrod (G7,K15) integration of a complex-valued function
/// over [a, b]. Throws QuadratureError when the tolerance cannot be met.
Complex integrate(const std::function<Complex(double)>& f, double a, double b,
                  QuadratureControl ctl = {});

/// Composite Simpson rule over tabulated samples on a uniform grid
/// (trapezoid fallback on the last panel when the count is even).
Complex integrate_samples(const std::vector<double>& nodes,
                          const std::vector<Complex>& values);

}  // namespace rmscat::quadrature
