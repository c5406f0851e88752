#pragma once

#include <utility>

#include "rmscat/rosenmorse.hpp"
#include "rmscat/types.hpp"

namespace rmscat::scatter {

struct ScatterResult {
    double k = 0.0;
    double R = 0.0;
    double T = 0.0;
    Complex B_over_A;
    Complex C_over_A;
};

/// Gamma-ratio amplitude ratios of the e^{-ikx} (B) and transmitted (C)
/// components relative to the incident amplitude A, assembled in log space.
std::pair<Complex, Complex> amplitude_ratios(const rosenmorse::RMParams& p, double k);

/// Reflection coefficient. 1 below the barrier; even in k.
double reflection(const rosenmorse::RMParams& p, double k);

/// Transmission coefficient. 0 below the barrier; even in k.
double transmission(const rosenmorse::RMParams& p, double k);

/// Everything at once, sharing the parameter map.
ScatterResult solve(const rosenmorse::RMParams& p, double k);

}  // namespace rmscat::scatter
