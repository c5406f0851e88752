#pragma once

#include <utility>
#include <vector>

#include "rmscat/rosenmorse.hpp"
#include "rmscat/types.hpp"

namespace rmscat::oracle {

/// Direct numerical integration of the Schroedinger equation. This backend
/// shares no code with the closed-form path and exists to verify it.

enum class Method { RK4, Numerov };

/// Which asymptotic end the integration is seeded from. Right seeds the
/// outgoing (above barrier) or decaying (below barrier) asymptote at x_max
/// and integrates leftward; Left seeds the decaying e^{+kappa x} asymptote at
/// x_min and integrates rightward (bound-state energies only).
enum class Seed { Right, Left };

struct IntegratorSpec {
    double x_min = -35.0;
    double x_max = 35.0;
    double step = 1e-3;
    Method method = Method::Numerov;
};

struct RTResult {
    double R = 0.0;
    double T = 0.0;
    Complex A;
    Complex B;
};

/// Numerical solution of psi'' = -[alpha(alpha+1)sech^2 x - 2 beta tanh x + E] psi,
/// seeded from the analytic asymptote at the chosen end.
GridFunction integrate_state(const rosenmorse::RMParams& p, double E,
                             const IntegratorSpec& spec, Seed seed = Seed::Right);

/// Reflection/transmission from an outgoing-wave integration: seed
/// e^{i sqrt(k^2-4beta) x} at x_max, integrate leftward, least-squares fit
/// A e^{ikx} + B e^{-ikx} near x_min.
RTResult extract_RT(const rosenmorse::RMParams& p, double k,
                    const IntegratorSpec& spec);

/// Bound-state energies in [E_range.first, E_range.second] located by sign
/// changes of the matching Wronskian at x = 0, bisected to 1e-10.
std::vector<double> shoot_bound_states(const rosenmorse::RMParams& p,
                                       std::pair<double, double> E_range,
                                       const IntegratorSpec& spec);

}  // namespace rmscat::oracle
