#pragma once

#include <optional>
#include <string>

#include "rmscat/types.hpp"

namespace rmscat::genleg {

enum class Regime { Bound, BelowBarrier, AboveBarrier, Generic };

/// Order pair (mu, eta) and degree nu of a generalized Legendre function,
/// tagged with the physical regime the parameters came from.
struct ChannelParams {
    Complex mu;
    Complex eta;
    double nu = 0.0;
    Regime regime = Regime::Generic;
};

/// Checks the structural invariants of the tagged regime; throws DomainError.
void validate(const ChannelParams& p);

/// Coefficients of the exponential asymptotes of D(tanh x):
///   x -> -inf: A e^{(mu-eta)x} + B e^{-(mu-eta)x}
///   x -> +inf: C e^{(mu+eta)x},  C = 2^{-eta}
struct AsymptoticAmplitudes {
    Complex A;
    Complex B;
    Complex C;
};

/// Evaluator for one parameter set. Precomputes the hypergeometric parameters
/// and the z -> 1-z transformation coefficients, so repeated evaluations over
/// a grid share the gamma-function work. Immutable after construction.
class GenLegendre {
public:
    explicit GenLegendre(ChannelParams p, SeriesControl ctl = {});

    /// D(x) on the cut, -1 < x < 1.
    Complex eval(double x) const;

    /// dD/dx on the cut.
    Complex eval_dx(double x) const;

    /// D(tanh v) for any real v; exponential asymptotes past |v| = kSwitch.
    Complex eval_tanh(double v) const;

    /// d/dv of D(tanh v).
    Complex eval_tanh_dx(double v) const;

    AsymptoticAmplitudes amplitudes() const;

    const ChannelParams& params() const noexcept { return p_; }

    // tanh saturates to 1 in double precision near |v| = 19; past this point
    // the asymptotic forms are exact to round-off.
    static constexpr double kSwitch = 20.0;

private:
    Complex hyp_value(double z, double zc) const;
    Complex hyp_derivative(double z, double zc) const;
    Complex eval_parts(double z, double zc, double log_pref, Complex* hyp_out) const;

    ChannelParams p_;
    SeriesControl ctl_;
    Complex a_, b_, c_;    // F(a,b;c;(1-x)/2) parameters
    Complex cab_;          // c - a - b = eta - mu
    // transformation coefficients, absent when the transformation degenerates
    std::optional<Complex> coef1_, coef2_;
    std::string transform_error_;
};

// Free-function forms of the operations above.
Complex eval_D(const ChannelParams& p, double x);
Complex eval_D_dx(const ChannelParams& p, double x);
Complex eval_D_tanh(const ChannelParams& p, double x);
Complex eval_D_tanh_dx(const ChannelParams& p, double x);
AsymptoticAmplitudes asymptotic_amplitudes(const ChannelParams& p);

/// Associated Legendre function P^mu_nu(x) on the cut, -1 < x < 1.
Complex legendre_P(Complex mu, double nu, double x);

}  // namespace rmscat::genleg
