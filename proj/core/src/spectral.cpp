#include "rmscat/spectral.hpp"

#include <cmath>

#include "rmscat/errors.hpp"
#include "rmscat/specfun.hpp"

namespace rmscat::spectral {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLn2 = 0.69314718055994530942;
constexpr double kPrefactorTol = 1e-8;

double log_sinh(double u) {
    return u - kLn2 + std::log1p(-std::exp(-2.0 * u));
}

int oscillation_intervals(double L, double kmax) {
    return std::max(4, static_cast<int>(std::ceil(2.0 * L * std::abs(kmax) / kPi)));
}

// Simpson weights on a uniform grid; trapezoid closes the last panel when the
// node count is even.
std::vector<double> simpson_weights(const std::vector<double>& nodes) {
    const std::size_t n = nodes.size();
    if (n < 2) throw DomainError("simpson_weights: need >= 2 nodes");
    const double h = nodes[1] - nodes[0];
    std::vector<double> w(n, 0.0);
    std::size_t i = 0;
    for (; i + 2 < n; i += 2) {
        w[i] += h / 3.0;
        w[i + 1] += 4.0 * h / 3.0;
        w[i + 2] += h / 3.0;
    }
    if (i + 1 < n) {
        w[i] += 0.5 * h;
        w[i + 1] += 0.5 * h;
    }
    return w;
}

void require_separated(double pk, double k) {
    const double scale = 1.0 + std::abs(pk) + std::abs(k);
    if (std::abs(pk - k) <= kPrefactorTol * scale ||
        std::abs(pk + k) <= kPrefactorTol * scale) {
        throw PrefactorSingularError(
            "inner product: 1/(k^2-p^2) prefactor singular at p = +-k");
    }
}

}  // namespace

double integral_identity_residual(const genleg::ChannelParams& p1,
                                  const genleg::ChannelParams& p2, double a, double b,
                                  quadrature::QuadratureControl ctl) {
    if (!(a > -1.0 && a < b && b < 1.0)) {
        throw DomainError("integral_identity_residual: need -1 < a < b < 1");
    }
    const genleg::GenLegendre D1(p1), D2(p2);
    const Complex mu = p1.mu, eta = p1.eta;
    const Complex rho = p2.mu, gam = p2.eta;
    const double nu = p1.nu, sig = p2.nu;
    const Complex dsq = rho * rho + gam * gam - mu * mu - eta * eta;
    const Complex dxc = 2.0 * (rho * gam - mu * eta);
    const double dl = nu * (nu + 1.0) - sig * (sig + 1.0);

    auto integrand = [&](double x) {
        const Complex coef = (dsq + dxc * x) / (1.0 - x * x) + dl;
        return coef * D1.eval(x) * D2.eval(x);
    };
    const Complex lhs = quadrature::integrate(integrand, a, b, ctl);

    auto bracket = [&](double x) {
        return (1.0 - x * x) *
               (D1.eval(x) * D2.eval_dx(x) - D2.eval(x) * D1.eval_dx(x));
    };
    const Complex rhs = bracket(b) - bracket(a);
    return std::abs(lhs - rhs);
}

double measure(const rosenmorse::RMParams& p, double k) {
    // Evenness in k: only |k| enters.
    const genleg::ChannelParams cp = rosenmorse::params_from_k(p, k);
    const double ak = std::abs(k);
    const double alpha = p.alpha;
    if (cp.regime == genleg::Regime::AboveBarrier) {
        const double q = std::sqrt(k * k - 4.0 * p.beta);
        const double s2a = std::pow(std::sin(kPi * alpha), 2);
        const double sh = std::sinh(0.5 * kPi * (q + ak));
        double log_num = std::log(s2a + sh * sh);
        if (!std::isfinite(log_num)) {
            // fall back to log-space assembly for large arguments
            const double ls = 2.0 * log_sinh(0.5 * kPi * (q + ak));
            log_num = ls + std::log1p(s2a * std::exp(-ls));
        }
        return 2.0 * kPi * (q / ak) *
               std::exp(log_num - log_sinh(kPi * ak) - log_sinh(kPi * q));
    }
    const double s = std::sqrt(4.0 * p.beta - k * k);
    const Complex g1{1.0 + alpha + 0.5 * s, 0.5 * ak};
    const Complex g2{-alpha + 0.5 * s, 0.5 * ak};
    const double log_w = std::log(2.0 * kPi * kPi) - s * kLn2 - std::log(ak) -
                         log_sinh(kPi * ak) +
                         2.0 * specfun::log_gamma(Complex{1.0 + s, 0.0}).real() -
                         2.0 * specfun::log_gamma(g1).real() -
                         2.0 * specfun::log_gamma(g2).real();
    return std::exp(log_w);
}

SpectralDensity sample_density(const rosenmorse::RMParams& p,
                               std::vector<double> k_grid) {
    SpectralDensity d{p, std::move(k_grid), {}};
    d.w_values.reserve(d.k_grid.size());
    for (double k : d.k_grid) {
        const double w = measure(p, k);
        if (!(w > 0.0)) throw DomainError("sample_density: nonpositive weight");
        d.w_values.push_back(w);
    }
    return d;
}

Complex windowed_inner_product(const rosenmorse::RMParams& p, double pk, double k,
                               double L, quadrature::QuadratureControl ctl) {
    if (!(L > 0.0)) throw DomainError("windowed_inner_product: L must be positive");
    require_separated(pk, k);
    const genleg::GenLegendre Dp(rosenmorse::params_from_k(p, pk));
    const genleg::GenLegendre Dk(rosenmorse::params_from_k(p, k));
    ctl.initial_intervals =
        std::max(ctl.initial_intervals,
                 oscillation_intervals(L, std::max(std::abs(pk), std::abs(k))));
    return quadrature::integrate(
        [&](double x) { return std::conj(Dp.eval_tanh(x)) * Dk.eval_tanh(x); }, -L, L,
        ctl);
}

Complex boundary_term(const rosenmorse::RMParams& p, double pk, double k, double L) {
    if (!(L > 0.0)) throw DomainError("boundary_term: L must be positive");
    require_separated(pk, k);
    const genleg::GenLegendre Dp(rosenmorse::params_from_k(p, pk));
    const genleg::GenLegendre Dk(rosenmorse::params_from_k(p, k));
    auto bracket = [&](double x) {
        return Dk.eval_tanh(x) * std::conj(Dp.eval_tanh_dx(x)) -
               std::conj(Dp.eval_tanh(x)) * Dk.eval_tanh_dx(x);
    };
    return (bracket(L) - bracket(-L)) / (k * k - pk * pk);
}

GridFunction forward_transform(const rosenmorse::RMParams& p, const GridFunction& f,
                               const std::vector<double>& k_grid) {
    if (f.size() < 2) throw DomainError("forward_transform: empty input grid");
    double fmax = 0.0;
    for (const Complex& v : f.values) fmax = std::max(fmax, std::abs(v));
    if (fmax > 0.0 && (std::abs(f.values.front()) > 1e-6 * fmax ||
                       std::abs(f.values.back()) > 1e-6 * fmax)) {
        throw DomainError("forward_transform: input does not decay at the grid edges");
    }
    const std::vector<double> w = simpson_weights(f.nodes);
    GridFunction F;
    F.nodes = k_grid;
    F.values.reserve(k_grid.size());
    F.provenance = "forward_transform(" + f.provenance + ")";
    for (double k : k_grid) {
        const genleg::GenLegendre Dk(rosenmorse::params_from_k(p, k));
        Complex acc{0.0, 0.0};
        for (std::size_t i = 0; i < f.size(); ++i) {
            acc += w[i] * f.values[i] * std::conj(Dk.eval_tanh(f.nodes[i]));
        }
        F.values.push_back(acc / measure(p, k));
    }
    return F;
}

GridFunction inverse_transform(const rosenmorse::RMParams& p, const GridFunction& F,
                               const std::vector<double>& x_grid) {
    if (F.size() < 2) throw DomainError("inverse_transform: empty input grid");
    double fmax = 0.0;
    for (const Complex& v : F.values) fmax = std::max(fmax, std::abs(v));
    if (fmax > 0.0 && (std::abs(F.values.front()) > 1e-6 * fmax ||
                       std::abs(F.values.back()) > 1e-6 * fmax)) {
        throw DomainError("inverse_transform: input does not decay at the grid edges");
    }
    const std::vector<double> w = simpson_weights(F.nodes);
    GridFunction f;
    f.nodes = x_grid;
    f.values.assign(x_grid.size(), Complex{0.0, 0.0});
    f.provenance = "inverse_transform(" + F.provenance + ")";
    for (std::size_t j = 0; j < F.size(); ++j) {
        if (F.values[j] == Complex{0.0, 0.0}) continue;
        const genleg::GenLegendre Dk(rosenmorse::params_from_k(p, F.nodes[j]));
        const Complex cj = w[j] * F.values[j];
        for (std::size_t i = 0; i < x_grid.size(); ++i) {
            f.values[i] += cj * Dk.eval_tanh(x_grid[i]);
        }
    }
    return f;
}

}  // namespace rmscat::spectral
