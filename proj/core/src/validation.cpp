#include "rmscat/validation.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "rmscat/genleg.hpp"
#include "rmscat/oracle.hpp"
#include "rmscat/rosenmorse.hpp"
#include "rmscat/scatter.hpp"
#include "rmscat/specfun.hpp"
#include "rmscat/spectral.hpp"
#include "rmscat/tables.hpp"

namespace rmscat::validation {

namespace {

constexpr double kPi = 3.14159265358979323846;

using rosenmorse::RMParams;

std::string bound_detail(const char* what, double worst, double limit) {
    std::ostringstream os;
    os << what << " = " << worst << " (limit " << limit << ")";
    return os.str();
}

CheckResult check_unitarity() {
    double worst = 0.0;
    for (double alpha : {0.3, 1.0, 2.5}) {
        for (double beta : {0.25, 1.0}) {
            const RMParams p(alpha, beta);
            const double k_lo = 2.0 * std::sqrt(beta) + 0.01;
            for (int i = 1; i <= 50; ++i) {
                const double k = k_lo + (8.0 - k_lo) * i / 50.0;
                worst = std::max(worst, std::abs(scatter::reflection(p, k) +
                                                 scatter::transmission(p, k) - 1.0));
            }
        }
    }
    return {"unitarity R+T=1 above barrier", worst <= 1e-10,
            bound_detail("max |R+T-1|", worst, 1e-10)};
}

CheckResult check_total_reflection() {
    std::mt19937 rng(41);
    std::uniform_real_distribution<double> ua(0.1, 3.0);
    double worst = 0.0;
    bool t_zero = true;
    for (int i = 0; i < 100; ++i) {
        const double alpha = ua(rng);
        const double beta = 0.2 + 1.3 * (i % 10) / 10.0;
        const double k_hi = 2.0 * std::sqrt(beta) - 0.01;
        const double k = 0.05 + (k_hi - 0.05) * ((i / 10) + 0.5) / 10.0;
        const RMParams p(alpha, beta);
        worst = std::max(worst, std::abs(scatter::reflection(p, k) - 1.0));
        if (scatter::transmission(p, k) != 0.0) t_zero = false;
    }
    return {"total reflection below barrier", worst <= 1e-10 && t_zero,
            bound_detail("max |R-1|", worst, 1e-10) +
                (t_zero ? ", T = 0 exactly" : ", T nonzero!")};
}

CheckResult check_oracle_rt() {
    oracle::IntegratorSpec spec;
    spec.step = 1e-3;
    double worst = 0.0;
    int count = 0;
    for (double alpha : {0.5, 1.3, 2.5, 3.2}) {
        for (double beta : {0.25, 1.0}) {
            const double th = 2.0 * std::sqrt(beta);
            for (double k : {th + 0.05, th + 0.5, 4.0}) {
                if (count >= 20) break;
                const RMParams p(alpha, beta);
                const oracle::RTResult rt = oracle::extract_RT(p, k, spec);
                worst = std::max(worst,
                                 std::abs(rt.R - scatter::reflection(p, k)));
                worst = std::max(worst,
                                 std::abs(rt.T - scatter::transmission(p, k)));
                ++count;
            }
        }
    }
    return {"oracle equivalence for R, T", worst <= 1e-6 && count == 20,
            bound_detail("max |closed-form - Numerov|", worst, 1e-6)};
}

CheckResult check_ode_residual() {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> ua(0.2, 3.0);
    std::uniform_real_distribution<double> ub(0.1, 1.5);
    std::uniform_real_distribution<double> uk(0.2, 5.0);
    double worst = 0.0;
    for (int trial = 0; trial < 12; ++trial) {
        const double alpha = ua(rng), beta = ub(rng);
        double k = uk(rng);
        const double th = 2.0 * std::sqrt(beta);
        if (std::abs(k - th) < 0.05) k += 0.1;
        const RMParams p(alpha, beta);
        const double E = rosenmorse::energy_of_k(beta, k);
        const genleg::GenLegendre D(rosenmorse::params_from_k(p, k));
        const double h = 1e-3;
        double res_max = 0.0, scale = 0.0;
        for (int i = 0; i <= 80; ++i) {
            const double x = -10.0 + 20.0 * i / 80.0;
            const Complex psi = D.eval_tanh(x);
            // Richardson second derivative from the analytic first derivative
            const Complex d_h =
                (D.eval_tanh_dx(x + h) - D.eval_tanh_dx(x - h)) / (2.0 * h);
            const Complex d_h2 =
                (D.eval_tanh_dx(x + 0.5 * h) - D.eval_tanh_dx(x - 0.5 * h)) / h;
            const Complex psi2 = (4.0 * d_h2 - d_h) / 3.0;
            const double f = alpha * (alpha + 1.0) / std::pow(std::cosh(x), 2) -
                             2.0 * beta * std::tanh(x) + E;
            res_max = std::max(res_max, std::abs(psi2 + f * psi));
            scale = std::max(scale, std::abs(f * psi));
        }
        worst = std::max(worst, res_max / scale);
    }
    return {"Schroedinger-form residual of eval_D_tanh", worst <= 1e-6,
            bound_detail("max scaled residual", worst, 1e-6)};
}

CheckResult check_legendre_reduction() {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> ure(-1.5, 0.45);
    std::uniform_real_distribution<double> uim(0.1, 2.0);
    std::uniform_real_distribution<double> unu(0.0, 3.0);
    std::uniform_real_distribution<double> ux(-0.95, 0.95);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const Complex mu{ure(rng), uim(rng) * (i % 2 ? 1.0 : -1.0)};
        const double nu = unu(rng), x = ux(rng);
        genleg::ChannelParams cp{mu, Complex{0.0, 0.0}, nu, genleg::Regime::Generic};
        const Complex lhs = genleg::eval_D(cp, x);
        const Complex rhs =
            specfun::gamma(1.0 - mu) * genleg::legendre_P(mu, nu, x);
        worst = std::max(worst, std::abs(lhs - rhs) / std::abs(lhs));
    }
    return {"reduction to associated Legendre at eta=0", worst <= 1e-12,
            bound_detail("max relative deviation", worst, 1e-12)};
}

CheckResult check_integral_identity() {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> ua(0.2, 2.8);
    std::uniform_real_distribution<double> ub(0.1, 1.2);
    std::uniform_real_distribution<double> uk(0.3, 3.5);
    quadrature::QuadratureControl ctl;
    ctl.initial_intervals = 16;
    double worst = 0.0;
    // Legendre specialization: eta = gamma = 0, imaginary orders
    {
        genleg::ChannelParams p1{Complex{0.0, 0.2}, Complex{0.0, 0.0}, 1.3,
                                 genleg::Regime::Generic};
        genleg::ChannelParams p2{Complex{0.0, 0.5}, Complex{0.0, 0.0}, 1.3,
                                 genleg::Regime::Generic};
        worst = std::max(worst,
                         spectral::integral_identity_residual(p1, p2, -0.9, 0.9, ctl));
        worst = std::max(worst,
                         spectral::integral_identity_residual(p1, p1, -0.9, 0.9, ctl));
    }
    for (int i = 0; i < 18; ++i) {
        const RMParams pa(ua(rng), ub(rng));
        const RMParams pb(ua(rng), ub(rng));
        double k1 = uk(rng), k2 = uk(rng);
        if (std::abs(k1 - 2.0 * std::sqrt(pa.beta)) < 0.05) k1 += 0.1;
        if (std::abs(k2 - 2.0 * std::sqrt(pb.beta)) < 0.05) k2 += 0.1;
        const auto p1 = rosenmorse::params_from_k(pa, k1);
        const auto p2 = rosenmorse::params_from_k(pb, k2);
        worst = std::max(worst,
                         spectral::integral_identity_residual(p1, p2, -0.95, 0.95, ctl));
    }
    return {"cross-product integral identity", worst <= 1e-8,
            bound_detail("max |LHS - RHS|", worst, 1e-8)};
}

CheckResult check_prelimit_orthogonality() {
    std::mt19937 rng(29);
    std::uniform_real_distribution<double> ua(0.3, 2.5);
    std::uniform_real_distribution<double> ub(0.2, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
        const RMParams p(ua(rng), ub(rng));
        const double th = 2.0 * std::sqrt(p.beta);
        double pk, k;
        if (i % 3 == 0) {  // below-barrier pair
            pk = 0.35 * th;
            k = 0.75 * th;
        } else if (i % 3 == 1) {  // above-barrier pair
            pk = th + 0.4;
            k = th + 1.3;
        } else {  // mixed
            pk = 0.6 * th;
            k = th + 0.9;
        }
        const Complex wip = spectral::windowed_inner_product(p, pk, k, 15.0);
        const Complex bt = spectral::boundary_term(p, pk, k, 15.0);
        worst = std::max(worst, std::abs(wip - bt));
    }
    return {"pre-limit orthogonality bracket", worst <= 1e-6,
            bound_detail("max |integral - bracket|", worst, 1e-6)};
}

CheckResult check_measure_limit() {
    double worst = 0.0;
    for (double alpha : {0.5, 1.0, 1.7}) {
        const RMParams p(alpha, 1e-10);
        for (double k : {0.5, 1.0, 2.0}) {
            const double w = spectral::measure(p, k);
            const double s = std::sin(kPi * alpha);
            const double ref =
                2.0 * kPi * (1.0 + s * s / std::pow(std::sinh(kPi * k), 2));
            worst = std::max(worst, std::abs(w - ref) / ref);
            if (alpha == 1.0) {
                worst = std::max(worst, std::abs(w - 2.0 * kPi) / (2.0 * kPi));
            }
        }
    }
    return {"measure reduces to the symmetric-well form at beta->0", worst <= 1e-6,
            bound_detail("max relative deviation", worst, 1e-6)};
}

CheckResult check_bound_spectrum() {
    oracle::IntegratorSpec spec;
    spec.step = 1e-3;
    double worst = 0.0;
    bool counts_ok = true;
    const std::vector<std::pair<double, double>> cases = {
        {1.0, 0.0}, {2.5, 1.0}, {3.2, 0.5}, {0.4, 1.0}};
    for (const auto& [alpha, beta] : cases) {
        const RMParams p(alpha, beta);
        const auto closed = rosenmorse::bound_spectrum(p);
        const double floor_E =
            -(alpha * alpha + (alpha > 0 ? beta * beta / (alpha * alpha) : 0.0)) - 1.0;
        const auto shot = oracle::shoot_bound_states(
            p, {floor_E, -2.0 * beta - 1e-4}, spec);
        if (shot.size() != closed.size()) {
            counts_ok = false;
            continue;
        }
        for (std::size_t i = 0; i < shot.size(); ++i) {
            worst = std::max(worst, std::abs(shot[i] - closed[i].energy));
        }
    }
    return {"bound spectrum matches shooting oracle", counts_ok && worst <= 1e-8,
            bound_detail("max |E_closed - E_shoot|", worst, 1e-8) +
                (counts_ok ? "" : ", state count mismatch!")};
}

CheckResult check_transform_roundtrip() {
    const RMParams p(1.3, 0.25);
    const int nk = 301, nx = 1201;
    std::vector<double> k_grid(nk), x_grid(nx);
    for (int i = 0; i < nk; ++i) k_grid[i] = 1.5 + 3.0 * i / (nk - 1);
    for (int i = 0; i < nx; ++i) x_grid[i] = -30.0 + 60.0 * i / (nx - 1);

    GridFunction F0;
    F0.nodes = k_grid;
    F0.provenance = "gaussian test profile";
    for (double k : k_grid) {
        const double u = (k - 3.0) / 0.25;
        F0.values.emplace_back(std::exp(-0.5 * u * u), 0.0);
    }
    const GridFunction f = spectral::inverse_transform(p, F0, x_grid);
    const GridFunction F = spectral::forward_transform(p, f, k_grid);
    double num = 0.0, den = 0.0;
    for (int i = 0; i < nk; ++i) {
        num += std::norm(F.values[i] - F0.values[i]);
        den += std::norm(F0.values[i]);
    }
    const double err = std::sqrt(num / den);
    return {"transform round trip on continuum data", err <= 1e-3,
            bound_detail("relative L2 error", err, 1e-3)};
}

CheckResult check_figures() {
    bool ok = true;
    std::ostringstream detail;
    {  // below barrier: decay into the forbidden region
        const auto t = tables::state_table(RMParams(2.5, 1.0), 1.2, -20.0, 25.0, 451);
        const double abs_end = t.rows.back()[3];
        ok = ok && abs_end < 1e-9;
        detail << "|psi(25)| = " << abs_end;
    }
    {  // above barrier with large T: amplitude grows on the transmitted side
        const auto t = tables::state_table(RMParams(2.5, 1.0), 3.0, -20.0, 20.0, 801);
        double left = 0.0, right = 0.0;
        int nl = 0, nr = 0;
        for (const auto& row : t.rows) {
            if (row[0] >= -20.0 && row[0] <= -10.0) { left += row[3]; ++nl; }
            if (row[0] >= 10.0 && row[0] <= 20.0) { right += row[3]; ++nr; }
        }
        ok = ok && (right / nr > left / nl);
        detail << "; transmitted/incident mean amplitude = " << (right / nr) / (left / nl);
    }
    {  // free particle: |psi| identically 1
        const auto t = tables::state_table(RMParams(0.0, 0.0), 2.0, -15.0, 15.0, 301);
        double worst = 0.0;
        for (const auto& row : t.rows) worst = std::max(worst, std::abs(row[3] - 1.0));
        ok = ok && worst < 1e-12;
        detail << "; free-particle max ||psi|-1| = " << worst;
    }
    return {"figure-level checks on state tables", ok, detail.str()};
}

}  // namespace

std::vector<CheckResult> run(bool full) {
    std::vector<CheckResult> results;
    results.push_back(check_unitarity());
    results.push_back(check_total_reflection());
    if (full) results.push_back(check_oracle_rt());
    results.push_back(check_ode_residual());
    results.push_back(check_legendre_reduction());
    if (full) results.push_back(check_integral_identity());
    if (full) results.push_back(check_prelimit_orthogonality());
    results.push_back(check_measure_limit());
    if (full) results.push_back(check_bound_spectrum());
    if (full) results.push_back(check_transform_roundtrip());
    results.push_back(check_figures());
    return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.passed; });
}

}  // namespace rmscat::validation
