#include "rmscat/oracle.hpp"

#include <cmath>
#include <string>

#include "rmscat/errors.hpp"

namespace rmscat::oracle {

namespace {

constexpr double kPi = 3.14159265358979323846;

double sch_f(const rosenmorse::RMParams& p, double E, double x) {
    const double s = 1.0 / std::cosh(x);
    return p.alpha * (p.alpha + 1.0) * s * s - 2.0 * p.beta * std::tanh(x) + E;
}

void check_spec(const rosenmorse::RMParams& p, double E, const IntegratorSpec& spec) {
    if (!(spec.step > 0.0) || !(spec.x_min < spec.x_max)) {
        throw DomainError("IntegratorSpec: need step > 0 and x_min < x_max");
    }
    const double f_max =
        E + 2.0 * p.beta + std::max(0.0, p.alpha * (p.alpha + 1.0));
    if (f_max > 0.0) {
        const double lambda_min = 2.0 * kPi / std::sqrt(f_max);
        if (spec.step > lambda_min / 40.0) {
            throw StepSizeError("IntegratorSpec: step does not resolve the shortest "
                                "local wavelength by 40 points");
        }
    }
}

struct Grid {
    double h;
    std::size_t n;  // node count
    double x(std::size_t i) const { return x0 + h * static_cast<double>(i); }
    double x0;
};

Grid make_grid(const IntegratorSpec& spec) {
    const double len = spec.x_max - spec.x_min;
    const std::size_t steps =
        static_cast<std::size_t>(std::llround(len / spec.step));
    return Grid{len / static_cast<double>(steps), steps + 1, spec.x_min};
}

// Numerov recursion for psi'' = -f psi, filling psi between the two seeded
// nodes at one end and the far end. dir = +1 integrates rightward from
// indices 0,1; dir = -1 leftward from n-1, n-2.
void numerov(const rosenmorse::RMParams& p, double E, const Grid& g, int dir,
             std::vector<Complex>& psi) {
    const double h2 = g.h * g.h;
    std::vector<double> w(g.n);
    for (std::size_t i = 0; i < g.n; ++i) {
        w[i] = 1.0 + h2 / 12.0 * sch_f(p, E, g.x(i));
    }
    if (dir > 0) {
        for (std::size_t i = 1; i + 1 < g.n; ++i) {
            psi[i + 1] = ((12.0 - 10.0 * w[i]) * psi[i] - w[i - 1] * psi[i - 1]) / w[i + 1];
        }
    } else {
        for (std::size_t i = g.n - 2; i > 0; --i) {
            psi[i - 1] = ((12.0 - 10.0 * w[i]) * psi[i] - w[i + 1] * psi[i + 1]) / w[i - 1];
        }
    }
}

// Classic RK4 on the first-order system (psi, psi').
void rk4(const rosenmorse::RMParams& p, double E, const Grid& g, int dir,
         Complex psi0, Complex dpsi0, std::vector<Complex>& psi) {
    const double h = dir > 0 ? g.h : -g.h;
    auto acc = [&](double x, Complex y) { return -sch_f(p, E, x) * y; };
    Complex y = psi0, v = dpsi0;
    std::size_t i = dir > 0 ? 0 : g.n - 1;
    psi[i] = y;
    for (std::size_t s = 0; s + 1 < g.n; ++s) {
        const double x = g.x(i);
        const Complex k1y = v, k1v = acc(x, y);
        const Complex k2y = v + 0.5 * h * k1v, k2v = acc(x + 0.5 * h, y + 0.5 * h * k1y);
        const Complex k3y = v + 0.5 * h * k2v, k3v = acc(x + 0.5 * h, y + 0.5 * h * k2y);
        const Complex k4y = v + h * k3v, k4v = acc(x + h, y + h * k3y);
        y += h / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
        v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
        i = dir > 0 ? i + 1 : i - 1;
        psi[i] = y;
    }
}

}  // namespace

GridFunction integrate_state(const rosenmorse::RMParams& p, double E,
                             const IntegratorSpec& spec, Seed seed) {
    if (std::abs(E + 2.0 * p.beta) <= 1e-6 || std::abs(E - 2.0 * p.beta) <= 1e-6) {
        throw ThresholdError("integrate_state: E too close to an asymptotic threshold");
    }
    check_spec(p, E, spec);
    const Grid g = make_grid(spec);
    std::vector<Complex> psi(g.n);

    Complex psi0, psi1, dpsi0;  // seeded values; psi1 is the neighbor node
    int dir;
    if (seed == Seed::Right) {
        dir = -1;
        const double e = E - 2.0 * p.beta;
        if (e > 0.0) {
            const double q = std::sqrt(e);
            psi0 = std::exp(Complex{0.0, q * g.x(g.n - 1)});
            psi1 = std::exp(Complex{0.0, q * g.x(g.n - 2)});
            dpsi0 = Complex{0.0, q} * psi0;
        } else {
            const double kap = std::sqrt(-e);
            psi0 = std::exp(Complex{-kap * g.x(g.n - 1), 0.0});
            psi1 = std::exp(Complex{-kap * g.x(g.n - 2), 0.0});
            dpsi0 = -kap * psi0;
        }
        psi[g.n - 1] = psi0;
        psi[g.n - 2] = psi1;
    } else {
        dir = +1;
        const double e = E + 2.0 * p.beta;
        if (!(e < 0.0)) {
            throw DomainError("integrate_state: left seeding needs E < -2 beta");
        }
        const double kap = std::sqrt(-e);
        psi0 = std::exp(Complex{kap * g.x(0), 0.0});
        psi1 = std::exp(Complex{kap * g.x(1), 0.0});
        dpsi0 = kap * psi0;
        psi[0] = psi0;
        psi[1] = psi1;
    }

    if (spec.method == Method::Numerov) {
        numerov(p, E, g, dir, psi);
    } else {
        rk4(p, E, g, dir, psi0, dpsi0, psi);
    }

    GridFunction out;
    out.nodes.resize(g.n);
    for (std::size_t i = 0; i < g.n; ++i) out.nodes[i] = g.x(i);
    out.values = std::move(psi);
    out.provenance = "oracle::integrate_state(alpha=" + std::to_string(p.alpha) +
                     ", beta=" + std::to_string(p.beta) + ", E=" + std::to_string(E) + ")";
    return out;
}

RTResult extract_RT(const rosenmorse::RMParams& p, double k,
                    const IntegratorSpec& spec) {
    const double ak = std::abs(k);
    const double e = ak * ak - 4.0 * p.beta;
    if (!(e > 0.0)) {
        throw DomainError("extract_RT: k must be above the barrier threshold");
    }
    const double E = rosenmorse::energy_of_k(p.beta, ak);
    const GridFunction sol = integrate_state(p, E, spec, Seed::Right);

    // least-squares fit psi = A e^{ikx} + B e^{-ikx} over a window near x_min
    const double window = std::min(12.0, 4.0 * 2.0 * kPi / ak);
    const double x_hi = spec.x_min + window;
    Complex m12{0.0, 0.0}, r1{0.0, 0.0}, r2{0.0, 0.0};
    double m11 = 0.0;
    for (std::size_t i = 0; i < sol.size() && sol.nodes[i] <= x_hi; ++i) {
        const Complex e1 = std::exp(Complex{0.0, ak * sol.nodes[i]});
        m11 += 1.0;
        m12 += std::conj(e1) * std::conj(e1);  // conj(e1)*e2 = e^{-2ikx}
        r1 += std::conj(e1) * sol.values[i];
        r2 += e1 * sol.values[i];
    }
    const Complex det = m11 * m11 - m12 * std::conj(m12);
    if (std::abs(det) < 1e-6 * m11 * m11) {
        throw FitConditioningError("extract_RT: amplitude fit is ill-conditioned");
    }
    RTResult out;
    out.A = (m11 * r1 - m12 * r2) / det;
    out.B = (m11 * r2 - std::conj(m12) * r1) / det;
    const double q = std::sqrt(e);
    out.R = std::norm(out.B / out.A);
    out.T = (q / ak) / std::norm(out.A);
    if (std::abs(out.R + out.T - 1.0) > 1e-7) {
        throw FitConditioningError("extract_RT: internal unitarity gate failed, "
                                   "R+T deviates by more than 1e-7");
    }
    return out;
}

std::vector<double> shoot_bound_states(const rosenmorse::RMParams& p,
                                       std::pair<double, double> E_range,
                                       const IntegratorSpec& spec) {
    const double E_lo = E_range.first;
    const double E_hi = std::min(E_range.second, -2.0 * p.beta - 1e-5);
    if (!(E_lo < E_hi)) return {};

    // matching Wronskian at x = 0 of the left- and right-decaying solutions
    auto mismatch = [&](double E) {
        const GridFunction l = integrate_state(p, E, spec, Seed::Left);
        const GridFunction r = integrate_state(p, E, spec, Seed::Right);
        // 5-point derivative at the node closest to 0
        const double h = l.nodes[1] - l.nodes[0];
        std::size_t j = static_cast<std::size_t>(
            std::llround((0.0 - l.nodes[0]) / h));
        j = std::min(std::max<std::size_t>(j, 2), l.size() - 3);
        auto d5 = [&](const GridFunction& g) {
            return (-g.values[j + 2] + 8.0 * g.values[j + 1] - 8.0 * g.values[j - 1] +
                    g.values[j - 2]) /
                   (12.0 * h);
        };
        const double yl = l.values[j].real(), yr = r.values[j].real();
        const double dl = d5(l).real(), dr = d5(r).real();
        // normalize so the scan is overflow-free and zeros are preserved
        const double scale = std::sqrt((yl * yl + dl * dl) * (yr * yr + dr * dr));
        return (yl * dr - yr * dl) / scale;
    };

    constexpr int kScan = 400;
    std::vector<double> roots;
    double prev_E = E_lo;
    double prev_w = mismatch(E_lo);
    for (int i = 1; i <= kScan; ++i) {
        const double E = E_lo + (E_hi - E_lo) * static_cast<double>(i) / kScan;
        const double w = mismatch(E);
        if (prev_w == 0.0) {
            roots.push_back(prev_E);
        } else if (w * prev_w < 0.0) {
            double a = prev_E, b = E, wa = prev_w;
            while (b - a > 1e-10) {
                const double m = 0.5 * (a + b);
                const double wm = mismatch(m);
                if (wm == 0.0) {
                    a = b = m;
                } else if (wm * wa < 0.0) {
                    b = m;
                } else {
                    a = m;
                    wa = wm;
                }
            }
            roots.push_back(0.5 * (a + b));
        }
        prev_E = E;
        prev_w = w;
    }
    return roots;
}

}  // namespace rmscat::oracle
