#include "rmscat/quadrature.hpp"

#include <cmath>
#include <queue>
#include <vector>

#include "rmscat/errors.hpp"

namespace rmscat::quadrature {

namespace {

// 15-point Kronrod abscissae/weights with the embedded 7-point Gauss rule.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct PanelResult {
    Complex value;
    double error;
};

PanelResult gk15(const std::function<Complex(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    Complex kron{0.0, 0.0}, gauss{0.0, 0.0};
    for (int j = 0; j < 8; ++j) {
        Complex fsum;
        if (j == 7) {
            fsum = f(c);
        } else {
            fsum = f(c - h * kXgk[j]) + f(c + h * kXgk[j]);
        }
        kron += kWgk[j] * fsum;
        if (j % 2 == 1) gauss += kWg[j / 2] * fsum;
    }
    kron *= h;
    gauss *= h;
    return {kron, std::abs(kron - gauss)};
}

struct Panel {
    double a, b;
    Complex value;
    double error;
    int depth;
    bool operator<(const Panel& o) const { return error < o.error; }
};

}  // namespace

Complex integrate(const std::function<Complex(double)>& f, double a, double b,
                  QuadratureControl ctl) {
    if (!(b > a)) throw DomainError("integrate: need a < b");
    const int n0 = std::max(1, ctl.initial_intervals);

    // Globally adaptive: keep splitting the panel with the largest error
    // estimate until the summed estimate meets the tolerance.
    std::priority_queue<Panel> panels;
    Complex total{0.0, 0.0};
    double err_total = 0.0;
    const double w = (b - a) / n0;
    for (int i = 0; i < n0; ++i) {
        const double pa = a + i * w, pb = (i + 1 == n0) ? b : a + (i + 1) * w;
        const PanelResult r = gk15(f, pa, pb);
        panels.push({pa, pb, r.value, r.error, 0});
        total += r.value;
        err_total += r.error;
    }

    constexpr int kMaxPanels = 20000;
    int n_panels = n0;
    while (err_total > ctl.abs_tol && err_total > ctl.rel_tol * std::abs(total)) {
        const Panel worst = panels.top();
        if (worst.depth >= ctl.max_depth) {
            throw QuadratureError("adaptive quadrature: max subdivision depth reached");
        }
        if (n_panels >= kMaxPanels) {
            throw QuadratureError("adaptive quadrature: panel budget exhausted");
        }
        panels.pop();
        const double c = 0.5 * (worst.a + worst.b);
        const PanelResult lo = gk15(f, worst.a, c);
        const PanelResult hi = gk15(f, c, worst.b);
        total += lo.value + hi.value - worst.value;
        err_total += lo.error + hi.error - worst.error;
        panels.push({worst.a, c, lo.value, lo.error, worst.depth + 1});
        panels.push({c, worst.b, hi.value, hi.error, worst.depth + 1});
        ++n_panels;
    }
    return total;
}

Complex integrate_samples(const std::vector<double>& nodes,
                          const std::vector<Complex>& values) {
    const std::size_t n = nodes.size();
    if (n < 2 || values.size() != n) {
        throw DomainError("integrate_samples: need >= 2 matching nodes/values");
    }
    const double h = nodes[1] - nodes[0];
    Complex acc{0.0, 0.0};
    std::size_t i = 0;
    for (; i + 2 < n; i += 2) {
        acc += h / 3.0 * (values[i] + 4.0 * values[i + 1] + values[i + 2]);
    }
    if (i + 1 < n) {
        acc += 0.5 * h * (values[i] + values[i + 1]);
    }
    return acc;
}

}  // namespace rmscat::quadrature
