#include "cesarolab/quadrature.hpp"

#include "cesarolab/series.hpp"

#include <cmath>
#include <queue>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace cesarolab {

namespace {

// QUADPACK dqk15 abscissae/weights. xk[7] = 0 is the centre; the embedded
// 7-point Gauss rule uses the odd-index abscissae.
constexpr double xk[8] = {
    0.991455371120812639206854697526, 0.949107912342758524526189684048,
    0.864864423359769072789712788641, 0.741531185599394439863864773281,
    0.586087235467691130294144838259, 0.405845151377397166906606412077,
    0.207784955007898467600689403773, 0.0,
};
constexpr double wk[8] = {
    0.022935322010529224963732008059, 0.063092092629978553290700663189,
    0.104790010322250183839876322542, 0.140653259715525918745189590510,
    0.169004726639267902826583426599, 0.190350578064785409913256402421,
    0.204432940075298892414161999235, 0.209482141084727828012999174892,
};
constexpr double wg[4] = {
    0.129484966168869693270611432679, 0.279705391489276667901467771424,
    0.381830050505118944950369775489, 0.417959183673469387755102040816,
};

struct Panel {
    double a, b;
    cx value;
    double error;
};

Panel kronrod_panel(const std::function<cx(double)>& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const cx f_mid = f(mid);
    cx k15 = wk[7] * f_mid;
    cx g7 = wg[3] * f_mid;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * xk[i];
        const cx s = f(mid + dx) + f(mid - dx);
        k15 += wk[i] * s;
        if (i % 2 == 1) g7 += wg[i / 2] * s;
    }
    k15 *= half;
    g7 *= half;
    return {a, b, k15, std::abs(k15 - g7)};
}

} // namespace

QuadResult integrate_adaptive(const std::function<cx(double)>& f, double a, double b,
                              double abs_tol, std::size_t max_panels) {
    if (!(b > a)) return {};
    auto worse = [](const Panel& x, const Panel& y) {
        return std::tie(x.error, y.a) < std::tie(y.error, x.a);
    };
    std::priority_queue<Panel, std::vector<Panel>, decltype(worse)> panels(worse);
    panels.push(kronrod_panel(f, a, b));
    std::size_t evals = 15;

    double total_err = panels.top().error;
    while (total_err > abs_tol) {
        if (panels.size() >= max_panels)
            throw std::runtime_error("integrate_adaptive: tolerance not met within panel budget");
        Panel worst = panels.top();
        panels.pop();
        total_err -= worst.error;
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // Interval at machine resolution; keep its estimate as-is.
            worst.error = 0;
            panels.push(worst);
            continue;
        }
        Panel left = kronrod_panel(f, worst.a, mid);
        Panel right = kronrod_panel(f, mid, worst.b);
        evals += 30;
        total_err += left.error + right.error;
        panels.push(left);
        panels.push(right);
    }

    QuadResult out;
    out.evaluations = evals;
    KahanC sum;
    Kahan err;
    while (!panels.empty()) {
        sum.add(panels.top().value);
        err.add(panels.top().error);
        panels.pop();
    }
    out.value = sum.value();
    out.error = err.value();
    return out;
}

} // namespace cesarolab
