#include "cesarolab/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "cesarolab/gamma.hpp"

namespace cesarolab {

double side_offset(Side side, double p) {
    if (side == Side::primal) {
        if (!(p > 1)) throw std::invalid_argument("side_offset: primal side needs p in (1,inf]");
        return 1.0 - (std::isinf(p) ? 0.0 : 1.0 / p);
    }
    if (!(p >= 1) || std::isinf(p))
        throw std::invalid_argument("side_offset: dual side needs p in [1,inf)");
    return 1.0 / p;
}

cx symbol(cx beta, double p, Side side, cx z) {
    if (!(beta.real() > 0)) throw std::invalid_argument("symbol: requires Re beta > 0");
    if (z.real() < 0) throw std::domain_error("symbol: z must lie in C_+ or on iR");
    const double a = side_offset(side, p);
    const cx za = z + a;
    const cx bza = beta + z + a;
    if (is_nonpositive_integer(za) || is_nonpositive_integer(bza))
        throw std::domain_error("symbol: Gamma pole hit");
    return std::exp(log_gamma(beta + 1.0) + log_gamma(za) - log_gamma(bza));
}

namespace {

double turn_angle(cx u, cx v) {
    if (u == cx{} || v == cx{}) return 0.0;
    return std::abs(std::arg(v * std::conj(u)));
}

} // namespace

SpectralCurve trace_border(cx beta, double p, Side side, const TraceOptions& opts) {
    SpectralCurve curve;
    curve.side = side;
    curve.p = p;
    curve.beta = beta;
    curve.angle_tol = opts.angle_tol;

    auto w_at = [&](double t) { return symbol(beta, p, side, cx(0.0, t)); };

    // Find where the curve has decayed below the cutoff, independently per
    // direction (complex beta makes the two tails asymmetric).
    auto find_reach = [&](double sign) -> double {
        if (opts.t_max > 0) return sign * opts.t_max;
        double t = 1.0;
        for (int i = 0; i < 80; ++i) {
            if (std::abs(w_at(sign * t)) < opts.cutoff) return sign * t;
            t *= 2.0;
        }
        throw std::runtime_error("trace_border: curve did not decay below cutoff");
    };
    const double t_hi = find_reach(+1.0);
    const double t_lo = find_reach(-1.0);

    // Seed: 0 plus geometric ladders toward both reaches.
    std::vector<double> ts{0.0};
    for (double t = std::abs(t_hi); t > 1e-9 * std::abs(t_hi); t *= 0.5) ts.push_back(t);
    for (double t = std::abs(t_lo); t > 1e-9 * std::abs(t_lo); t *= 0.5) ts.push_back(-t);
    std::sort(ts.begin(), ts.end());

    std::vector<cx> ws(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) ws[i] = w_at(ts[i]);

    // Bisect every segment that participates in too sharp a turn.
    for (int pass = 0; pass < 64; ++pass) {
        std::vector<double> inserts;
        for (std::size_t i = 0; i + 2 < ts.size(); ++i) {
            const cx c0 = ws[i + 1] - ws[i];
            const cx c1 = ws[i + 2] - ws[i + 1];
            if (turn_angle(c0, c1) > opts.angle_tol) {
                inserts.push_back(0.5 * (ts[i] + ts[i + 1]));
                inserts.push_back(0.5 * (ts[i + 1] + ts[i + 2]));
            }
        }
        if (inserts.empty()) break;
        if (ts.size() + inserts.size() > opts.max_samples)
            throw std::runtime_error("trace_border: sample budget exceeded");
        std::vector<double> merged;
        merged.reserve(ts.size() + inserts.size());
        std::sort(inserts.begin(), inserts.end());
        inserts.erase(std::unique(inserts.begin(), inserts.end()), inserts.end());
        std::merge(ts.begin(), ts.end(), inserts.begin(), inserts.end(),
                   std::back_inserter(merged));
        merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
        ts.swap(merged);
        ws.resize(ts.size());
        for (std::size_t i = 0; i < ts.size(); ++i) ws[i] = w_at(ts[i]);
    }

    // Trim below-cutoff runs at the ends down to a single endpoint each.
    std::size_t lo = 0, hi = ts.size() - 1;
    while (lo + 1 < hi && std::abs(ws[lo + 1]) < opts.cutoff) ++lo;
    while (hi > lo + 1 && std::abs(ws[hi - 1]) < opts.cutoff) --hi;
    curve.t.assign(ts.begin() + lo, ts.begin() + hi + 1);
    curve.w.assign(ws.begin() + lo, ws.begin() + hi + 1);
    return curve;
}

std::vector<cx> sample_region(cx beta, double p, Side side, std::span<const cx> grid) {
    std::vector<cx> out;
    out.reserve(grid.size());
    for (const cx& z : grid) out.push_back(symbol(beta, p, side, z));
    return out;
}

namespace {

Crossing refine_crossing(const SpectralCurve& curve, double t0, double t1, bool on_imag_part) {
    auto part = [&](double t) {
        const cx w = symbol(curve.beta, curve.p, curve.side, cx(0.0, t));
        return on_imag_part ? w.imag() : w.real();
    };
    double f0 = part(t0);
    for (int i = 0; i < 200 && t1 - t0 > 0; ++i) {
        const double mid = 0.5 * (t0 + t1);
        if (mid <= t0 || mid >= t1) break;
        const double fm = part(mid);
        if ((f0 <= 0) == (fm <= 0)) {
            t0 = mid;
            f0 = fm;
        } else {
            t1 = mid;
        }
    }
    const double t = 0.5 * (t0 + t1);
    return {t, symbol(curve.beta, curve.p, curve.side, cx(0.0, t))};
}

void scan_sign_changes(const SpectralCurve& curve, bool on_imag_part,
                       std::vector<Crossing>& out) {
    auto val = [&](std::size_t i) {
        return on_imag_part ? curve.w[i].imag() : curve.w[i].real();
    };
    for (std::size_t i = 0; i + 1 < curve.size(); ++i) {
        const double a = val(i), b = val(i + 1);
        if (a == 0.0) {
            if (out.empty() || out.back().t != curve.t[i]) out.push_back({curve.t[i], curve.w[i]});
        } else if ((a < 0) != (b < 0) && b != 0.0) {
            out.push_back(refine_crossing(curve, curve.t[i], curve.t[i + 1], on_imag_part));
        }
    }
    const std::size_t last = curve.size() - 1;
    if (curve.size() && val(last) == 0.0 &&
        (out.empty() || out.back().t != curve.t[last]))
        out.push_back({curve.t[last], curve.w[last]});
}

} // namespace

CrossingReport find_axis_crossings(const SpectralCurve& curve) {
    if (curve.size() == 0) throw std::invalid_argument("find_axis_crossings: empty curve");
    CrossingReport rep;
    scan_sign_changes(curve, /*on_imag_part=*/true, rep.real_axis);
    scan_sign_changes(curve, /*on_imag_part=*/false, rep.imag_axis);
    return rep;
}

std::vector<EnvelopeRow> envelope_scan(std::span<const double> betas, const TraceOptions& opts) {
    std::vector<EnvelopeRow> rows;
    const double p_inf = std::numeric_limits<double>::infinity();
    for (double b : betas) {
        const SpectralCurve curve = trace_border(cx(b, 0.0), p_inf, Side::primal, opts);
        double best = -1.0;
        std::size_t arg = 0;
        for (std::size_t i = 0; i < curve.size(); ++i) {
            const double a = std::abs(curve.w[i]);
            if (a > best) {
                best = a;
                arg = i;
            }
        }
        // Golden-section polish inside the bracketing samples.
        double lo = curve.t[arg > 0 ? arg - 1 : arg];
        double hi = curve.t[arg + 1 < curve.size() ? arg + 1 : arg];
        auto mod = [&](double t) {
            return std::abs(symbol(cx(b, 0.0), p_inf, Side::primal, cx(0.0, t)));
        };
        const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
        double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
        double f1 = mod(x1), f2 = mod(x2);
        for (int i = 0; i < 120 && hi - lo > 1e-14 * std::max(1.0, std::abs(hi)); ++i) {
            if (f1 < f2) {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + gr * (hi - lo);
                f2 = mod(x2);
            } else {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - gr * (hi - lo);
                f1 = mod(x1);
            }
        }
        const double t_star = 0.5 * (lo + hi);
        const double m_star = mod(t_star);
        if (m_star > best) {
            rows.push_back({b, m_star, t_star});
        } else {
            rows.push_back({b, best, curve.t[arg]});
        }
    }
    return rows;
}

} // namespace cesarolab
