#include "cesarolab/semigroups.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "cesarolab/gamma.hpp"
#include "cesarolab/series.hpp"
#include "cesarolab/spaces.hpp"
#include "cesarolab/weyl.hpp"

namespace cesarolab {

double TruncatedSequence::envelope(std::size_t n) const {
    if (n <= last_index()) return std::abs(values[n]);
    switch (decay) {
        case Decay::finite: return 0.0;
        case Decay::geometric:
            return tail_bound * std::pow(ratio, static_cast<double>(n - last_index() - 1));
        case Decay::polynomial:
            return tail_bound * std::pow(static_cast<double>(last_index() + 2) /
                                             static_cast<double>(n + 1),
                                         exponent);
    }
    return 0.0;
}

double TruncatedSequence::envelope_sum(std::size_t from) const {
    if (from <= last_index())
        throw std::logic_error("TruncatedSequence::envelope_sum: index inside stored range");
    switch (decay) {
        case Decay::finite: return 0.0;
        case Decay::geometric:
            return tail_bound * std::pow(ratio, static_cast<double>(from - last_index() - 1)) /
                   (1.0 - ratio);
        case Decay::polynomial: break;
    }
    throw std::domain_error("TruncatedSequence::envelope_sum: decay class has no closed tail sum");
}

namespace {

void require_time(double t) {
    if (!(t >= 0)) throw std::invalid_argument("semigroup time must be >= 0");
}

double lchoose(std::size_t n, std::size_t j) {
    return std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(static_cast<double>(j) + 1.0) -
           std::lgamma(static_cast<double>(n - j) + 1.0);
}

// Row of weights w_j = C(n,j) e^{-tj} q^{n-j} for j = 0..jmax, q = 1-e^{-t}.
// Multiplicative recurrence while q^n stays in range, per-entry log space
// beyond that.
void t_row_weights(std::size_t n, double t, double q, std::size_t jmax, std::vector<double>& w) {
    w.resize(jmax + 1);
    const double dn = static_cast<double>(n);
    const double log_q = std::log(q);
    if (dn * log_q > -680.0) {
        double wj = std::pow(q, dn);
        for (std::size_t j = 0; j <= jmax; ++j) {
            w[j] = wj;
            wj *= (dn - static_cast<double>(j)) / (static_cast<double>(j) + 1.0) *
                  std::exp(-t) / q;
        }
    } else {
        for (std::size_t j = 0; j <= jmax; ++j)
            w[j] = std::exp(lchoose(n, j) - t * static_cast<double>(j) +
                            (dn - static_cast<double>(j)) * log_q);
    }
}

} // namespace

TruncatedSequence apply_T(const FiniteSequence& f, double t, std::size_t n_out) {
    require_time(t);
    const std::size_t m = f.last_index();
    if (t == 0) {
        TruncatedSequence out;
        out.values.assign(f.values().begin(), f.values().end());
        out.values.resize(std::max(n_out, m) + 1, cx{});
        out.decay = Decay::finite;
        return out;
    }
    const double q = -std::expm1(-t);
    const std::size_t last = std::max(n_out, m);

    TruncatedSequence out;
    out.values.resize(last + 1);
    std::vector<double> w;
    for (std::size_t n = 0; n <= last; ++n) {
        t_row_weights(n, t, q, std::min(n, m), w);
        KahanC acc;
        for (std::size_t j = 0; j < w.size(); ++j) acc.add(w[j] * f(j));
        out.values[n] = acc.value();
    }

    // |T(t)f(n)| <= ||f||_inf (n+1)^m q^{n-m} for n > m; fold the polynomial
    // factor into a slightly larger geometric ratio.
    out.decay = Decay::geometric;
    out.ratio = 0.5 * (1.0 + q);
    const double sup = f.sup_norm();
    if (sup == 0 || q == 0) {
        out.tail_bound = 0;
    } else {
        const double dm = static_cast<double>(m);
        auto log_coeff = [&](double n) {
            return std::log(sup) + dm * std::log(n + 1.0) + (n - dm) * std::log(q) -
                   (n - static_cast<double>(last) - 1.0) * std::log(out.ratio);
        };
        const double n_star = dm / std::log(out.ratio / q) - 1.0;
        double best = log_coeff(static_cast<double>(last) + 1.0);
        for (const double cand : {std::floor(n_star), std::ceil(n_star)})
            if (cand > static_cast<double>(last)) best = std::max(best, log_coeff(cand));
        out.tail_bound = std::exp(best);
    }
    return out;
}

FiniteSequence apply_S(const FiniteSequence& f, double t) {
    require_time(t);
    if (t == 0) return f;
    const std::size_t last = f.last_index();
    const double q = -std::expm1(-t);
    std::vector<cx> out(last + 1);
    for (std::size_t n = 0; n <= last; ++n) {
        KahanC acc;
        const double tn = t * static_cast<double>(n);
        if (tn < 690.0) {
            double v = std::exp(-tn);
            for (std::size_t j = n; j <= last; ++j) {
                acc.add(v * f(j));
                v *= q * (static_cast<double>(j) + 1.0) /
                     (static_cast<double>(j - n) + 1.0);
            }
        } else {
            const double log_q = std::log(q);
            for (std::size_t j = n; j <= last; ++j)
                acc.add(std::exp(-tn + lchoose(j, n) +
                                 static_cast<double>(j - n) * log_q) *
                        f(j));
        }
        out[n] = acc.value();
    }
    return FiniteSequence(std::move(out));
}

TruncatedSequence apply_T_weighted(const FiniteSequence& f, double t, double p,
                                   std::size_t n_out) {
    TruncatedSequence out = apply_T(f, t, n_out);
    const double w = std::exp(-t * inv_p(p));
    for (cx& z : out.values) z *= w;
    out.tail_bound *= w;
    return out;
}

FiniteSequence apply_S_weighted(const FiniteSequence& f, double t, double p) {
    return cx(std::exp(-t * (1.0 - inv_p(p))), 0.0) * apply_S(f, t);
}

std::variant<TruncatedSequence, FiniteSequence> apply_weighted(const FiniteSequence& f,
                                                               const SemigroupParams& params,
                                                               std::size_t n_out) {
    if (params.kind == 'T') return apply_T_weighted(f, params.t, params.p, n_out);
    if (params.kind == 'S') return apply_S_weighted(f, params.t, params.p);
    throw std::invalid_argument("apply_weighted: kind must be 'T' or 'S'");
}

FiniteSequence generator_A(const FiniteSequence& f, double p) {
    const double k = inv_p(p);
    std::vector<cx> out(f.size() + 1);
    out[0] = -k * f(0);
    for (std::size_t n = 1; n < out.size(); ++n)
        out[n] = -static_cast<double>(n) * (f(n) - f(n - 1)) - k * f(n);
    return FiniteSequence(std::move(out));
}

FiniteSequence generator_B(const FiniteSequence& f, double p) {
    const double k = inv_p(p);
    std::vector<cx> out(f.size());
    for (std::size_t n = 0; n < out.size(); ++n)
        out[n] = static_cast<double>(n + 1) * (f(n + 1) - f(n)) + k * f(n);
    return FiniteSequence(std::move(out));
}

ZValue z_transform(const FiniteSequence& f, cx z) {
    KahanC acc;
    cx zn = 1.0;
    for (std::size_t n = 0; n < f.size(); ++n) {
        acc.add(f(n) * zn);
        zn *= z;
    }
    return {acc.value(), 0.0};
}

ZValue z_transform(const TruncatedSequence& f, cx z) {
    const double az = std::abs(z);
    double tail = 0;
    switch (f.decay) {
        case Decay::finite: break;
        case Decay::geometric: {
            const double rho = f.ratio * az;
            if (!(rho < 1.0))
                throw std::domain_error("z_transform: decay class cannot certify convergence");
            tail = f.tail_bound * std::pow(az, static_cast<double>(f.last_index() + 1)) /
                   (1.0 - rho);
            break;
        }
        case Decay::polynomial: {
            if (!(az < 1.0))
                throw std::domain_error("z_transform: decay class cannot certify convergence");
            tail = f.tail_bound * std::pow(az, static_cast<double>(f.last_index() + 1)) /
                   (1.0 - az);
            break;
        }
    }
    KahanC acc;
    cx zn = 1.0;
    for (std::size_t n = 0; n < f.values.size(); ++n) {
        acc.add(f.values[n] * zn);
        zn *= z;
    }
    return {acc.value(), tail};
}

ZFunctionalReport z_functional_equations(const FiniteSequence& f, double t, cx z) {
    if (!(t > 0)) throw std::invalid_argument("z_functional_equations: requires t > 0");
    if (!(std::abs(z) < 1.0)) throw std::domain_error("z_functional_equations: requires |z| < 1");
    const double q = -std::expm1(-t);
    const double et = std::exp(-t);

    ZFunctionalReport rep;

    std::size_t n_out = 64;
    for (;;) {
        const ZValue zv = z_transform(apply_T(f, t, n_out), z);
        rep.transform_T = zv.value;
        if (zv.tail_bound <= 1e-13 * std::max(1.0, std::abs(zv.value)) || n_out >= (1u << 16))
            break;
        n_out *= 2;
    }

    const cx psi = et * z / (1.0 - z * q);
    const cx phi = et * (z - 1.0) + 1.0;
    rep.composed_T = z_transform(f, psi).value;
    rep.composed_T_prefactored = rep.composed_T / (1.0 - z * q);
    rep.transform_S = z_transform(apply_S(f, t), z).value;
    rep.composed_S = z_transform(f, phi).value;

    rep.resid_T_bare = relative_error(rep.transform_T, rep.composed_T);
    rep.resid_T_prefactored = relative_error(rep.transform_T, rep.composed_T_prefactored);
    rep.resid_S = relative_error(rep.transform_S, rep.composed_S);
    return rep;
}

IntertwineReport intertwine_T(const FiniteSequence& f, double alpha, double t,
                              std::size_t n_out, double tol) {
    if (!(alpha > 0)) throw std::invalid_argument("intertwine_T: requires alpha > 0");
    require_time(t);

    // Right side: exact entries.
    const TruncatedSequence rhs_t = apply_T(weyl_diff(f, alpha), t, n_out);
    const double damp = std::exp(-t * alpha);

    double scale = 1e-300;
    for (std::size_t n = 0; n <= n_out; ++n)
        scale = std::max(scale, damp * std::abs(rhs_t(n)));

    // Left side: W^alpha of a guarded truncation of T(t)f. |k^{-alpha}(m)| is
    // decreasing once m > alpha, so the truncation error beyond index J is at
    // most |k^{-alpha}(J+1-n)| * sum of the envelope.
    std::size_t guard = 64;
    std::vector<cx> lhs;
    double tail = 0;
    for (;;) {
        const TruncatedSequence tf = apply_T(f, t, n_out + guard);
        const std::size_t j_max = tf.last_index();
        const std::vector<cx> kern = kernel_values(cx(-alpha, 0.0), j_max + 2);
        tail = std::abs(kern[j_max + 1 - n_out]) * tf.envelope_sum(j_max + 1);
        if (tail <= tol * scale || guard >= 65536) {
            lhs.assign(n_out + 1, cx{});
            for (std::size_t n = 0; n <= n_out; ++n) {
                KahanC acc;
                for (std::size_t j = n; j <= j_max; ++j) acc.add(kern[j - n] * tf(j));
                lhs[n] = acc.value();
            }
            break;
        }
        guard *= 2;
    }

    IntertwineReport rep;
    rep.checked = n_out + 1;
    rep.truncation_tail = tail;
    for (std::size_t n = 0; n <= n_out; ++n) {
        const double err = std::abs(lhs[n] - damp * rhs_t(n));
        rep.max_abs_err = std::max(rep.max_abs_err, err);
    }
    rep.max_rel_err = (rep.max_abs_err + tail) / scale;
    return rep;
}

IntertwineReport intertwine_S(const FiniteSequence& f, double alpha, double t) {
    if (!(alpha >= 0)) throw std::invalid_argument("intertwine_S: requires alpha >= 0");
    require_time(t);
    const std::size_t last = f.last_index();
    const std::vector<cx> kern = kernel_values(cx(alpha + 1.0, 0.0), last + 1);
    const FiniteSequence wf = weyl_apply(f, alpha);

    // Route 1: k^{alpha+1} . W^alpha(S(t)f) versus S(t)(k^{alpha+1} W^alpha f).
    const FiniteSequence w_of_s = weyl_apply(apply_S(f, t), alpha);
    std::vector<cx> weighted(last + 1);
    for (std::size_t n = 0; n <= last; ++n) weighted[n] = kern[n] * wf(n);
    const FiniteSequence s_of_weighted = apply_S(FiniteSequence(weighted), t);

    // Route 2 (binomial form): W^alpha S(t) f(n)
    //   = e^{-tn} sum_j C(j+alpha, n+alpha) q^{j-n} W^alpha f(j),
    // using k^{alpha+1}(n) C(j+alpha, n+alpha) = k^{alpha+1}(j) C(j,n).
    const double q = -std::expm1(-t);
    IntertwineReport rep;
    rep.checked = last + 1;
    double scale = 1e-300;
    for (std::size_t n = 0; n <= last; ++n) {
        const cx lhs1 = kern[n] * w_of_s(n);
        const cx rhs1 = s_of_weighted(n);
        KahanC acc;
        double c_jn = 1.0; // C(j,n) by recurrence
        double q_pow = 1.0;
        for (std::size_t j = n; j <= last; ++j) {
            acc.add(kern[j] / kern[n] * c_jn * q_pow * wf(j));
            c_jn *= (static_cast<double>(j) + 1.0) / (static_cast<double>(j - n) + 1.0);
            q_pow *= q;
        }
        const cx lhs2 = w_of_s(n);
        const cx rhs2 = std::exp(-t * static_cast<double>(n)) * acc.value();
        rep.max_abs_err = std::max({rep.max_abs_err, std::abs(lhs1 - rhs1), std::abs(lhs2 - rhs2)});
        scale = std::max({scale, std::abs(lhs1), std::abs(rhs1)});
    }
    rep.max_rel_err = rep.max_abs_err / scale;
    return rep;
}

NonholomorphyWitness nonholomorphy_witness(double delta0) {
    if (!(delta0 > 0 && delta0 < std::numbers::pi / 2))
        throw std::domain_error("nonholomorphy_witness: delta0 must lie in (0, pi/2)");
    const double rho = std::numbers::pi / (2.0 * std::sin(delta0));
    NonholomorphyWitness w;
    w.z = rho * std::exp(cx(0.0, delta0));
    w.modulus = std::abs(1.0 - std::exp(-w.z));
    w.F_value = 2.0 * std::cos(rho * std::sin(delta0)) - std::exp(-rho * std::cos(delta0));
    return w;
}

} // namespace cesarolab
