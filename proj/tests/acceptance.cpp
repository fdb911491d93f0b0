// Acceptance suite: every release criterion in one binary, one PASS/FAIL
// line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "cesarolab/cesaro.hpp"
#include "cesarolab/gamma.hpp"
#include "cesarolab/series.hpp"
#include "cesarolab/identities.hpp"
#include "cesarolab/semigroups.hpp"
#include "cesarolab/spaces.hpp"
#include "cesarolab/spectra.hpp"
#include "cesarolab/weyl.hpp"
#include "oracle.hpp"

using namespace cesarolab;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

int failures = 0;

struct Criterion {
    int id;
    const char* label;
    bool ok = true;
    std::string detail{};

    void require(bool cond, const std::string& why) {
        if (!cond && ok) {
            ok = false;
            detail = why;
        }
    }
    void require_le(double value, double bound, const std::string& what) {
        if (!(value <= bound))
            require(false, what + ": " + std::to_string(value) + " > " + std::to_string(bound));
    }
};

void finish(Criterion& c) {
    std::printf("[%s] criterion %2d: %s%s%s\n", c.ok ? "PASS" : "FAIL", c.id, c.label,
                c.detail.empty() ? "" : " -- ", c.detail.c_str());
    if (!c.ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const std::vector<double> kAlphaGrid{0.3, 0.7, 1.5, 2.6};
const std::vector<double> kUvrGrid{0.5, 1.0, 2.5};
const std::vector<std::size_t> kMGrid{0, 1, 5, 25, 60};

void criterion_1_gamma_identities() {
    Criterion c{1, "Gamma-identity suites (fits, key, funda, special, llave)"};
    const auto t0 = std::chrono::steady_clock::now();

    for (double a : kAlphaGrid) {
        for (double u : kUvrGrid) {
            for (double v : kUvrGrid) {
                const VerificationReport r = verify_fits(a, u, v, 1e-10, 200000);
                const double scale = std::max(std::abs(r.rhs), 1e-300);
                c.require_le(std::abs(r.lhs - r.rhs), 1e-10 * scale + r.tail_bound + 1e-14,
                             "fits tol+tail at alpha=" + std::to_string(a) +
                                 " u=" + std::to_string(u) + " v=" + std::to_string(v));
            }
        }
        for (double v : kUvrGrid) {
            for (double r : kUvrGrid) {
                for (std::size_t m : kMGrid) {
                    const VerificationReport key = verify_key(a, v, r, m);
                    const VerificationReport funda = verify_funda(a, v, r, m);
                    c.require_le(key.rel_err, 1e-9, "key rel_err");
                    c.require_le(funda.rel_err, 1e-9, "funda rel_err");
                    c.require(key.tail_bound == 0.0 && funda.tail_bound == 0.0,
                              "finite sums must report tail_bound = 0");
                }
            }
            for (std::size_t m : kMGrid) {
                const auto [first, second] = verify_special_cases(a, v, m);
                c.require_le(first.rel_err, 1e-9, "special1 rel_err");
                c.require_le(second.rel_err, 1e-9, "special2 rel_err");
                c.require(first.tail_bound == 0.0 && second.tail_bound == 0.0,
                          "finite sums must report tail_bound = 0");
            }
        }
        for (const cx& t : {cx(0.1, 0.0), cx(1.0, 0.0), cx(3.0, 0.0), cx(0.2, 0.1)}) {
            for (auto [n, u] : {std::pair<std::size_t, std::size_t>{0, 0}, {3, 5}, {6, 2}, {5, 5}}) {
                const VerificationReport r = verify_llave(a, t, n, u, 1e-10);
                const double scale = std::max(std::abs(r.rhs), 1e-300);
                c.require_le(std::abs(r.lhs - r.rhs), 1e-10 * scale + r.tail_bound + 1e-14,
                             "llave tol+tail");
            }
        }
    }
    const double dt = seconds_since(t0);
    c.require(dt < 10.0, "runtime " + std::to_string(dt) + "s >= 10s");
    finish(c);
}

void criterion_2_kernel_semigroup() {
    Criterion c{2, "kernel semigroup property k^a * k^b = k^{a+b}, N = 256"};
    const auto t0 = std::chrono::steady_clock::now();
    const std::size_t n_max = 256;
    for (double a : kAlphaGrid) {
        for (double b : kAlphaGrid) {
            const FiniteSequence ka{kernel_values(cx(a, 0.0), n_max + 1)};
            const FiniteSequence kb{kernel_values(cx(b, 0.0), n_max + 1)};
            const FiniteSequence conv = convolve(ka, kb);
            const std::vector<cx> kab = kernel_values(cx(a + b, 0.0), n_max + 1);
            double worst = 0;
            for (std::size_t n = 0; n <= n_max; ++n)
                worst = std::max(worst, std::abs(conv(n) - kab[n]) / std::abs(kab[n]));
            c.require_le(worst, 1e-10, "relative deviation at a=" + std::to_string(a) +
                                           " b=" + std::to_string(b));
        }
    }
    const double dt = seconds_since(t0);
    c.require(dt < 1.0, "runtime " + std::to_string(dt) + "s >= 1s");
    finish(c);
}

void criterion_3_weyl_roundtrip() {
    // The 1e-12 is relative to what actually flows through the trip: the
    // intermediate W^{-a}f reaches ~5e3 ||f|| at a = 2.5, N = 128, and its
    // double rounding alone already costs ~1e-12 ||f|| on the way back.
    Criterion c{3, "Weyl round trips and route equivalence <= 1e-12, N <= 128"};
    unsigned seed = 100;
    for (double alpha : {0.3, 0.5, 1.0, 1.7, 2.5}) {
        const FiniteSequence f = oracle::random_sequence(128, seed++);
        const FiniteSequence down = weyl_diff(f, alpha);
        const FiniteSequence up = weyl_sum(f, alpha);
        c.require_le(max_abs_diff(weyl_sum(down, alpha), f),
                     1e-12 * std::max(f.sup_norm(), down.sup_norm()),
                     "W^{-a} W^a round trip at alpha=" + std::to_string(alpha));
        c.require_le(max_abs_diff(weyl_diff(up, alpha), f),
                     1e-12 * std::max(f.sup_norm(), up.sup_norm()),
                     "W^a W^{-a} round trip at alpha=" + std::to_string(alpha));

        const FiniteSequence r2 = weyl_diff_composed(f, alpha);
        double route_scale = 1e-300;
        for (std::size_t n = 0; n <= f.last_index(); ++n)
            route_scale = std::max(route_scale, std::abs(down(n)));
        c.require_le(max_abs_diff(down, r2), 1e-12 * route_scale,
                     "route equivalence at alpha=" + std::to_string(alpha));
    }
    finish(c);
}

void criterion_4_leibniz() {
    Criterion c{4, "product rule W^a(j f) = (n+a) W^a f - a W^{a-1} f <= 1e-11"};
    unsigned seed = 200;
    for (double alpha : {0.3, 0.5, 1.0, 1.7, 2.5}) {
        const FiniteSequence f = oracle::random_sequence(64, seed++);
        c.require_le(leibniz_check(f, alpha).rel_err, 1e-11,
                     "alpha=" + std::to_string(alpha));
    }
    finish(c);
}

void criterion_5_intertwining() {
    Criterion c{5, "intertwining: S route exact <= 1e-12, T route <= 1e-9 guarded"};
    unsigned seed = 300;
    for (double alpha : {1.0, 1.5, 0.5}) {
        for (double t : {0.0, 0.5, 2.0}) {
            const FiniteSequence f = oracle::random_sequence(20, seed++);
            c.require_le(intertwine_S(f, alpha, t).max_rel_err, 1e-12,
                         "S intertwining at alpha=" + std::to_string(alpha) +
                             " t=" + std::to_string(t));
        }
    }
    for (double alpha : {0.5, 1.0, 1.7}) {
        for (double t : {0.3, 1.0}) {
            const FiniteSequence f = oracle::random_sequence(16, seed++);
            c.require_le(intertwine_T(f, alpha, t, 24, 1e-11).max_rel_err, 1e-9,
                         "T intertwining at alpha=" + std::to_string(alpha) +
                             " t=" + std::to_string(t));
        }
    }
    finish(c);
}

void criterion_6_semigroup_laws() {
    Criterion c{6, "semigroup laws, strong continuity trend, weighted duality <= 1e-10"};
    const FiniteSequence f = oracle::random_sequence(24, 400);
    for (double s : {0.1, 0.5, 1.0, 3.0}) {
        for (double t : {0.1, 0.5, 1.0, 3.0}) {
            const TruncatedSequence inner = apply_T(f, t, 64);
            const TruncatedSequence two =
                apply_T(FiniteSequence{std::vector<cx>(inner.values)}, s, 64);
            const TruncatedSequence one = apply_T(f, s + t, 64);
            for (std::size_t n = 0; n <= 64; ++n)
                c.require_le(std::abs(two(n) - one(n)), 1e-12 * std::max(1.0, std::abs(one(n))),
                             "T law at s=" + std::to_string(s) + " t=" + std::to_string(t));
            const FiniteSequence s_two = apply_S(apply_S(f, t), s);
            const FiniteSequence s_one = apply_S(f, s + t);
            c.require_le(max_abs_diff(s_two, s_one), 1e-12 * std::max(1.0, s_one.sup_norm()),
                         "S law");
        }
    }

    // Strong continuity: differences decay to 0; monotone once h is inside
    // the continuity regime (from h = 1/16 on -- large h can reorder).
    double prev_t = 1e100, prev_s = 1e100;
    bool monotone = true;
    for (int k = 1; k <= 20; ++k) {
        const double h = std::pow(2.0, -k);
        const TruncatedSequence th = apply_T_weighted(f, h, 2.0, 64);
        double dt = 0;
        for (std::size_t n = 0; n <= 64; ++n) dt = std::max(dt, std::abs(th(n) - f(n)));
        const double ds = max_abs_diff(apply_S_weighted(f, h, 2.0), f);
        if (k >= 4)
            monotone = monotone && dt <= prev_t * (1 + 1e-12) && ds <= prev_s * (1 + 1e-12);
        prev_t = dt;
        prev_s = ds;
    }
    c.require(monotone && prev_t < 1e-4 && prev_s < 1e-4, "strong continuity trend");

    unsigned seed = 410;
    for (auto [p, pp] : {std::pair{2.0, 2.0}, {1.5, 3.0}, {4.0, 4.0 / 3.0}}) {
        for (double t : {0.4, 1.7}) {
            const FiniteSequence a = oracle::random_sequence(20, seed++);
            const FiniteSequence b = oracle::random_sequence(26, seed++);
            const TruncatedSequence ta = apply_T_weighted(a, t, p, b.last_index());
            cx lhs{};
            for (std::size_t n = 0; n <= b.last_index(); ++n) lhs += ta(n) * b(n);
            const FiniteSequence sb = apply_S_weighted(b, t, pp);
            cx rhs{};
            for (std::size_t n = 0; n <= a.last_index(); ++n) rhs += a(n) * sb(n);
            c.require_le(std::abs(lhs - rhs), 1e-10 * std::max(1.0, std::abs(rhs)),
                         "duality at p=" + std::to_string(p));
        }
    }
    finish(c);
}

void criterion_7_generator_eigenrelation() {
    Criterion c{7, "generator eigen-relation B k^{l+1-1/p} = l k^{l+1-1/p} on 0..512"};
    for (const cx lambda : {cx(-0.5, 0.0), cx(-1.0, 0.5)}) {
        for (double p : {1.0, 2.0, 4.0}) {
            const cx mu = lambda + 1.0 - inv_p(p);
            const FiniteSequence kmu{kernel_values(mu, 514)};
            const FiniteSequence bk = generator_B(kmu, p);
            double worst = 0;
            for (std::size_t n = 0; n <= 512; ++n) {
                const cx expect = lambda * kmu(n);
                worst = std::max(worst, std::abs(bk(n) - expect) / std::abs(expect));
            }
            c.require_le(worst, 1e-12, "lambda=(" + std::to_string(lambda.real()) + "," +
                                           std::to_string(lambda.imag()) +
                                           ") p=" + std::to_string(p));
        }
    }
    finish(c);
}

void criterion_8_subordination() {
    Criterion c{8, "subordination route agrees with direct route, p-independent"};
    const FiniteSequence f = oracle::random_sequence(16, 500);
    for (const cx beta : {cx(0.5, 0.0), cx(1.0, 0.0), cx(2.0, 0.0), cx(1.0, 1.0)}) {
        const TruncatedSequence direct = cesaro_direct(f, beta, 32);
        for (std::size_t n = 0; n <= 32; n += (n < 4 ? 1 : 7)) {
            const cx sub = cesaro_via_subordination(f, beta, 2.0, n, 1e-10);
            c.require_le(std::abs(sub - direct(n)),
                         1e-8 * std::max(1.0, std::abs(direct(n))),
                         "route agreement at n=" + std::to_string(n));
        }
        const cx p_a = cesaro_via_subordination(f, beta, 1.5, 7, 1e-11);
        const cx p_b = cesaro_via_subordination(f, beta, 4.0, 7, 1e-11);
        c.require_le(std::abs(p_a - p_b), 1e-10 * std::max(1.0, std::abs(p_a)),
                     "p-independence");
    }
    // dual route against the dual direct operator
    const FiniteSequence dual = cesaro_dual_direct(f, cx(0.5, 0.0));
    const cx dsub = cesaro_via_subordination(f, cx(0.5, 0.0), 2.0, 3, 1e-10, true);
    c.require_le(std::abs(dsub - dual(3)), 1e-8 * std::max(1.0, std::abs(dual(3))),
                 "dual route agreement");
    finish(c);
}

void criterion_9_known_values() {
    Criterion c{9, "known values: shifted-kernel image, resolvent identity, squared-operator gap"};
    // C_beta(k^{-beta}(.+1))(n) = -beta/(n+1) to 1e-12
    for (const cx beta : {cx(0.5, 0.0), cx(1.0, 0.0), cx(2.0, 0.0), cx(1.0, 1.0)}) {
        const std::size_t n_out = 512;
        const std::vector<cx> km = kernel_values(-beta, n_out + 2);
        std::vector<cx> fv(n_out + 1);
        for (std::size_t i = 0; i <= n_out; ++i) fv[i] = km[i + 1];
        const TruncatedSequence cf = cesaro_direct(FiniteSequence(std::move(fv)), beta, n_out);
        double worst = 0;
        for (std::size_t n = 0; n <= n_out; ++n) {
            const cx expect = -beta / (static_cast<double>(n) + 1.0);
            worst = std::max(worst, std::abs(cf(n) - expect) / std::abs(expect));
        }
        c.require_le(worst, 1e-12, "shifted-kernel image");
    }
    // resolvent identity
    unsigned seed = 600;
    for (double p : {2.0, 4.0, kInf}) {
        const FiniteSequence f = oracle::random_sequence(24, seed++);
        c.require_le(resolvent_check_c1(f, p, 64).max_err_primal, 1e-12,
                     "primal resolvent at p=" + std::to_string(p));
    }
    for (double p : {1.0, 2.0, 4.0}) {
        const FiniteSequence f = oracle::random_sequence(24, seed++);
        c.require_le(resolvent_check_c1(f, p, 64).max_err_dual, 1e-12,
                     "dual resolvent at p=" + std::to_string(p));
    }
    // squared order-1 vs order-2 gap
    for (const cx lambda : {cx(2.0, 0.0), cx(3.0, 0.0)}) {
        const C1SquaredWitness w = witness_c1sq_neq_c2(lambda, 8);
        c.require(w.max_gap >= 1e-3, "squared-operator gap too small");
    }
    finish(c);
}

void criterion_10_inequality_audits() {
    Criterion c{10, "Hardy and operator-norm audits: 0 violations over 200 samples per (beta,p)"};
    const std::size_t n_len = 32;
    for (double beta : {0.5, 1.0, 2.0}) {
        for (double p : {1.5, 2.0, 4.0}) {
            const double hp = hardy_constant(beta, p, false);
            const double hd = hardy_constant(beta, p, true);
            const double bp = operator_norm_bound(cx(beta, 0.0), p, false);
            const double bd = operator_norm_bound(cx(beta, 0.0), p, true);
            for (unsigned s = 0; s < 200; ++s) {
                const FiniteSequence f =
                    oracle::random_nonnegative_sequence(n_len, 7000 + 211 * s);
                const double fp = norm(f, {0.0, p}).value;

                // primal Hardy sum: n >= 1, inner j < n
                Kahan hs;
                for (std::size_t n = 1; n <= 4 * n_len; ++n) {
                    double inner = 0;
                    for (std::size_t j = 0; j < std::min(n, n_len + 1); ++j)
                        inner += std::pow(static_cast<double>(n - j), beta - 1.0) * f(j).real();
                    hs.add(std::pow(inner / std::pow(static_cast<double>(n), beta), p));
                }
                c.require_le(std::pow(hs.value(), 1.0 / p), hp * fp * (1 + 1e-12),
                             "primal Hardy violation");

                // dual Hardy sum: j > n (j = n admissible only at beta = 1)
                Kahan ds;
                for (std::size_t n = 1; n <= n_len; ++n) {
                    double inner = beta == 1.0 ? f(n).real() / static_cast<double>(n) : 0.0;
                    for (std::size_t j = n + 1; j <= n_len; ++j)
                        inner += std::pow(static_cast<double>(j - n), beta - 1.0) *
                                 std::pow(static_cast<double>(j), -beta) * f(j).real();
                    ds.add(std::pow(inner, p));
                }
                c.require_le(std::pow(ds.value(), 1.0 / p), hd * fp * (1 + 1e-12),
                             "dual Hardy violation");

                if (s % 4 == 0) {
                    for (double alpha : {0.0, 0.5, 1.0}) {
                        const double fn = norm(f, {alpha, p}).value;
                        const double dual_norm =
                            norm(cesaro_dual_direct(f, cx(beta, 0.0)), {alpha, p}).value;
                        c.require_le(dual_norm, bd * fn * (1 + 1e-10), "dual norm bound");
                    }
                    // primal: partial norm of the operator output is a lower
                    // bound of the true norm, so it must obey the bound too
                    const TruncatedSequence cf = cesaro_direct(f, cx(beta, 0.0), 4 * n_len);
                    const double partial =
                        norm(FiniteSequence{std::vector<cx>(cf.values)}, {0.0, p}).value;
                    c.require_le(partial, bp * fp * (1 + 1e-10), "primal norm bound");
                }
            }
        }
    }
    finish(c);
}

void criterion_11_spectral_circle() {
    Criterion c{11, "order-1 spectral border is the circle |w - 1/(2a)| = 1/(2a)"};
    for (double p : {1.0, 1.5, 2.0, 4.0}) {
        const double a = side_offset(Side::dual, p);
        const SpectralCurve curve = trace_border(cx(1, 0), p, Side::dual);
        double worst = 0;
        for (const cx& w : curve.w)
            worst = std::max(worst, std::abs(std::abs(w - 0.5 / a) - 0.5 / a));
        c.require_le(worst, 1e-10, "dual circle residual at p=" + std::to_string(p));
    }
    for (double p : {1.5, 2.0, 4.0, kInf}) {
        const double a = side_offset(Side::primal, p);
        const SpectralCurve curve = trace_border(cx(1, 0), p, Side::primal);
        double worst = 0;
        for (const cx& w : curve.w)
            worst = std::max(worst, std::abs(std::abs(w - 0.5 / a) - 0.5 / a));
        c.require_le(worst, 1e-10, "primal circle residual at p=" + std::to_string(p));
    }
    finish(c);
}

void criterion_12_figures() {
    Criterion c{12, "figure-level properties of the border curves"};
    const auto t0 = std::chrono::steady_clock::now();

    // beta = 5, p = 2: at least two imaginary-axis crossings
    const SpectralCurve c5 = trace_border(cx(5, 0), 2.0, Side::primal);
    c.require(find_axis_crossings(c5).imag_axis.size() >= 2,
              "beta=5 curve should cross the imaginary axis twice");

    // beta = 0.5, p = 2: no imaginary-axis crossings, contained in |w-1| <= 1
    const SpectralCurve ch = trace_border(cx(0.5, 0.0), 2.0, Side::primal);
    c.require(find_axis_crossings(ch).imag_axis.empty(), "beta=0.5 curve crosses imaginary axis");
    for (const cx& w : ch.w)
        c.require_le(std::abs(w - 1.0), 1.0 + 1e-6, "beta=0.5 curve leaves the disc");

    // p = inf family: through 1 at t = 0, max modulus <= 1 + 1e-9
    const std::vector<double> betas{1.0, 10.0, 100.0};
    for (double b : betas)
        c.require_le(std::abs(symbol(cx(b, 0.0), kInf, Side::primal, cx(0, 0)) - 1.0), 1e-12,
                     "p=inf curve misses w(0)=1");
    for (const EnvelopeRow& row : envelope_scan(betas))
        c.require_le(row.max_abs_w, 1.0 + 1e-9, "p=inf curve exceeds the unit disc");

    // conjugate mirror symmetry
    const cx beta(1.0, 1.0);
    const SpectralCurve cc = trace_border(beta, 2.0, Side::primal);
    double worst = 0;
    for (std::size_t i = 0; i < cc.size(); ++i) {
        const cx mirrored = symbol(std::conj(beta), 2.0, Side::primal, cx(0.0, -cc.t[i]));
        worst = std::max(worst, std::abs(std::conj(cc.w[i]) - mirrored));
    }
    c.require_le(worst, 1e-12, "conjugate curves fail to mirror");

    const double dt = seconds_since(t0);
    c.require(dt < 60.0, "runtime " + std::to_string(dt) + "s >= 60s");
    finish(c);
}

void criterion_13_unboundedness() {
    Criterion c{13, "divergence witnesses grow harmonically"};
    const std::vector<std::size_t> lens{5000, 10000};
    const UnboundednessReport rep = unboundedness_witnesses(1.0, lens);
    c.require(rep.primal_partial_norms[1] > 9.0, "primal partial norm below 9 at N=1e4");
    c.require(rep.dual_partial_sums[1] > 9.0, "dual partial sum below 9 at N=1e4");
    const double d_primal = rep.primal_partial_norms[1] - rep.primal_partial_norms[0];
    const double d_dual = rep.dual_partial_sums[1] - rep.dual_partial_sums[0];
    const double ln2 = std::log(2.0);
    c.require(std::abs(d_primal - ln2) <= 0.05 * ln2, "primal doubling slope off ln 2 by >5%");
    c.require(std::abs(d_dual - ln2) <= 0.05 * ln2, "dual doubling slope off ln 2 by >5%");
    finish(c);
}

void criterion_14_nonholomorphy() {
    Criterion c{14, "non-holomorphy witnesses |1 - e^{-z}| > 1 on every sector"};
    for (double d0 : {std::numbers::pi / 6, std::numbers::pi / 4, std::numbers::pi / 3}) {
        const NonholomorphyWitness w = nonholomorphy_witness(d0);
        c.require(w.modulus > 1.0, "witness modulus not above 1");
        c.require(w.F_value < 0.0, "witness F-value not negative");
    }
    finish(c);
}

} // namespace

int main() {
    const auto t0 = std::chrono::steady_clock::now();
    criterion_1_gamma_identities();
    criterion_2_kernel_semigroup();
    criterion_3_weyl_roundtrip();
    criterion_4_leibniz();
    criterion_5_intertwining();
    criterion_6_semigroup_laws();
    criterion_7_generator_eigenrelation();
    criterion_8_subordination();
    criterion_9_known_values();
    criterion_10_inequality_audits();
    criterion_11_spectral_circle();
    criterion_12_figures();
    criterion_13_unboundedness();
    criterion_14_nonholomorphy();
    std::printf("%d criterion failure(s); total runtime %.2fs\n", failures, seconds_since(t0));
    return failures == 0 ? 0 : 1;
}
