#include "cesarolab/cesaro.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cesarolab/gamma.hpp"
#include "cesarolab/quadrature.hpp"
#include "cesarolab/series.hpp"
#include "cesarolab/spaces.hpp"

namespace cesarolab {

namespace {

void require_order(cx beta) {
    if (!(beta.real() > 0)) throw std::invalid_argument("Cesaro order requires Re beta > 0");
}

// |k^beta(m)| <= E_beta * k^{Re beta}(m):  |beta + i| <= (Re beta + i)
// * exp(Im(beta)^2 / (2 (Re beta + i)^2)) factor-wise, and the exponents sum
// to at most Im^2/2 (1/Re^2 + 1/Re).
double imag_inflation(cx beta) {
    const double re = beta.real(), im = beta.imag();
    if (im == 0) return 1.0;
    return std::exp(0.5 * im * im * (1.0 / (re * re) + 1.0 / re));
}

// Envelope coefficient H with |C_beta f(n)| <= H / (n+1) for n > n_from.
// h(j) = (j+1) k^{Re beta}(j - shift) / k^{Re beta+1}(j) is monotone:
// nonincreasing for Re beta <= 1 (shift = support length), increasing to the
// exact limit Re beta for Re beta > 1 (shift = 0, h(j) = Re beta (j+1)/(j+Re beta)).
double envelope_coefficient(const FiniteSequence& f, cx beta, std::size_t n_from) {
    const double rb = beta.real();
    const double inflate = imag_inflation(beta) * f.l1_norm();
    if (rb > 1.0) return inflate * rb;
    const std::size_t m = f.last_index();
    const std::size_t j = std::max(n_from, m + 1);
    const double num = kernel_value(cx(rb, 0.0), j - m).real();
    const double den = kernel_value(cx(rb + 1.0, 0.0), j).real();
    return inflate * static_cast<double>(j + 1) * num / den;
}

} // namespace

TruncatedSequence cesaro_direct(const FiniteSequence& f, cx beta, std::size_t n_out) {
    require_order(beta);
    // The 1/(n+1)-type envelope is only derived past the input's support, so
    // the stored range always covers it.
    const std::size_t m = f.last_index();
    const std::size_t last = std::max(n_out, m);
    const std::vector<cx> kb = kernel_values(beta, last + 1);
    const std::vector<cx> kb1 = kernel_values(beta + 1.0, last + 1);

    TruncatedSequence out;
    out.values.resize(last + 1);
    for (std::size_t n = 0; n <= last; ++n) {
        KahanC acc;
        for (std::size_t j = 0; j <= std::min(n, m); ++j) acc.add(kb[n - j] * f(j));
        out.values[n] = acc.value() / kb1[n];
    }
    out.decay = Decay::polynomial;
    out.exponent = 1.0;
    out.tail_bound = envelope_coefficient(f, beta, last + 1) / static_cast<double>(last + 2);
    return out;
}

FiniteSequence cesaro_dual_direct(const FiniteSequence& f, cx beta) {
    require_order(beta);
    const std::size_t last = f.last_index();
    const std::vector<cx> kb = kernel_values(beta, last + 1);
    const std::vector<cx> kb1 = kernel_values(beta + 1.0, last + 1);
    std::vector<cx> out(last + 1);
    for (std::size_t n = 0; n <= last; ++n) {
        KahanC acc;
        for (std::size_t j = n; j <= last; ++j) acc.add(kb[j - n] * f(j) / kb1[j]);
        out[n] = acc.value();
    }
    return FiniteSequence(std::move(out));
}

cx cesaro_via_subordination(const FiniteSequence& f, cx beta, double p, std::size_t n,
                            double tol, bool dual) {
    require_order(beta);
    if (dual) {
        if (!(p >= 1) || std::isinf(p))
            throw std::invalid_argument("cesaro_via_subordination: dual route needs p in [1,inf)");
    } else {
        if (!(p > 1)) throw std::invalid_argument("cesaro_via_subordination: needs p in (1,inf]");
    }
    const double kp = inv_p(p);
    const std::size_t m = f.last_index();

    // After u = 1 - e^{-t} the semigroup value is a polynomial in u:
    //   T: sum_{j<=n} C(n,j) (1-u)^j u^{n-j} f(j)
    //   S: sum_{j>=n} C(j,n) (1-u)^n u^{j-n} f(j)
    auto semigroup_at = [&](double u) -> cx {
        KahanC acc;
        if (!dual) {
            double c = 1.0;
            for (std::size_t j = 0; j <= std::min(n, m); ++j) {
                acc.add(c * std::pow(1.0 - u, static_cast<double>(j)) *
                        std::pow(u, static_cast<double>(n - j)) * f(j));
                c *= static_cast<double>(n - j) / static_cast<double>(j + 1);
            }
        } else {
            if (n > m) return {};
            double c = 1.0;
            const double base = std::pow(1.0 - u, static_cast<double>(n));
            for (std::size_t j = n; j <= m; ++j) {
                acc.add(c * base * std::pow(u, static_cast<double>(j - n)) * f(j));
                c *= static_cast<double>(j + 1) / static_cast<double>(j - n + 1);
            }
        }
        return acc.value();
    };

    // Weights written exactly as in the subordination formula so that the
    // two p-dependent exponentials must cancel numerically per evaluation.
    auto integrand_u = [&](double u) -> cx {
        const cx u_pow = std::pow(cx(u, 0.0), beta - 1.0);
        const double w_outer = std::pow(1.0 - u, dual ? kp : 1.0 - kp);
        const double w_inner = std::pow(1.0 - u, dual ? 1.0 - kp : kp);
        return beta * u_pow * w_outer * w_inner / (1.0 - u) * semigroup_at(u);
    };

    // Crude magnitude cap for the head [0, eps): |semigroup| <= 2^n ||f||_inf.
    const double head_scale =
        std::abs(beta) * std::pow(2.0, static_cast<double>(n)) * f.sup_norm() + 1e-300;
    const double rb = beta.real();

    double head_bound;
    const double result_tol = tol;
    cx value;
    if (rb < 1.0) {
        // u = s^{1/Re beta} removes the endpoint singularity.
        const double eps = std::min(1e-4, result_tol * rb / (10.0 * head_scale));
        head_bound = head_scale * eps / rb;
        auto integrand_s = [&](double s) -> cx {
            const double u = std::pow(s, 1.0 / rb);
            // u^{beta-1} du = (1/rb) s^{(beta-rb)/rb} ds
            const cx s_pow = std::pow(cx(s, 0.0), (beta - rb) / rb);
            const double w_outer = std::pow(1.0 - u, dual ? kp : 1.0 - kp);
            const double w_inner = std::pow(1.0 - u, dual ? 1.0 - kp : kp);
            return beta / rb * s_pow * w_outer * w_inner / (1.0 - u) * semigroup_at(u);
        };
        value = integrate_adaptive(integrand_s, eps, 1.0, 0.25 * result_tol).value;
    } else {
        const double eps = std::min(1e-6, std::pow(result_tol * rb / (10.0 * head_scale), 1.0 / rb));
        head_bound = head_scale * std::pow(eps, rb) / rb;
        value = integrate_adaptive(integrand_u, eps, 1.0, 0.25 * result_tol).value;
    }
    if (head_bound > 0.5 * result_tol)
        throw std::runtime_error("cesaro_via_subordination: head bound exceeds tolerance budget");
    return value;
}

double hardy_constant(double beta, double p, bool dual) {
    if (!(beta > 0)) throw std::domain_error("hardy_constant: requires beta > 0");
    if (!(p > 1) || std::isinf(p)) throw std::domain_error("hardy_constant: requires p in (1,inf)");
    const double a = dual ? 1.0 / p : 1.0 - 1.0 / p;
    return std::exp(log_gamma_pos(beta) + log_gamma_pos(a) - log_gamma_pos(beta + a));
}

double operator_norm_bound(cx beta, double p, bool dual) {
    require_order(beta);
    const double kp = inv_p(p);
    const double a = dual ? kp : 1.0 - kp;
    if (!(a > 0)) throw std::domain_error("operator_norm_bound: weight exponent out of range");
    return std::abs(beta) *
           std::exp(log_gamma_pos(beta.real()) + log_gamma_pos(a) - log_gamma_pos(beta.real() + a));
}

TailValue weyl_of_cesaro(const FiniteSequence& f, cx beta, double alpha, std::size_t n,
                         double tol) {
    require_order(beta);
    if (!(alpha > 0)) throw std::invalid_argument("weyl_of_cesaro: requires alpha > 0");

    // terms tau_j = k^{-alpha}(j-n) C_beta f(j); |C_beta f(j)| <= H/(j+1) and
    // |k^{-alpha}(m+1)/k^{-alpha}(m)| = (m-alpha)/(m+1) once m > alpha, so
    // the term ratio is exactly ((j-n-alpha)/(j-n+1)) ((j+1)/(j+2)) with
    // decay exponent alpha + 2.
    const double dn = static_cast<double>(n);
    const PowerLawTail tail({{-dn - alpha, 1.0 - dn}, {1.0, 2.0}});

    const std::size_t m = f.last_index();
    const double h = envelope_coefficient(f, beta, std::max(n, m) + 1);
    std::size_t cap = std::max<std::size_t>(4 * (tail.min_index() + 64), 2 * std::max(n, m) + 64);
    for (;;) {
        const TruncatedSequence cf = cesaro_direct(f, beta, cap);
        const std::vector<cx> kern = kernel_values(cx(-alpha, 0.0), cap + 1 - n);
        KahanC acc;
        for (std::size_t j = n; j <= cap; ++j) {
            acc.add(kern[j - n] * cf(j));
            if (j >= tail.min_index() && j > std::max(m, n + 8) &&
                static_cast<double>(j - n) > alpha + 1.0) {
                const double term_bound =
                    std::abs(kern[j - n]) * h / static_cast<double>(j + 1);
                const double certified = tail.bound(j, term_bound);
                if (certified <= tol) return {acc.value(), certified};
            }
        }
        if (cap >= (1u << 22))
            throw std::runtime_error("weyl_of_cesaro: tail tolerance not reached within budget");
        cap *= 2;
    }
}

ResolventReport resolvent_check_c1(const FiniteSequence& f, double p, std::size_t n_out) {
    ResolventReport rep;
    const double kp = inv_p(p);

    if (p > 1) {
        const TruncatedSequence c1 = cesaro_direct(f, cx(1.0, 0.0), n_out);
        const FiniteSequence cf{std::vector<cx>(c1.values)};
        const FiniteSequence acf = generator_A(cf, p);
        for (std::size_t nn = 0; nn <= n_out; ++nn) {
            const cx resid = (1.0 - kp) * cf(nn) - acf(nn) - f(nn);
            rep.max_err_primal = std::max(rep.max_err_primal, std::abs(resid));
        }
    }
    if (!std::isinf(p)) {
        const FiniteSequence d = cesaro_dual_direct(f, cx(1.0, 0.0));
        const FiniteSequence bd = generator_B(d, p);
        for (std::size_t nn = 0; nn <= d.last_index() + 1; ++nn) {
            const cx resid = kp * d(nn) - bd(nn) - f(nn);
            rep.max_err_dual = std::max(rep.max_err_dual, std::abs(resid));
        }
    }
    return rep;
}

C1SquaredWitness witness_c1sq_neq_c2(cx lambda, std::size_t n_max) {
    if (!(std::abs(lambda) > 1.0))
        throw std::invalid_argument("witness_c1sq_neq_c2: requires |lambda| > 1");
    C1SquaredWitness w;
    auto r = [&](std::size_t n) { return std::pow(lambda, -static_cast<double>(n + 1)); };
    const cx lm1 = lambda - 1.0;
    KahanC partial; // sum_{j<=n} (1 - r(j))/(j+1)
    for (std::size_t n = 0; n <= n_max; ++n) {
        partial.add((1.0 - r(n)) / static_cast<double>(n + 1));
        const cx c1sq = partial.value() / (static_cast<double>(n + 1) * lm1);
        const cx c2 = 2.0 *
                      (static_cast<double>(n + 1) * lm1 - 1.0 + r(n)) /
                      (static_cast<double>(n + 1) * static_cast<double>(n + 2) * lm1 * lm1);
        const double gap = std::abs(c1sq - c2);
        w.gaps.push_back(gap);
        if (gap > w.max_gap) {
            w.max_gap = gap;
            w.argmax = n;
        }
    }
    return w;
}

UnboundednessReport unboundedness_witnesses(double beta, std::span<const std::size_t> lengths) {
    if (!(beta > 0)) throw std::invalid_argument("unboundedness_witnesses: requires beta > 0");
    UnboundednessReport rep;
    const std::size_t n_max = *std::max_element(lengths.begin(), lengths.end());

    // Primal witness: f(n) = k^{-beta}(n+1); C_beta f(n) = -beta/(n+1).
    const std::vector<cx> km = kernel_values(cx(-beta, 0.0), n_max + 2);
    std::vector<cx> fv(n_max + 1);
    for (std::size_t i = 0; i <= n_max; ++i) fv[i] = km[i + 1];
    const TruncatedSequence cf = cesaro_direct(FiniteSequence(std::move(fv)), cx(beta, 0.0), n_max);

    // Dual witness: partial sums of C*_beta(1)(0) = sum_j k^beta(j)/k^{beta+1}(j).
    const std::vector<cx> kb = kernel_values(cx(beta, 0.0), n_max + 1);
    const std::vector<cx> kb1 = kernel_values(cx(beta + 1.0, 0.0), n_max + 1);

    Kahan primal, dual;
    std::size_t next = 0;
    std::vector<std::size_t> sorted(lengths.begin(), lengths.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t n = 0; n <= n_max; ++n) {
        primal.add(std::abs(cf(n)));
        dual.add((kb[n] / kb1[n]).real());
        while (next < sorted.size() && sorted[next] == n) {
            rep.lengths.push_back(n);
            rep.primal_partial_norms.push_back(primal.value());
            rep.dual_partial_sums.push_back(dual.value());
            ++next;
        }
    }
    return rep;
}

} // namespace cesarolab
