#include "cesarolab/identities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "cesarolab/gamma.hpp"
#include "cesarolab/series.hpp"

namespace cesarolab {

namespace {

void require_fractional_positive(double alpha, const char* who) {
    if (is_nonpositive_integer(cx(-alpha, 0.0)) || alpha <= 0)
        throw std::domain_error(std::string(who) + ": alpha must be positive and non-integer");
}

double binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0.0;
    k = std::min(k, n - k);
    double c = 1.0;
    for (std::size_t i = 1; i <= k; ++i)
        c *= static_cast<double>(n - k + i) / static_cast<double>(i);
    return c;
}

} // namespace

VerificationReport verify_fits(double alpha, double u, double v, double tol,
                               std::size_t max_terms) {
    require_fractional_positive(alpha, "verify_fits");
    if (!(u > 0) || !(v > 0)) throw std::domain_error("verify_fits: requires u, v > 0");
    if (!(v + alpha > 0))
        throw std::domain_error("verify_fits: series does not converge (v + alpha <= 0)");

    const double rhs = gamma_real(-alpha) * real_gamma_ratio(u + 1.0, v) *
                       real_gamma_ratio(v + alpha, u + alpha + v + 1.0);
    // real_gamma_ratio(u+1, v) * real_gamma_ratio(v+alpha, u+alpha+v+1)
    //   = Gamma(u+1)Gamma(v+alpha) / (Gamma(v)Gamma(u+alpha+v+1))

    // term(l) = Gamma(l-alpha)/Gamma(l+1) * Gamma(u+l+1)/Gamma(v+u+l+1)
    // term(l+1)/term(l) = (l-alpha)(u+l+1) / ((l+1)(u+v+l+1))
    const PowerLawTail tail({{-alpha, 1.0}, {u + 1.0, u + v + 1.0}});

    double term = gamma_real(-alpha) * real_gamma_ratio(u + 1.0, v + u + 1.0);
    Kahan sum;
    sum.add(term);
    std::size_t l = 0;
    double tail_bound = 0;
    const double target = tol * std::max(std::abs(rhs), 1e-300);
    while (true) {
        if (l >= tail.min_index()) {
            tail_bound = tail.bound(l, std::abs(term));
            if (tail_bound <= target) break;
        }
        if (l + 1 >= max_terms) {
            tail_bound = l >= tail.min_index() ? tail.bound(l, std::abs(term))
                                               : std::numeric_limits<double>::infinity();
            break;
        }
        const double dl = static_cast<double>(l);
        term *= (dl - alpha) * (u + dl + 1.0) / ((dl + 1.0) * (u + v + dl + 1.0));
        sum.add(term);
        ++l;
    }

    return make_report("fits", sum.value(), rhs, l + 1, tail_bound,
                       {{"alpha", alpha}, {"u", u}, {"v", v}, {"tol", tol}});
}

VerificationReport verify_key(double alpha, double v, double r, std::size_t m) {
    require_fractional_positive(alpha, "verify_key");
    if (!(v > 0) || !(r > 0)) throw std::domain_error("verify_key: requires v, r > 0");

    // quotient(l) = Gamma(l-alpha)Gamma(l+r) / (Gamma(l+1)Gamma(v+1+l+r))
    double quotient = gamma_real(-alpha) * real_gamma_ratio(r, v + 1.0 + r);
    Kahan sum;
    double scale = 0;
    for (std::size_t l = 0;; ++l) {
        const double dl = static_cast<double>(l);
        const double term = (alpha * r + dl * (v + alpha)) * quotient;
        sum.add(term);
        scale = std::max(scale, std::abs(term));
        if (l == m) break;
        quotient *= (dl - alpha) * (dl + r) / ((dl + 1.0) * (v + 1.0 + dl + r));
    }

    const double dm = static_cast<double>(m);
    const double rhs = -real_gamma_ratio(dm + 1.0 + r, dm + 1.0) * gamma_real(dm + 1.0 - alpha) /
                       std::exp(log_gamma_pos(v + dm + r + 1.0));

    return make_report("key", sum.value(), rhs, m + 1, 0.0,
                       {{"alpha", alpha}, {"v", v}, {"r", r}, {"m", dm}}, scale);
}

VerificationReport verify_funda(double alpha, double v, double r, std::size_t m) {
    require_fractional_positive(alpha, "verify_funda");
    if (!(v > 0) || !(r > 0)) throw std::domain_error("verify_funda: requires v, r > 0");
    const double dm = static_cast<double>(m);

    // G side: prefactor Gamma(m+r+1)/Gamma(v+m+r), terms
    // Gamma(l-alpha)/Gamma(l+1) * Gamma(v+alpha+r+m-l)/Gamma(r+1+m-l).
    const double g_pref = real_gamma_ratio(dm + r + 1.0, v + dm + r);
    double g_term = gamma_real(-alpha) * real_gamma_ratio(v + alpha + r + dm, r + 1.0 + dm);
    Kahan g_sum;
    double scale = 0;
    for (std::size_t l = 0;; ++l) {
        g_sum.add(g_term);
        scale = std::max(scale, std::abs(g_pref * g_term));
        if (l == m) break;
        const double dl = static_cast<double>(l);
        g_term *= (dl - alpha) * (r + dm - dl) / ((dl + 1.0) * (v + alpha + r + dm - dl - 1.0));
    }

    // F side: prefactor Gamma(alpha+r+v)/Gamma(r), terms
    // Gamma(l-alpha)/Gamma(l+1) * Gamma(l+r)/Gamma(v+l+r).
    const double f_pref = real_gamma_ratio(alpha + r + v, r);
    double f_term = gamma_real(-alpha) * real_gamma_ratio(r, v + r);
    Kahan f_sum;
    for (std::size_t l = 0;; ++l) {
        f_sum.add(f_term);
        scale = std::max(scale, std::abs(f_pref * f_term));
        if (l == m) break;
        const double dl = static_cast<double>(l);
        f_term *= (dl - alpha) * (dl + r) / ((dl + 1.0) * (v + dl + r));
    }

    return make_report("funda", g_pref * g_sum.value(), f_pref * f_sum.value(), 2 * (m + 1), 0.0,
                       {{"alpha", alpha}, {"v", v}, {"r", r}, {"m", dm}}, scale);
}

std::pair<VerificationReport, VerificationReport> verify_special_cases(double alpha, double v,
                                                                       std::size_t m) {
    require_fractional_positive(alpha, "verify_special_cases");
    if (!(v > 0)) throw std::domain_error("verify_special_cases: requires v > 0");
    const double dm = static_cast<double>(m);
    const double gamma_neg_alpha = gamma_real(-alpha);
    const double gamma_tail = gamma_real(dm + 1.0 - alpha);

    // sum_{l<=m} Gamma(l-alpha)/Gamma(v+l+1)
    double term1 = gamma_neg_alpha / std::exp(log_gamma_pos(v + 1.0));
    Kahan s1;
    double scale1 = 0;
    for (std::size_t l = 0;; ++l) {
        s1.add(term1);
        scale1 = std::max(scale1, std::abs(term1));
        if (l == m) break;
        const double dl = static_cast<double>(l);
        term1 *= (dl - alpha) / (v + dl + 1.0);
    }
    const double rhs1 = gamma_neg_alpha / ((alpha + v) * std::exp(log_gamma_pos(v))) -
                        gamma_tail / ((alpha + v) * std::exp(log_gamma_pos(v + dm + 1.0)));

    // sum_{l<=m} (l+1) Gamma(l-alpha)/Gamma(v+l+2)
    double quotient2 = gamma_neg_alpha / std::exp(log_gamma_pos(v + 2.0));
    Kahan s2;
    double scale2 = 0;
    for (std::size_t l = 0;; ++l) {
        const double dl = static_cast<double>(l);
        const double term2 = (dl + 1.0) * quotient2;
        s2.add(term2);
        scale2 = std::max(scale2, std::abs(term2));
        if (l == m) break;
        quotient2 *= (dl - alpha) / (v + dl + 2.0);
    }
    const double denom = (alpha + v + 1.0) * (alpha + v);
    const double rhs2 = gamma_neg_alpha / (denom * std::exp(log_gamma_pos(v))) -
                        (alpha * dm + dm * v + alpha + dm + 2.0 * v + 1.0) * gamma_tail /
                            (denom * std::exp(log_gamma_pos(v + dm + 2.0)));

    auto first = make_report("special1", s1.value(), rhs1, m + 1, 0.0,
                             {{"alpha", alpha}, {"v", v}, {"m", dm}}, scale1);
    auto second = make_report("special2", s2.value(), rhs2, m + 1, 0.0,
                              {{"alpha", alpha}, {"v", v}, {"m", dm}}, scale2);
    return {first, second};
}

VerificationReport verify_llave(double alpha, cx t, std::size_t n, std::size_t u, double tol) {
    require_fractional_positive(alpha, "verify_llave");
    const cx q = t.imag() == 0.0 ? cx(-std::expm1(-t.real()), 0.0) : 1.0 - std::exp(-t);
    const double aq = std::abs(q);
    if (t != cx{} && !(aq < 1.0))
        throw std::domain_error("verify_llave: |1 - e^{-t}| must be < 1 (or t = 0)");

    const std::size_t kmax = std::max(n, u) + 4;
    const std::vector<cx> kern = kernel_values(cx(-alpha, 0.0), 4096 + kmax);

    std::vector<std::pair<std::string, cx>> params{
        {"alpha", alpha}, {"t", t}, {"n", static_cast<double>(n)}, {"u", static_cast<double>(u)}};

    if (t == cx{}) {
        const cx both = u >= n ? kern[u - n] : cx{};
        return make_report("llave", both, both, 1, 0.0, std::move(params));
    }

    // Right side: finite sum.
    KahanC rhs_sum;
    double scale = 0;
    for (std::size_t j = 0; j <= std::min(u, n); ++j) {
        const cx term = binomial(n, j) * kern[u - j] * std::exp(-t * static_cast<double>(j)) *
                        std::pow(q, static_cast<double>(n - j));
        rhs_sum.add(term);
        scale = std::max(scale, std::abs(term));
    }
    const cx rhs = std::exp(-t * alpha) * rhs_sum.value();
    const double target = tol * std::max({std::abs(rhs), scale, 1e-300});

    // Left side: the term ratio tends to |q| < 1; certify a geometric tail
    // once (j+1)/(j+1-u) * |j-n-alpha|/(j-n+1) * |q| stays below rho.
    const double rho = 0.5 * (1.0 + aq);
    const cx pref = std::exp(-t * static_cast<double>(u));
    KahanC lhs_sum;
    double tail_bound = 0;
    std::size_t terms = 0;
    const std::size_t j_start = std::max(u, n);
    const std::size_t j_cap = j_start + 4000;
    for (std::size_t j = j_start;; ++j) {
        const cx term = binomial(j, u) * kern[j - n] * std::pow(q, static_cast<double>(j - u));
        lhs_sum.add(term);
        ++terms;
        // Majorant for every later ratio: the binomial factor decreases to 1
        // and the kernel factor is capped by max(1, current value).
        const double dj = static_cast<double>(j);
        const double dn = static_cast<double>(n);
        const double binom_factor = (dj + 1.0) / (dj + 1.0 - static_cast<double>(u));
        const double kern_factor = std::max(1.0, (dj - dn + alpha) / (dj - dn + 1.0));
        const bool ratio_certified =
            dj - dn > alpha && binom_factor * kern_factor * aq <= rho;
        if (ratio_certified) {
            tail_bound = std::abs(pref) * geometric_tail(std::abs(term), rho);
            if (tail_bound <= target) break;
        }
        if (j >= j_cap) break;
    }

    return make_report("llave", pref * lhs_sum.value(), rhs, terms, tail_bound, std::move(params),
                       scale);
}

double check_lemma22_ratio(double alpha, double q, std::span<const std::size_t> n_grid,
                           std::span<const std::size_t> j_grid) {
    if (!(alpha > 0) || !(q > 1)) throw std::domain_error("check_lemma22_ratio: alpha > 0, q > 1");
    double sup = 0;
    for (std::size_t n : n_grid) {
        for (std::size_t j : j_grid) {
            if (!(j > n)) continue;
            // terms tau_l = (k^alpha(l-n+j)/k^{alpha+1}(l))^q, decay l^{-q}.
            const PowerLawTail tail({{alpha + static_cast<double>(j) - static_cast<double>(n),
                                      1.0 + static_cast<double>(j) - static_cast<double>(n), q},
                                     {1.0, 1.0 + alpha, q}});
            const std::size_t need = 4 * (tail.min_index() + j + 64);
            const std::vector<cx> ka = kernel_values(cx(alpha, 0.0), need + j + 8);
            const std::vector<cx> ka1 = kernel_values(cx(alpha + 1.0, 0.0), need + 8);
            Kahan sum;
            double term = 0;
            std::size_t l = n + 1;
            for (;; ++l) {
                term = std::pow(ka[l - n + j].real() / ka1[l].real(), q);
                sum.add(term);
                if (l >= tail.min_index() && l > n + 8) {
                    if (tail.bound(l, term) <= 1e-13 * sum.value()) break;
                }
                if (l + 8 >= need) break;
            }
            const double tail_rest = tail.bound(l, term);
            const double lhs = sum.value() + tail_rest;
            const double rhs = static_cast<double>(j) *
                               std::pow(kernel_value(cx(alpha, 0.0), j).real() /
                                            kernel_value(cx(alpha + 1.0, 0.0), n).real(),
                                        q);
            sup = std::max(sup, lhs / rhs);
        }
    }
    return sup;
}

PrExploration explore_pr_conjecture(double alpha, double v, int r,
                                    std::span<const std::size_t> m_grid) {
    if (r < 1) throw std::domain_error("explore_pr_conjecture: requires r >= 1");
    require_fractional_positive(alpha, "explore_pr_conjecture");
    const double dr = static_cast<double>(r);

    PrExploration out;
    out.r = r;
    for (std::size_t m : m_grid) {
        // lhs(m) = Gamma(v+alpha+r)/Gamma(r) sum_{l<=m} G(l+r)G(l-alpha)/(G(v+l+r)G(l+1))
        const double pref = real_gamma_ratio(v + alpha + dr, dr);
        double term = gamma_real(-alpha) * real_gamma_ratio(dr, v + dr);
        Kahan sum;
        for (std::size_t l = 0;; ++l) {
            sum.add(term);
            if (l == m) break;
            const double dl = static_cast<double>(l);
            term *= (dl - alpha) * (dl + dr) / ((dl + 1.0) * (v + dl + dr));
        }
        const double lhs = pref * sum.value();
        // Solve  lhs = Gamma(v+alpha) (Gamma(-alpha)/Gamma(v)
        //               - P_r Gamma(m-alpha+1)/Gamma(m+v+r))  for P_r.
        const double dm = static_cast<double>(m);
        const double gva = gamma_real(v + alpha);
        const double p = (gamma_real(-alpha) / std::exp(log_gamma_pos(v)) - lhs / gva) *
                         std::exp(log_gamma_pos(dm + v + dr)) / gamma_real(dm - alpha + 1.0);
        out.samples.push_back({m, p});
    }

    // Least-squares fit of degree r-1 in m (plain normal equations; r <= ~6).
    const int deg = r - 1;
    const int dim = deg + 1;
    std::vector<double> ata(dim * dim, 0.0), atb(dim, 0.0);
    for (const PrSample& s : out.samples) {
        std::vector<double> row(dim);
        row[0] = 1.0;
        for (int k = 1; k < dim; ++k) row[k] = row[k - 1] * static_cast<double>(s.m);
        for (int i = 0; i < dim; ++i) {
            atb[i] += row[i] * s.value;
            for (int j = 0; j < dim; ++j) ata[i * dim + j] += row[i] * row[j];
        }
    }
    // Gaussian elimination with partial pivoting.
    std::vector<double> a(ata);
    std::vector<double> b(atb);
    for (int col = 0; col < dim; ++col) {
        int piv = col;
        for (int row = col + 1; row < dim; ++row)
            if (std::abs(a[row * dim + col]) > std::abs(a[piv * dim + col])) piv = row;
        for (int j = 0; j < dim; ++j) std::swap(a[col * dim + j], a[piv * dim + j]);
        std::swap(b[col], b[piv]);
        const double d = a[col * dim + col];
        for (int row = col + 1; row < dim; ++row) {
            const double fct = a[row * dim + col] / d;
            for (int j = col; j < dim; ++j) a[row * dim + j] -= fct * a[col * dim + j];
            b[row] -= fct * b[col];
        }
    }
    out.poly_coeffs.assign(dim, 0.0);
    for (int row = dim - 1; row >= 0; --row) {
        double s = b[row];
        for (int j = row + 1; j < dim; ++j) s -= a[row * dim + j] * out.poly_coeffs[j];
        out.poly_coeffs[row] = s / a[row * dim + row];
    }

    double max_dev = 0, scale = 1e-300;
    for (const PrSample& s : out.samples) {
        double fit = 0, pw = 1;
        for (int k = 0; k < dim; ++k) {
            fit += out.poly_coeffs[k] * pw;
            pw *= static_cast<double>(s.m);
        }
        max_dev = std::max(max_dev, std::abs(fit - s.value));
        scale = std::max(scale, std::abs(s.value));
    }
    out.fit_residual = max_dev / scale;
    return out;
}

} // namespace cesarolab
