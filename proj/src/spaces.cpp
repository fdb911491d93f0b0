#include "cesarolab/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cesarolab/gamma.hpp"
#include "cesarolab/series.hpp"

namespace cesarolab {

void validate(const SpaceParams& sp) {
    if (!(sp.alpha >= 0)) throw std::invalid_argument("SpaceParams: alpha must be >= 0");
    if (!(sp.p >= 1)) throw std::invalid_argument("SpaceParams: p must lie in [1, inf]");
}

namespace {

double lp_norm(const std::vector<cx>& v, double p) {
    if (std::isinf(p)) {
        double m = 0;
        for (const cx& z : v) m = std::max(m, std::abs(z));
        return m;
    }
    double m = 0;
    for (const cx& z : v) m = std::max(m, std::abs(z));
    if (m == 0) return 0;
    Kahan sum;
    for (const cx& z : v) sum.add(std::pow(std::abs(z) / m, p));
    return m * std::pow(sum.value(), 1.0 / p);
}

} // namespace

NormResult norm(const FiniteSequence& f, const SpaceParams& sp) {
    validate(sp);
    return {lp_norm(d_alpha(f, sp.alpha).values(), sp.p), 0.0, true, 0};
}

FiniteSequence d_alpha(const FiniteSequence& f, double alpha) {
    if (!(alpha >= 0)) throw std::invalid_argument("d_alpha: alpha must be >= 0");
    if (alpha == 0) return f;
    const FiniteSequence wf = weyl_apply(f, alpha);
    const std::vector<cx> kern = kernel_values(cx(alpha + 1.0, 0.0), f.size());
    std::vector<cx> out(f.size());
    for (std::size_t n = 0; n < out.size(); ++n) out[n] = kern[n] * wf(n);
    return FiniteSequence(std::move(out));
}

FiniteSequence d_alpha_inv(const FiniteSequence& f, double alpha) {
    if (!(alpha >= 0)) throw std::invalid_argument("d_alpha_inv: alpha must be >= 0");
    if (alpha == 0) return f;
    const std::vector<cx> kern = kernel_values(cx(alpha + 1.0, 0.0), f.size());
    std::vector<cx> scaled(f.size());
    for (std::size_t n = 0; n < scaled.size(); ++n) scaled[n] = f(n) / kern[n];
    return weyl_apply(FiniteSequence(std::move(scaled)), -alpha);
}

cx pairing(const FiniteSequence& f, const FiniteSequence& g, double alpha) {
    if (!(alpha >= 0)) throw std::invalid_argument("pairing: alpha must be >= 0");
    const std::size_t last = std::max(f.last_index(), g.last_index());
    const FiniteSequence wf = alpha == 0 ? f : weyl_apply(f, alpha);
    const FiniteSequence wg = alpha == 0 ? g : weyl_apply(g, alpha);
    const std::vector<cx> kern = kernel_values(cx(alpha + 1.0, 0.0), last + 1);
    KahanC sum;
    for (std::size_t n = 0; n <= last; ++n) sum.add(wf(n) * wg(n) * kern[n] * kern[n]);
    return sum.value();
}

MembershipReport membership(const AnalyticSequence& seq, const SpaceParams& sp) {
    validate(sp);
    MembershipReport rep;
    switch (seq.kind()) {
        case AnalyticSequence::Kind::cesaro_kernel:
        case AnalyticSequence::Kind::constant: {
            // A nonzero constant c is c * k^1.
            const bool is_const = seq.kind() == AnalyticSequence::Kind::constant;
            if (is_const && seq.parameter() == cx{}) {
                rep.member = true;
                rep.criterion = "zero sequence";
                return rep;
            }
            const cx beta = is_const ? cx(1.0, 0.0) : seq.parameter();
            const double rb = beta.real();
            if (std::isinf(sp.p)) {
                rep.member = rb <= 1.0;
                rep.criterion = "Re beta <= 1 (p = inf)";
            } else if (sp.p == 1.0) {
                rep.member = rb < 0.0 || beta == cx{};
                rep.criterion = "Re beta < 0 or beta = 0 (p = 1)";
            } else {
                rep.member = rb < 1.0 - inv_p(sp.p);
                rep.criterion = "Re beta < 1 - 1/p";
            }
            return rep;
        }
        case AnalyticSequence::Kind::geometric: {
            const cx lambda = seq.parameter();
            const double al = std::abs(lambda);
            rep.member = true;
            rep.criterion = "|lambda| > 1";
            if (std::isinf(sp.p)) {
                // alpha^alpha |lambda-1|^alpha / |lambda|^{2 alpha + 1}
                const double a = sp.alpha;
                const double aa = a == 0 ? 1.0 : std::pow(a, a);
                rep.bound_value =
                    aa * std::pow(std::abs(lambda - 1.0), a) / std::pow(al, 2.0 * a + 1.0);
            } else {
                // (|lambda^p - lambda^{p-1}| / (|lambda|^p - 1))^alpha
                //   * (|lambda|^p - 1)^{-1/p}
                const double num = std::pow(al, sp.p - 1.0) * std::abs(lambda - 1.0);
                const double den = std::pow(al, sp.p) - 1.0;
                rep.bound_value =
                    std::pow(num / den, sp.alpha) * std::pow(den, -1.0 / sp.p);
            }
            return rep;
        }
    }
    throw std::invalid_argument("membership: unsupported sequence kind");
}

GrowthTable empirical_membership(const AnalyticSequence& seq, const SpaceParams& sp,
                                 std::span<const std::size_t> n_grid) {
    validate(sp);
    GrowthTable table;
    for (std::size_t n : n_grid) {
        table.lengths.push_back(n);
        table.partial_norms.push_back(norm(seq.truncate(n), sp).value);
    }
    if (table.lengths.size() >= 2) {
        const std::size_t k = table.lengths.size() - 1;
        const double dn = std::log(static_cast<double>(table.lengths[k])) -
                          std::log(static_cast<double>(table.lengths[k - 1]));
        const double dv = std::log(std::max(table.partial_norms[k], 1e-300)) -
                          std::log(std::max(table.partial_norms[k - 1], 1e-300));
        table.loglog_slope = dv / dn;
        table.saturating = table.loglog_slope < 0.02;
    }
    return table;
}

double convolution_module_check(const FiniteSequence& f, const FiniteSequence& g,
                                const SpaceParams& sp) {
    validate(sp);
    const double num = norm(convolve(f, g), sp).value;
    const double den =
        norm(f, sp).value * norm(g, SpaceParams{sp.alpha, 1.0}).value;
    return num / den;
}

} // namespace cesarolab
