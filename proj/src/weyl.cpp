#include "cesarolab/weyl.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "cesarolab/gamma.hpp"
#include "cesarolab/series.hpp"

namespace cesarolab {

AnalyticSequence AnalyticSequence::cesaro_kernel(cx beta) {
    return AnalyticSequence(Kind::cesaro_kernel, beta);
}

AnalyticSequence AnalyticSequence::geometric(cx lambda) {
    if (!(std::abs(lambda) > 1.0))
        throw std::invalid_argument("AnalyticSequence::geometric: requires |lambda| > 1");
    return AnalyticSequence(Kind::geometric, lambda);
}

AnalyticSequence AnalyticSequence::constant(cx c) { return AnalyticSequence(Kind::constant, c); }

cx AnalyticSequence::value(std::size_t n) const {
    switch (kind_) {
        case Kind::cesaro_kernel: return kernel_value(param_, n);
        case Kind::geometric: return std::pow(param_, -static_cast<double>(n + 1));
        case Kind::constant: return param_;
    }
    return {};
}

FiniteSequence AnalyticSequence::truncate(std::size_t last) const {
    std::vector<cx> v(last + 1);
    if (kind_ == Kind::cesaro_kernel) {
        v = kernel_values(param_, last + 1);
    } else {
        for (std::size_t n = 0; n <= last; ++n) v[n] = value(n);
    }
    return FiniteSequence(std::move(v));
}

FiniteSequence weyl_apply(const FiniteSequence& f, double order) {
    if (order == 0.0) return f;
    const std::size_t last = f.last_index();

    // Extended precision internally: round trips W^{-a} W^a pass through
    // intermediates orders of magnitude above the input, and the 1e-12
    // contract on the cancellation needs headroom below double rounding.
    using cld = std::complex<long double>;
    std::vector<cld> kern(last + 1);
    kern[0] = 1.0L;
    const long double ord = static_cast<long double>(-order);
    const bool truncates = is_nonpositive_integer(cx(-order, 0.0));
    for (std::size_t n = 1; n <= last; ++n) {
        if (truncates && static_cast<double>(n) > order)
            kern[n] = 0.0L;
        else
            kern[n] = kern[n - 1] * (ord + static_cast<long double>(n - 1)) /
                      static_cast<long double>(n);
    }
    std::vector<cld> fv(last + 1);
    for (std::size_t n = 0; n <= last; ++n)
        fv[n] = cld(f(n).real(), f(n).imag());

    std::vector<cx> out(last + 1);
    for (std::size_t n = 0; n <= last; ++n) {
        cld acc{};
        for (std::size_t j = n; j <= last; ++j) acc += kern[j - n] * fv[j];
        out[n] = cx(static_cast<double>(acc.real()), static_cast<double>(acc.imag()));
    }
    return FiniteSequence(std::move(out));
}

FiniteSequence weyl_sum(const FiniteSequence& f, double alpha) {
    if (!(alpha > 0)) throw std::invalid_argument("weyl_sum: requires alpha > 0");
    return weyl_apply(f, -alpha);
}

FiniteSequence weyl_diff(const FiniteSequence& f, double alpha) {
    if (!(alpha > 0)) throw std::invalid_argument("weyl_diff: requires alpha > 0");
    return weyl_apply(f, alpha);
}

namespace {

// W^1 f(n) = f(n) - f(n+1); support is preserved.
FiniteSequence forward_w(const FiniteSequence& f) {
    std::vector<cx> v(f.size());
    for (std::size_t n = 0; n < v.size(); ++n) v[n] = f(n) - f(n + 1);
    return FiniteSequence(std::move(v));
}

} // namespace

FiniteSequence weyl_diff_composed(const FiniteSequence& f, double alpha) {
    if (!(alpha > 0)) throw std::invalid_argument("weyl_diff_composed: requires alpha > 0");
    const int m = static_cast<int>(std::floor(alpha)) + 1;
    FiniteSequence g = weyl_apply(f, -(static_cast<double>(m) - alpha));
    for (int i = 0; i < m; ++i) g = forward_w(g);
    return g;
}

FiniteSequence weyl_closed_form(const AnalyticSequence& g, double order, std::size_t last) {
    const double rounded = std::nearbyint(order);
    const bool integral = order == rounded;
    switch (g.kind()) {
        case AnalyticSequence::Kind::geometric: {
            const cx lambda = g.parameter();
            const cx factor = std::pow((lambda - 1.0) / lambda, order); // principal branch
            std::vector<cx> v(last + 1);
            for (std::size_t n = 0; n <= last; ++n)
                v[n] = factor * std::pow(lambda, -static_cast<double>(n + 1));
            return FiniteSequence(std::move(v));
        }
        case AnalyticSequence::Kind::cesaro_kernel: {
            if (!integral || rounded < 0)
                throw std::invalid_argument(
                    "weyl_closed_form: kernel images are only known for integer order m >= 0");
            const long m = static_cast<long>(rounded);
            const std::vector<cx> kern =
                kernel_values(g.parameter() - static_cast<double>(m), last + 1 + m);
            const double sign = (m % 2 == 0) ? 1.0 : -1.0;
            std::vector<cx> v(last + 1);
            for (std::size_t n = 0; n <= last; ++n) v[n] = sign * kern[n + m];
            return FiniteSequence(std::move(v));
        }
        case AnalyticSequence::Kind::constant: {
            if (!integral || rounded < 0)
                throw std::invalid_argument(
                    "weyl_closed_form: constant images are only known for integer order m >= 0");
            if (rounded == 0) return g.truncate(last);
            return FiniteSequence::zeros(last);
        }
    }
    throw std::invalid_argument("weyl_closed_form: unsupported kind");
}

VerificationReport leibniz_check(const FiniteSequence& f, double alpha) {
    std::vector<cx> jf(f.size());
    for (std::size_t j = 0; j < f.size(); ++j) jf[j] = static_cast<double>(j) * f(j);
    const FiniteSequence lhs = weyl_apply(FiniteSequence(std::move(jf)), alpha);
    const FiniteSequence wf = weyl_apply(f, alpha);
    const FiniteSequence wf1 = weyl_apply(f, alpha - 1.0);

    double max_abs = 0;
    double scale = 1e-300;
    cx worst_lhs{}, worst_rhs{};
    for (std::size_t n = 0; n <= f.last_index(); ++n) {
        const cx rhs = (static_cast<double>(n) + alpha) * wf(n) - alpha * wf1(n);
        const double d = std::abs(lhs(n) - rhs);
        if (d >= max_abs) {
            max_abs = d;
            worst_lhs = lhs(n);
            worst_rhs = rhs;
        }
        scale = std::max({scale, std::abs(lhs(n)), std::abs(rhs)});
    }
    VerificationReport r = make_report("leibniz", worst_lhs, worst_rhs, f.size(), 0.0,
                                       {{"alpha", alpha}, {"last", static_cast<double>(f.last_index())}});
    r.abs_err = max_abs;
    r.rel_err = max_abs / scale;
    return r;
}

} // namespace cesarolab
