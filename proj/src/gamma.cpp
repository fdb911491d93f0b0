#include "cesarolab/gamma.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "cesarolab/series.hpp"

namespace cesarolab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfLog2Pi = 0.918938533204672741780329736406; // ln(2*pi)/2

// Lanczos g = 607/128, 15 terms (Godfrey's coefficients); relative error
// around 1e-15 on Re z >= 1/2.
constexpr double kLanczosG = 4.7421875;
constexpr double kLanczosCoeff[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

cx lanczos_log_gamma(cx z) { // Re z >= 1/2
    cx sum = kLanczosCoeff[0];
    for (int k = 1; k < 15; ++k) sum += kLanczosCoeff[k] / (z + static_cast<double>(k - 1));
    const cx base = z + (kLanczosG - 0.5);
    return kHalfLog2Pi + (z - 0.5) * std::log(base) - base + std::log(sum);
}

double lanczos_log_gamma(double x) { // x >= 1/2
    double sum = kLanczosCoeff[0];
    for (int k = 1; k < 15; ++k) sum += kLanczosCoeff[k] / (x + static_cast<double>(k - 1));
    const double base = x + (kLanczosG - 0.5);
    return kHalfLog2Pi + (x - 0.5) * std::log(base) - base + std::log(sum);
}

// Branch-continuous log(sin(pi z)). Writing
//   sin(pi z) = e^{-i pi z} (1 - e^{2 i pi z}) (i/2),
// the middle factor stays in the right half-disc around 1 for Im z > 0, so
// its principal log is continuous there; Im z < 0 follows by conjugation.
cx log_sin_pi(cx z) {
    if (z.imag() < 0) return std::conj(log_sin_pi(std::conj(z)));
    const cx w = std::exp(cx(0.0, 2.0 * kPi) * z);
    return cx(0.0, -kPi) * z + std::log(1.0 - w) + cx(-std::log(2.0), kPi / 2.0);
}

} // namespace

bool is_nonpositive_integer(cx z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::nearbyint(z.real());
}

cx log_gamma(cx z) {
    if (is_nonpositive_integer(z)) throw std::domain_error("log_gamma: pole at nonpositive integer");
    if (z.real() >= 0.5) return lanczos_log_gamma(z);
    return std::log(kPi) - log_sin_pi(z) - lanczos_log_gamma(1.0 - z);
}

double log_gamma_pos(double x) {
    if (!(x > 0)) throw std::domain_error("log_gamma_pos: argument must be positive");
    if (x >= 0.5) return lanczos_log_gamma(x);
    return lanczos_log_gamma(x + 1.0) - std::log(x);
}

double gamma_real(double x) {
    if (is_nonpositive_integer(cx(x, 0.0))) throw std::domain_error("gamma_real: pole at nonpositive integer");
    if (x >= 0.5) return std::exp(lanczos_log_gamma(x));
    // Reflection keeps the sign exact through sin(pi x).
    return kPi / (std::sin(kPi * x) * std::exp(lanczos_log_gamma(1.0 - x)));
}

double real_gamma_ratio(double x, double y) {
    return std::exp(log_gamma_pos(x) - log_gamma_pos(y));
}

GammaRatio gamma_ratio(cx a, cx b) {
    GammaRatio r{a, b, cx{}, cx{}};
    const bool pole_a = is_nonpositive_integer(a);
    const bool pole_b = is_nonpositive_integer(b);
    if (pole_a && pole_b) throw std::domain_error("gamma_ratio: both arguments are poles");
    if (pole_a) throw std::domain_error("gamma_ratio: pole in the numerator");
    if (a == b) {
        r.value = 1.0;
        r.log_value = 0.0;
        return r;
    }
    if (pole_b) {
        // Gamma blows up in the denominator; the ratio is exactly zero.
        r.value = 0.0;
        r.log_value = cx(-std::numeric_limits<double>::infinity(), 0.0);
        return r;
    }
    r.log_value = log_gamma(a) - log_gamma(b);
    r.value = std::exp(r.log_value);
    return r;
}

cx beta_function(cx u, cx v) {
    if (!(u.real() > 0) || !(v.real() > 0))
        throw std::domain_error("beta_function: requires Re u > 0 and Re v > 0");
    return std::exp(log_gamma(u) + log_gamma(v) - log_gamma(u + v));
}

cx ScaledComplex::value() const {
    const int e = static_cast<int>(exponent2);
    return {std::ldexp(mantissa.real(), e), std::ldexp(mantissa.imag(), e)};
}

double ScaledComplex::abs() const {
    return std::ldexp(std::abs(mantissa), static_cast<int>(exponent2));
}

double ScaledComplex::log_abs() const {
    const double m = std::abs(mantissa);
    if (m == 0) return -std::numeric_limits<double>::infinity();
    return std::log(m) + static_cast<double>(exponent2) * std::numbers::ln2;
}

KernelTable::KernelTable(cx alpha, std::size_t last) : alpha_(alpha) {
    mant_.reserve(last + 1);
    exp2_.reserve(last + 1);
    const bool truncates = is_nonpositive_integer(alpha);
    const double cutoff_order = truncates ? -alpha.real() : 0.0;

    cx m = 1.0;
    long e = 0;
    mant_.push_back(m);
    exp2_.push_back(e);
    for (std::size_t n = 1; n <= last; ++n) {
        if (truncates && static_cast<double>(n) > cutoff_order) {
            // Negative-integer orders truncate exactly; never trust rounding here.
            m = 0.0;
            e = 0;
        } else {
            m *= (alpha + static_cast<double>(n - 1)) / static_cast<double>(n);
            const double mag = std::max(std::fabs(m.real()), std::fabs(m.imag()));
            if (mag != 0.0) {
                int ex = 0;
                std::frexp(mag, &ex);
                if (ex > 512 || ex < -512) {
                    m = {std::ldexp(m.real(), -ex), std::ldexp(m.imag(), -ex)};
                    e += ex;
                    scaled_ = true;
                }
            }
        }
        mant_.push_back(m);
        exp2_.push_back(e);
    }
}

cx KernelTable::value(std::size_t n) const { return ScaledComplex{mant_[n], exp2_[n]}.value(); }
double KernelTable::abs(std::size_t n) const { return ScaledComplex{mant_[n], exp2_[n]}.abs(); }
double KernelTable::log_abs(std::size_t n) const { return ScaledComplex{mant_[n], exp2_[n]}.log_abs(); }

KernelTable cesaro_kernel(cx alpha, std::size_t last) { return KernelTable(alpha, last); }

std::vector<cx> kernel_values(cx alpha, std::size_t count) {
    std::vector<cx> v(count);
    if (count == 0) return v;
    v[0] = 1.0;
    const bool truncates = is_nonpositive_integer(alpha);
    const double cutoff_order = truncates ? -alpha.real() : 0.0;
    for (std::size_t n = 1; n < count; ++n) {
        if (truncates && static_cast<double>(n) > cutoff_order)
            v[n] = 0.0;
        else
            v[n] = v[n - 1] * (alpha + static_cast<double>(n - 1)) / static_cast<double>(n);
    }
    return v;
}

cx kernel_value(cx alpha, std::size_t n) {
    return kernel_values(alpha, n + 1)[n];
}

cx kernel_asymptote(double alpha, std::size_t n) {
    if (is_nonpositive_integer(cx(alpha, 0.0)))
        throw std::domain_error("kernel_asymptote: pole at nonpositive integer order");
    if (n == 0) throw std::domain_error("kernel_asymptote: requires n >= 1");
    return cx(std::pow(static_cast<double>(n), alpha - 1.0) / gamma_real(alpha), 0.0);
}

FiniteSequence convolve(const FiniteSequence& f, const FiniteSequence& g) {
    const std::size_t nf = f.size(), ng = g.size();
    std::vector<cx> out(nf + ng - 1, cx{});
    for (std::size_t n = 0; n < out.size(); ++n) {
        KahanC acc;
        const std::size_t j_lo = n >= nf ? n - nf + 1 : 0;
        const std::size_t j_hi = std::min(n, ng - 1);
        for (std::size_t j = j_lo; j <= j_hi; ++j) acc.add(f(n - j) * g(j));
        out[n] = acc.value();
    }
    return FiniteSequence(std::move(out));
}

} // namespace cesarolab
