#pragma once

#include <cstddef>
#include <vector>

#include "cesarolab/sequence.hpp"

namespace cesarolab {

/// Relative accuracy the Gamma primitives are tested to deliver. Downstream
/// tolerances are budgeted against this contract.
inline constexpr double gamma_accuracy = 1e-12;

bool is_nonpositive_integer(cx z);

/// Branch-continuous log-Gamma: the standard log-Gamma function, continuous
/// on the plane cut along the nonpositive reals (not the principal log of
/// the Gamma value). Lanczos on Re z >= 1/2, reflection elsewhere.
/// Throws std::domain_error at the poles 0, -1, -2, ...
cx log_gamma(cx z);

/// Gamma at a real argument, with sign (reflection for x < 1/2).
double gamma_real(double x);

/// log Gamma(x) for real x > 0.
double log_gamma_pos(double x);

/// Gamma(x)/Gamma(y) for real x, y > 0, computed in log space.
double real_gamma_ratio(double x, double y);

struct GammaRatio {
    cx numerator_arg, denominator_arg;
    cx value;
    cx log_value;
};

/// Gamma(a)/Gamma(b). Exact 1 for a == b; exact 0 when b is a pole and a is
/// not. A pole in the numerator (alone or with one in the denominator) is
/// rejected with std::domain_error.
GammaRatio gamma_ratio(cx a, cx b);

/// Euler Beta, B(u,v) = Gamma(u)Gamma(v)/Gamma(u+v); requires Re u, Re v > 0.
cx beta_function(cx u, cx v);

/// Complex value split as mantissa * 2^exponent2 so that tables can hold
/// magnitudes far outside double range.
struct ScaledComplex {
    cx mantissa;
    long exponent2 = 0;

    cx value() const;
    double abs() const;
    double log_abs() const;
};

enum class KernelScale { direct, log_scaled };

/// Table of Cesaro numbers k^alpha(n) = Gamma(n+alpha)/(Gamma(alpha) n!),
/// built by the multiplicative recurrence
///     k^alpha(0) = 1,   k^alpha(n) = k^alpha(n-1) (n-1+alpha)/n.
/// Storage switches to scaled mantissa/exponent pairs when magnitudes leave
/// the comfortable double range; value(n) then reports +-inf/0 faithfully.
class KernelTable {
public:
    KernelTable(cx alpha, std::size_t last);

    cx order() const { return alpha_; }
    std::size_t last_index() const { return mant_.size() - 1; }
    KernelScale scale() const { return scaled_ ? KernelScale::log_scaled : KernelScale::direct; }

    cx value(std::size_t n) const;
    ScaledComplex at(std::size_t n) const { return {mant_[n], exp2_[n]}; }
    double abs(std::size_t n) const;
    double log_abs(std::size_t n) const;

private:
    cx alpha_;
    std::vector<cx> mant_;
    std::vector<long> exp2_;
    bool scaled_ = false;
};

KernelTable cesaro_kernel(cx alpha, std::size_t last);

/// First `count` kernel values as plain doubles; the convenient form for the
/// operator modules, which stay well inside double range.
std::vector<cx> kernel_values(cx alpha, std::size_t count);
cx kernel_value(cx alpha, std::size_t n);

/// First-order large-n estimate n^{alpha-1}/Gamma(alpha); O(1/n) relative.
cx kernel_asymptote(double alpha, std::size_t n);

/// (f*g)(n) = sum_{j<=n} f(n-j) g(j); support length |f|+|g|-1.
FiniteSequence convolve(const FiniteSequence& f, const FiniteSequence& g);

} // namespace cesarolab
