#pragma once

#include <cstddef>

#include "cesarolab/sequence.hpp"
#include "cesarolab/verification.hpp"

namespace cesarolab {

/// Closed-form sequence family: a Cesaro kernel k^beta, a geometric
/// eigen-sequence r_lambda(n) = lambda^{-(n+1)} with |lambda| > 1, or a
/// constant. Each kind can produce values on demand and knows its exact
/// image under integer/fractional differences where a closed form exists.
class AnalyticSequence {
public:
    enum class Kind { cesaro_kernel, geometric, constant };

    static AnalyticSequence cesaro_kernel(cx beta);
    static AnalyticSequence geometric(cx lambda); // requires |lambda| > 1
    static AnalyticSequence constant(cx c);

    Kind kind() const { return kind_; }
    cx parameter() const { return param_; }

    cx value(std::size_t n) const;
    FiniteSequence truncate(std::size_t last) const;

private:
    AnalyticSequence(Kind k, cx p) : kind_(k), param_(p) {}
    Kind kind_;
    cx param_;
};

/// W^order on finitely supported sequences:
///     (W^order f)(n) = sum_{j>=n} k^{-order}(j-n) f(j).
/// order > 0 is the fractional difference, order < 0 the fractional sum,
/// order = 0 the identity. Exact: output support stays inside the input's.
FiniteSequence weyl_apply(const FiniteSequence& f, double order);

/// Weyl sum W^{-alpha}, alpha > 0.
FiniteSequence weyl_sum(const FiniteSequence& f, double alpha);

/// Weyl difference W^alpha, alpha > 0, via the single-kernel form.
FiniteSequence weyl_diff(const FiniteSequence& f, double alpha);

/// The definitional route W^m W^{-(m-alpha)} with m = floor(alpha)+1; kept
/// separate so the two routes can cross-validate each other.
FiniteSequence weyl_diff_composed(const FiniteSequence& f, double alpha);

/// Exact Weyl image of an analytic family, first last+1 values:
///   geometric:      W^order r_lambda = ((lambda-1)/lambda)^order r_lambda
///   cesaro kernel:  W^m k^beta(n) = (-1)^m k^{beta-m}(n+m), integer m >= 0
///   constant:       unchanged for order 0, zero for integer order >= 1
/// Combinations without a closed form throw std::invalid_argument.
FiniteSequence weyl_closed_form(const AnalyticSequence& g, double order, std::size_t last);

/// Checks W^alpha(j f(j))(n) = (n+alpha) W^alpha f(n) - alpha W^{alpha-1} f(n)
/// over the support; any real alpha.
VerificationReport leibniz_check(const FiniteSequence& f, double alpha);

} // namespace cesarolab
