#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "cesarolab/sequence.hpp"
#include "cesarolab/weyl.hpp"

namespace cesarolab {

/// Extended-real reciprocal: 1/p with 1/inf = 0, so p = infinity needs no
/// separate code path anywhere.
inline double inv_p(double p) { return std::isinf(p) ? 0.0 : 1.0 / p; }

/// Weighted sequence-space parameters: order alpha >= 0 and exponent
/// p in [1, inf]. alpha = 0 gives the plain l^p norm.
struct SpaceParams {
    double alpha = 0;
    double p = 2;
};

void validate(const SpaceParams& sp);

struct NormResult {
    double value = 0;
    double tail_bound = 0;     // 0 whenever the input had finite support
    bool exact = true;
    std::size_t truncation = 0; // meaningful only when !exact
};

/// ||f||_{alpha,p} = lp norm of n -> k^{alpha+1}(n) W^alpha f(n); sup form
/// for p = inf. Exact for finitely supported input.
NormResult norm(const FiniteSequence& f, const SpaceParams& sp);

/// The isometry D^alpha f(n) = k^{alpha+1}(n) W^alpha f(n).
FiniteSequence d_alpha(const FiniteSequence& f, double alpha);

/// Its inverse (D^alpha)^{-1} f = W^{-alpha}((k^{alpha+1})^{-1} f).
FiniteSequence d_alpha_inv(const FiniteSequence& f, double alpha);

/// Bilinear duality pairing (no conjugation, exactly as the weighted-space
/// duality is written):
///   <f,g>_alpha = sum_n W^alpha f(n) W^alpha g(n) (k^{alpha+1}(n))^2.
cx pairing(const FiniteSequence& f, const FiniteSequence& g, double alpha);

struct MembershipReport {
    bool member = false;
    std::string criterion;
    double bound_value = 0; // norm-bound formula value for geometric sequences
};

/// Closed-form membership tests:
///   k^beta:      member of the (alpha,p) space iff Re beta < 1 - 1/p for
///                1 < p < inf; for p = 1 iff Re beta < 0 or beta = 0; for
///                p = inf iff Re beta <= 1.
///   r_lambda:    member for every alpha >= 0 and p when |lambda| > 1, with
///                the explicit norm-bound value reported.
///   constants:   c k^1, so member exactly when k^1 is.
MembershipReport membership(const AnalyticSequence& seq, const SpaceParams& sp);

struct GrowthTable {
    std::vector<std::size_t> lengths;
    std::vector<double> partial_norms;
    double loglog_slope = 0; // fitted over the last two grid points
    bool saturating = false;
};

/// Partial norms of truncations; the growth/saturation trend corroborates
/// the closed-form membership decision. Report only, nothing certified.
GrowthTable empirical_membership(const AnalyticSequence& seq, const SpaceParams& sp,
                                 std::span<const std::size_t> n_grid);

/// ||f*g||_{alpha,p} / (||f||_{alpha,p} ||g||_{alpha,1}): the empirical
/// module constant. Finiteness and stability are what callers check.
double convolution_module_check(const FiniteSequence& f, const FiniteSequence& g,
                                const SpaceParams& sp);

} // namespace cesarolab
