#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "cesarolab/verification.hpp"

namespace cesarolab {

/// Infinite sum  sum_l Gamma(l-alpha)/Gamma(l+1) * Gamma(u+l+1)/Gamma(v+u+l+1)
/// against its closed form Gamma(u+1)Gamma(v+alpha)Gamma(-alpha) /
/// (Gamma(v)Gamma(u+alpha+v+1)). Terms decay like l^{-(v+alpha+1)}; the sum
/// stops once an integral-comparison tail certificate drops below
/// tol * |rhs| (or max_terms runs out, in which case the report simply
/// carries the larger certified tail).
VerificationReport verify_fits(double alpha, double u, double v, double tol,
                               std::size_t max_terms = 400000);

/// Finite sum  sum_{l<=m} (alpha r + l(v+alpha)) G(l-a)G(l+r)/(G(l+1)G(v+1+l+r))
/// against -Gamma(m+1+r)Gamma(m+1-alpha)/(Gamma(m+1)Gamma(v+m+r+1)).
VerificationReport verify_key(double alpha, double v, double r, std::size_t m);

/// The two m-term partial-sum expressions G_{m,r}(v) and F_{m,r}(v) built from
/// Gamma quotients; equal for all v,r > 0, non-integer alpha > 0, m >= 0.
VerificationReport verify_funda(double alpha, double v, double r, std::size_t m);

/// The two closed-form partial sums (the r=1 and r=2 instances):
///   sum_{l<=m} Gamma(l-alpha)/Gamma(v+l+1)        and
///   sum_{l<=m} (l+1) Gamma(l-alpha)/Gamma(v+l+2).
std::pair<VerificationReport, VerificationReport> verify_special_cases(double alpha, double v,
                                                                       std::size_t m);

/// Binomial-kernel resummation identity: for |1 - e^{-t}| < 1 (or t = 0),
///   e^{-tu} sum_{j>=max(u,n)} C(j,u) k^{-alpha}(j-n) (1-e^{-t})^{j-u}
/// = e^{-t alpha} sum_{j<=min(u,n)} C(n,j) k^{-alpha}(u-j) e^{-tj} (1-e^{-t})^{n-j}.
/// The left side is truncated under a geometric-ratio tail certificate.
VerificationReport verify_llave(double alpha, cx t, std::size_t n, std::size_t u, double tol);

/// Empirical constant for the kernel-quotient estimate
///   sum_{l>n} (k^a(l-n+j)/k^{a+1}(l))^q  <=  C_{a,q} j (k^a(j)/k^{a+1}(n))^q :
/// returns the sup of lhs/rhs over the grid (j > n pairs only).
double check_lemma22_ratio(double alpha, double q, std::span<const std::size_t> n_grid,
                           std::span<const std::size_t> j_grid);

struct PrSample {
    std::size_t m;
    double value;
};

struct PrExploration {
    int r;
    std::vector<PrSample> samples;       // solved P_r(alpha, m, v) per m
    std::vector<double> poly_coeffs;     // least-squares fit in m, degree r-1
    double fit_residual;                 // max |sample - fit| / max |sample|
};

/// Solves the conjectured closed form for P_r(alpha, m, v) on an m-grid and
/// fits a degree r-1 polynomial in m. Exploratory: nothing is asserted here.
PrExploration explore_pr_conjecture(double alpha, double v, int r,
                                    std::span<const std::size_t> m_grid);

} // namespace cesarolab
