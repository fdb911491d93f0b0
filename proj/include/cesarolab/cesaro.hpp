#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cesarolab/semigroups.hpp"
#include "cesarolab/sequence.hpp"

namespace cesarolab {

/// C_beta f(n) = (1/k^{beta+1}(n)) sum_{j<=n} k^beta(n-j) f(j); Re beta > 0.
/// Entries are exact; the attached envelope decays like 1/n.
TruncatedSequence cesaro_direct(const FiniteSequence& f, cx beta, std::size_t n_out);

/// C*_beta f(n) = sum_{j>=n} k^beta(j-n) f(j) / k^{beta+1}(j); exact, support
/// preserved.
FiniteSequence cesaro_dual_direct(const FiniteSequence& f, cx beta);

/// One entry of C_beta f (dual = false) or C*_beta f (dual = true) through
/// the semigroup subordination integral
///   beta * integral_0^inf (1-e^{-t})^{beta-1} e^{-t(1-1/p)} T_p(t) f(n) dt
/// (S_p and weight e^{-t/p} for the dual), evaluated after u = 1 - e^{-t}
/// by adaptive quadrature to tol. p only enters through weights that cancel;
/// it is accepted so the two-p cross-check can observe the cancellation.
cx cesaro_via_subordination(const FiniteSequence& f, cx beta, double p, std::size_t n,
                            double tol, bool dual = false);

/// The classical inequality constants:
///   primal Gamma(beta)Gamma(1-1/p)/Gamma(beta+1-1/p),
///   dual   Gamma(beta)Gamma(1/p)/Gamma(beta+1/p).
double hardy_constant(double beta, double p, bool dual);

/// Operator norm bounds |beta| Gamma(Re beta) Gamma(1 -/+ 1/p) /
/// Gamma(Re beta + 1 -/+ 1/p) from the subordination route.
double operator_norm_bound(cx beta, double p, bool dual);

/// W^alpha(C_beta f)(n) = sum_{j>=n} k^{-alpha}(j-n) C_beta f(j), truncated
/// under a certified power-law tail; needed for weighted pairings against
/// operator outputs. Returns value and the certified tail bound.
struct TailValue {
    cx value{};
    double tail_bound = 0;
};
TailValue weyl_of_cesaro(const FiniteSequence& f, cx beta, double alpha, std::size_t n,
                         double tol);

struct ResolventReport {
    double max_err_primal = 0; // ((1-1/p) - A) C_1 f = f on 0..n_out
    double max_err_dual = 0;   // ((1/p) - B) C*_1 f = f everywhere
};
ResolventReport resolvent_check_c1(const FiniteSequence& f, double p, std::size_t n_out);

/// Closed-form scan showing C_1^2 r_lambda != C_2 r_lambda: the gap is zero
/// at n = 0 for every lambda, so indices 0..n_max are scanned.
struct C1SquaredWitness {
    std::vector<double> gaps; // |C_1^2 r_lambda(n) - C_2 r_lambda(n)|
    double max_gap = 0;
    std::size_t argmax = 0;
};
C1SquaredWitness witness_c1sq_neq_c2(cx lambda, std::size_t n_max = 8);

/// Divergence witnesses: the l^1 partial norms of C_beta(k^{-beta}(.+1)) and
/// the partial sums of C*_beta(1)(0) both grow harmonically.
struct UnboundednessReport {
    std::vector<std::size_t> lengths;
    std::vector<double> primal_partial_norms;
    std::vector<double> dual_partial_sums;
};
UnboundednessReport unboundedness_witnesses(double beta, std::span<const std::size_t> lengths);

} // namespace cesarolab
