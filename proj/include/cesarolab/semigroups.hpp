#pragma once

#include <cstddef>
#include <variant>

#include "cesarolab/sequence.hpp"
#include "cesarolab/verification.hpp"

namespace cesarolab {

enum class Decay { finite, geometric, polynomial };

/// Values on 0..last_index() plus a certified envelope for the omitted tail:
///   geometric:   |f(n)| <= tail_bound * ratio^(n - last - 1)
///   polynomial:  |f(n)| <= tail_bound * ((last + 2)/(n + 1))^exponent
///   finite:      f(n) = 0 beyond the stored values (tail_bound = 0)
/// for every n > last_index().
struct TruncatedSequence {
    std::vector<cx> values;
    Decay decay = Decay::finite;
    double tail_bound = 0;
    double ratio = 0;    // geometric only
    double exponent = 0; // polynomial only

    cx operator()(std::size_t n) const { return n < values.size() ? values[n] : cx{}; }
    std::size_t last_index() const { return values.size() - 1; }
    double envelope(std::size_t n) const;

    /// sum_{n >= from} envelope(n); geometric and finite decay only.
    double envelope_sum(std::size_t from) const;
};

struct SemigroupParams {
    char kind = 'T'; // 'T' or 'S'
    double t = 0;    // >= 0
    double p = std::numeric_limits<double>::infinity();
};

/// T(t)f(n) = sum_{j<=n} C(n,j) e^{-tj} (1-e^{-t})^{n-j} f(j).
/// Every stored entry is exact (it only needs f(0..n)); the decay class is
/// geometric from the end of f's support onward.
TruncatedSequence apply_T(const FiniteSequence& f, double t, std::size_t n_out);

/// S(t)f(n) = e^{-tn} sum_{j>=n} C(j,n) (1-e^{-t})^{j-n} f(j); finite sums,
/// support preserved, exact.
FiniteSequence apply_S(const FiniteSequence& f, double t);

/// Weighted contractive versions T_p = e^{-t/p} T, S_p = e^{-t(1-1/p)} S.
TruncatedSequence apply_T_weighted(const FiniteSequence& f, double t, double p,
                                   std::size_t n_out);
FiniteSequence apply_S_weighted(const FiniteSequence& f, double t, double p);
std::variant<TruncatedSequence, FiniteSequence> apply_weighted(const FiniteSequence& f,
                                                               const SemigroupParams& params,
                                                               std::size_t n_out);

/// Generators of the weighted semigroups (Delta f(n) = f(n+1) - f(n)):
///   A f(0) = -f(0)/p,  A f(n) = -n Delta f(n-1) - f(n)/p,
///   B f(n) = (n+1) Delta f(n) + f(n)/p.
FiniteSequence generator_A(const FiniteSequence& f, double p);
FiniteSequence generator_B(const FiniteSequence& f, double p);

struct ZValue {
    cx value{};
    double tail_bound = 0;
};

/// sum_n f(n) z^n. For truncated input the decay class must certify
/// convergence (geometric: ratio*|z| < 1; polynomial: |z| < 1), otherwise
/// std::domain_error.
ZValue z_transform(const FiniteSequence& f, cx z);
ZValue z_transform(const TruncatedSequence& f, cx z);

/// Generating-function functional equations under T and S, with
/// psi_t(z) = e^{-t} z / (1 - z(1-e^{-t})) and phi_t(z) = e^{-t}(z-1) + 1.
/// Both candidate right-hand sides for T are evaluated: the bare composition
/// f~(psi_t(z)) and the prefactored (1 - z(1-e^{-t}))^{-1} f~(psi_t(z)).
/// Only the prefactored form matches the transform of T(t)f; the residual of
/// the bare form is reported so callers can see the discrepancy.
struct ZFunctionalReport {
    cx transform_T{}, composed_T{}, composed_T_prefactored{};
    cx transform_S{}, composed_S{};
    double resid_T_bare = 0, resid_T_prefactored = 0, resid_S = 0;
};
ZFunctionalReport z_functional_equations(const FiniteSequence& f, double t, cx z);

struct IntertwineReport {
    double max_abs_err = 0;
    double max_rel_err = 0;
    std::size_t checked = 0;
    double truncation_tail = 0; // certified bound folded into the comparison
};

/// W^alpha T(t) f = e^{-t alpha} T(t) W^alpha f on 0..n_out, the left side
/// truncated under a certified geometric guard band.
IntertwineReport intertwine_T(const FiniteSequence& f, double alpha, double t,
                              std::size_t n_out, double tol = 1e-11);

/// k^{alpha+1} W^alpha S(t) f = S(t)(k^{alpha+1} W^alpha f), plus the
/// binomial form of the same identity; all sums finite and exact.
IntertwineReport intertwine_S(const FiniteSequence& f, double alpha, double t);

/// z = (pi / (2 sin d0)) e^{i d0} lies on every sector boundary and gives
/// |1 - e^{-z}| > 1: the semigroups admit no holomorphic extension.
struct NonholomorphyWitness {
    cx z{};
    double modulus = 0; // |1 - e^{-z}|
    double F_value = 0; // 2 cos(rho sin d0) - e^{-rho cos d0}, negative here
};
NonholomorphyWitness nonholomorphy_witness(double delta0);

} // namespace cesarolab
