#pragma once

#include <cstddef>
#include <vector>

#include "cesarolab/sequence.hpp"

namespace cesarolab {

/// Neumaier-compensated accumulator; keeps long sums accurate to a few ulp.
class Kahan {
public:
    void add(double x) {
        const double t = s_ + x;
        if (std::abs(s_) >= std::abs(x))
            c_ += (s_ - t) + x;
        else
            c_ += (x - t) + s_;
        s_ = t;
    }
    double value() const { return s_ + c_; }

private:
    double s_ = 0, c_ = 0;
};

class KahanC {
public:
    void add(cx z) {
        re_.add(z.real());
        im_.add(z.imag());
    }
    cx value() const { return {re_.value(), im_.value()}; }

private:
    Kahan re_, im_;
};

/// Certified remainder bounds for series of eventually power-law decay.
///
/// The caller supplies factor pairs so that the successive term ratio is
/// majorised by   |term(j+1)/term(j)| <= prod_k ((j+a_k)/(j+b_k))^{w_k}
/// with total decay s = sum_k w_k (b_k - a_k) > 1.  Once j passes
/// min_index(), the terms are dominated by C (j+c)^{-s~} with
/// s~ = (1+s)/2, which yields an integral-comparison tail bound:
///
///     sum_{l > L} |term(l)| <= |term(L)| (L + c) / (s~ - 1).
class PowerLawTail {
public:
    struct Factor {
        double a, b;
        double w = 1.0; // weight (power) of this factor, > 0
    };

    explicit PowerLawTail(std::vector<Factor> factors);

    double decay() const { return s_; }
    std::size_t min_index() const { return j0_; }

    /// Bound on sum_{l > L} |term(l)|; requires L >= min_index().
    double bound(std::size_t L, double abs_term_L) const;

private:
    double s_ = 0, s_tilde_ = 0, c_ = 0;
    std::size_t j0_ = 0;
};

/// sum_{k >= 1} t * r^k for 0 <= r < 1.
double geometric_tail(double abs_last_term, double ratio);

} // namespace cesarolab
