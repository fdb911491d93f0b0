#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cesarolab/sequence.hpp"

namespace cesarolab {

enum class Side { primal, dual };

/// The half-plane offset a: 1 - 1/p for the primal operator (1 < p <= inf),
/// 1/p for the dual (1 <= p < inf). Invalid pairings throw.
double side_offset(Side side, double p);

/// Spectral symbol g(z) = Gamma(beta+1) Gamma(z+a) / Gamma(beta+z+a) on
/// the closed right half-plane, computed through branch-continuous
/// log-Gamma differences (never through Gamma values themselves).
cx symbol(cx beta, double p, Side side, cx z);

/// Boundary curve w(t) = symbol(it), adaptively sampled.
struct SpectralCurve {
    Side side = Side::dual;
    double p = 2;
    cx beta{1.0, 0.0};
    std::vector<double> t; // ordered
    std::vector<cx> w;
    double angle_tol = 0;

    std::size_t size() const { return t.size(); }
};

struct TraceOptions {
    double angle_tol = 0.02;          // max turn angle between consecutive chords
    double cutoff = 1e-4;             // tails trimmed once |w| falls below this
    double t_max = 0;                 // 0: grow geometrically until |w| < cutoff
    std::size_t max_samples = 1000000;
};

SpectralCurve trace_border(cx beta, double p, Side side, const TraceOptions& opts = {});

/// Images of an explicit grid in C_+ u iR: the region sample behind the
/// border curve.
std::vector<cx> sample_region(cx beta, double p, Side side, std::span<const cx> grid);

struct Crossing {
    double t;
    cx w;
};

/// Sign-change bracketing on Im w (real-axis crossings) and Re w
/// (imaginary-axis crossings) over the curve samples, each bracket refined
/// by bisection in t.
struct CrossingReport {
    std::vector<Crossing> real_axis;
    std::vector<Crossing> imag_axis;
};
CrossingReport find_axis_crossings(const SpectralCurve& curve);

struct EnvelopeRow {
    double beta;
    double max_abs_w;
    double argmax_t;
};

/// For p = inf (offset a = 1): the peak modulus of each border curve. Every
/// curve passes through w(0) = 1; the scan reports how far above 1 the curve
/// ever gets, feeding the unit-circle envelope question.
std::vector<EnvelopeRow> envelope_scan(std::span<const double> betas,
                                       const TraceOptions& opts = {});

} // namespace cesarolab
