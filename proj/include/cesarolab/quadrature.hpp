#pragma once

#include <cstddef>
#include <functional>

#include "cesarolab/sequence.hpp"

namespace cesarolab {

struct QuadResult {
    cx value{};
    double error = 0;
    std::size_t evaluations = 0;
};

/// Globally adaptive Gauss-Kronrod 7-15 on [a,b]: repeatedly bisects the
/// panel with the largest error estimate until the summed estimate drops
/// below abs_tol. Throws std::runtime_error when the panel budget runs out.
QuadResult integrate_adaptive(const std::function<cx(double)>& f, double a, double b,
                              double abs_tol, std::size_t max_panels = 20000);

} // namespace cesarolab
