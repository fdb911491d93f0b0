#include "cesarolab/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cesarolab {

PowerLawTail::PowerLawTail(std::vector<Factor> factors) {
    if (factors.empty()) throw std::invalid_argument("PowerLawTail: no factors");
    double s_plus = 0, s_minus = 0;
    double b_max = 0, b_min = factors.front().b;
    double pos_threshold = 0;
    for (const Factor& f : factors) {
        if (f.w <= 0) throw std::invalid_argument("PowerLawTail: nonpositive weight");
        const double d = f.w * (f.b - f.a);
        if (d >= 0)
            s_plus += d;
        else
            s_minus += -d;
        b_max = std::max(b_max, f.b);
        b_min = std::min(b_min, f.b);
        pos_threshold = std::max(pos_threshold, std::max(-f.a, -f.b));
    }
    s_ = s_plus - s_minus;
    if (s_ <= 1.0)
        throw std::invalid_argument("PowerLawTail: decay exponent must exceed 1");
    s_tilde_ = 0.5 * (1.0 + s_);
    c_ = b_max;

    double j0 = std::floor(pos_threshold) + 1.0;
    if (s_minus > 0) {
        const double j_neg = s_minus * (c_ - b_min) / (s_ - s_tilde_) - b_min;
        j0 = std::max(j0, std::ceil(j_neg) + 1.0);
    }
    j0_ = static_cast<std::size_t>(std::max(1.0, j0));
}

double PowerLawTail::bound(std::size_t L, double abs_term_L) const {
    if (L < j0_) throw std::logic_error("PowerLawTail::bound: index below certified range");
    return abs_term_L * (static_cast<double>(L) + c_) / (s_tilde_ - 1.0);
}

double geometric_tail(double abs_last_term, double ratio) {
    if (!(ratio >= 0.0 && ratio < 1.0))
        throw std::invalid_argument("geometric_tail: ratio must lie in [0,1)");
    return abs_last_term * ratio / (1.0 - ratio);
}

} // namespace cesarolab
