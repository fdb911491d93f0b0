#include "cesarolab/verification.hpp"

#include <algorithm>
#include <cmath>

namespace cesarolab {

double relative_error(cx lhs, cx rhs) {
    const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
    return std::abs(lhs - rhs) / scale;
}

VerificationReport make_report(std::string identity, cx lhs, cx rhs, std::size_t terms_used,
                               double tail_bound, std::vector<std::pair<std::string, cx>> params,
                               double scale_floor) {
    VerificationReport r;
    r.identity = std::move(identity);
    r.lhs = lhs;
    r.rhs = rhs;
    r.abs_err = std::abs(lhs - rhs);
    r.rel_err = r.abs_err / std::max({std::abs(lhs), std::abs(rhs), scale_floor, 1e-300});
    r.terms_used = terms_used;
    r.tail_bound = tail_bound;
    r.params = std::move(params);
    return r;
}

} // namespace cesarolab
