#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cesarolab/sequence.hpp"

namespace cesarolab {

/// Uniform outcome of a numerical identity check: both sides, the errors, how
/// many terms were summed, and a certified bound on whatever remainder was
/// left unsummed (exactly 0 for finite sums).
struct VerificationReport {
    std::string identity;
    cx lhs{}, rhs{};
    double abs_err = 0;
    double rel_err = 0;
    std::size_t terms_used = 0;
    double tail_bound = 0;
    std::vector<std::pair<std::string, cx>> params;
};

/// |lhs - rhs| / max(|lhs|, |rhs|, tiny floor).
double relative_error(cx lhs, cx rhs);

/// scale_floor guards the relative error at exact zeros of an identity: sums
/// whose terms are O(1) can cancel to 0, and the honest relative scale there
/// is the term magnitude, not the vanishing result.
VerificationReport make_report(std::string identity, cx lhs, cx rhs, std::size_t terms_used,
                               double tail_bound, std::vector<std::pair<std::string, cx>> params,
                               double scale_floor = 0.0);

} // namespace cesarolab
