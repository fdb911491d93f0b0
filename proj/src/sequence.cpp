#include "cesarolab/sequence.hpp"

#include <algorithm>
#include <utility>

namespace cesarolab {

FiniteSequence::FiniteSequence(std::vector<cx> v) : v_(std::move(v)) {
    if (v_.empty()) v_.assign(1, cx{});
}

FiniteSequence FiniteSequence::unit(std::size_t n) {
    std::vector<cx> v(n + 1, cx{});
    v[n] = 1.0;
    return FiniteSequence(std::move(v));
}

FiniteSequence FiniteSequence::zeros(std::size_t last) {
    return FiniteSequence(std::vector<cx>(last + 1, cx{}));
}

double FiniteSequence::sup_norm() const {
    double m = 0;
    for (const cx& z : v_) m = std::max(m, std::abs(z));
    return m;
}

double FiniteSequence::l1_norm() const {
    double s = 0;
    for (const cx& z : v_) s += std::abs(z);
    return s;
}

FiniteSequence operator+(const FiniteSequence& a, const FiniteSequence& b) {
    std::vector<cx> v(std::max(a.size(), b.size()), cx{});
    for (std::size_t n = 0; n < v.size(); ++n) v[n] = a(n) + b(n);
    return FiniteSequence(std::move(v));
}

FiniteSequence operator-(const FiniteSequence& a, const FiniteSequence& b) {
    std::vector<cx> v(std::max(a.size(), b.size()), cx{});
    for (std::size_t n = 0; n < v.size(); ++n) v[n] = a(n) - b(n);
    return FiniteSequence(std::move(v));
}

FiniteSequence operator*(cx s, const FiniteSequence& f) {
    std::vector<cx> v(f.values());
    for (cx& z : v) z *= s;
    return FiniteSequence(std::move(v));
}

double max_abs_diff(const FiniteSequence& a, const FiniteSequence& b) {
    double m = 0;
    const std::size_t last = std::max(a.last_index(), b.last_index());
    for (std::size_t n = 0; n <= last; ++n) m = std::max(m, std::abs(a(n) - b(n)));
    return m;
}

} // namespace cesarolab
