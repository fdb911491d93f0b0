#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace cesarolab {

using cx = std::complex<double>;

/// Complex sequence with exactly known finite support: entries live on
/// indices 0..last_index() and everything beyond is identically zero, so
/// operator arithmetic on these sequences carries no truncation error.
class FiniteSequence {
public:
    FiniteSequence() : v_(1, cx{}) {}
    explicit FiniteSequence(std::vector<cx> v);

    /// e_n: 1 at index n, 0 elsewhere.
    static FiniteSequence unit(std::size_t n);
    static FiniteSequence zeros(std::size_t last);

    cx operator()(std::size_t n) const { return n < v_.size() ? v_[n] : cx{}; }
    cx& operator[](std::size_t n) { return v_[n]; }
    std::size_t last_index() const { return v_.size() - 1; }
    std::size_t size() const { return v_.size(); }
    const std::vector<cx>& values() const { return v_; }

    double sup_norm() const;
    double l1_norm() const;

private:
    std::vector<cx> v_;
};

FiniteSequence operator+(const FiniteSequence& a, const FiniteSequence& b);
FiniteSequence operator-(const FiniteSequence& a, const FiniteSequence& b);
FiniteSequence operator*(cx s, const FiniteSequence& f);

/// Largest |a(n) - b(n)| over the union of supports.
double max_abs_diff(const FiniteSequence& a, const FiniteSequence& b);

} // namespace cesarolab
