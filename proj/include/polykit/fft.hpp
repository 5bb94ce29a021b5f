#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "polykit/complexutil.hpp"

namespace polykit {

enum class Direction { forward, inverse };

// Radix-2 plan: length and the full table of unit roots zeta^j,
// zeta = e^{2*pi*i/N}. Immutable once built, shareable across threads.
class FftPlan {
public:
    explicit FftPlan(std::size_t length);

    std::size_t length() const { return n_; }
    // zeta^{j} for 0 <= j < N.
    std::span<const cx> twiddles() const { return twiddles_; }
    // zeta^{-j}, the evaluation grid used by the coefficient solvers.
    cx point_conj(std::size_t j) const { return std::conj(twiddles_[j]); }

private:
    std::size_t n_;
    std::vector<cx> twiddles_;
};

// Smallest power of two strictly greater than n (so n < N <= 2n for n >= 2).
FftPlan plan(std::size_t n);

// forward: X_m = sum_j x_j zeta^{+jm};  inverse: kernel zeta^{-jm}.
// Neither direction applies 1/N; callers scale where the identity needs it.
std::vector<cx> dft(const FftPlan& plan, std::span<const cx> x, Direction dir);

} // namespace polykit
