#pragma once

#include <cmath>
#include <complex>
#include <span>
#include <vector>

namespace polykit {

using cx = std::complex<double>;

inline bool is_finite(cx z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// e^{2*pi*i*num/den}, with the angle reduced against a two-double split of
// 2*pi. A plain fl(2*pi)*t angle is coherently short by ~1.2e-16 relative,
// which shows up as a frequency shift once a transform wraps the phase mod
// N; the split keeps grids of these points phase-consistent to ~1e-19.
inline cx unit_point(double num, double den) {
    constexpr double two_pi_hi = 6.283185307179586232;   // fl(2*pi)
    constexpr double two_pi_lo = 2.4492935982947064e-16; // 2*pi - fl(2*pi)
    const double t = num / den;
    const double hi = two_pi_hi * t;
    const double lo = std::fma(two_pi_hi, t, -hi) + two_pi_lo * t;
    const double c = std::cos(hi);
    const double s = std::sin(hi);
    return {c - s * lo, s + c * lo};
}

// Naive squared 2-norm, no overflow protection: Eq-style error metrics rely
// on the norm overflowing/underflowing exactly when sums of |z|^2 do.
inline double norm2_squared(std::span<const cx> v) {
    double s = 0.0;
    for (cx z : v) s += std::norm(z);
    return s;
}

inline double norm2(std::span<const cx> v) {
    return std::sqrt(norm2_squared(v));
}

inline double max_abs(std::span<const cx> v) {
    double m = 0.0;
    for (cx z : v) m = std::max(m, std::abs(z));
    return m;
}

} // namespace polykit
