#include "polykit/fft.hpp"

#include <bit>

#include "polykit/errors.hpp"

namespace polykit {

FftPlan::FftPlan(std::size_t length) : n_(length) {
    if (n_ < 2 || (n_ & (n_ - 1)) != 0)
        throw usage_error("fft length must be a power of two >= 2");
    twiddles_.resize(n_);
    for (std::size_t j = 0; j < n_; ++j)
        twiddles_[j] = unit_point(double(j), double(n_));
}

FftPlan plan(std::size_t n) {
    if (n < 1) throw usage_error("plan: n must be >= 1");
    std::size_t N = 2;
    while (N <= n) N <<= 1;
    return FftPlan(N);
}

namespace {

void bit_reverse(std::vector<cx>& x) {
    const std::size_t N = x.size();
    for (std::size_t i = 0, j = 0; i < N; ++i) {
        if (i < j) std::swap(x[i], x[j]);
        std::size_t k = N >> 1;
        while (j & k) { j ^= k; k >>= 1; }
        j |= k;
    }
}

} // namespace

std::vector<cx> dft(const FftPlan& plan, std::span<const cx> x, Direction dir) {
    const std::size_t N = plan.length();
    if (x.size() != N)
        throw usage_error("dft: input length does not match plan");

    std::vector<cx> y(x.begin(), x.end());
    bit_reverse(y);

    const auto tw = plan.twiddles();
    for (std::size_t h = 1; h < N; h <<= 1) {
        const std::size_t stride = N / (2 * h);
        for (std::size_t base = 0; base < N; base += 2 * h) {
            for (std::size_t k = 0; k < h; ++k) {
                cx w = tw[k * stride];
                if (dir == Direction::inverse) w = std::conj(w);
                const cx u = y[base + k];
                const cx v = w * y[base + k + h];
                y[base + k] = u + v;
                y[base + k + h] = u - v;
            }
        }
    }
    return y;
}

} // namespace polykit
