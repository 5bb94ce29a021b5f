#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "polykit/complexutil.hpp"
#include "polykit/errors.hpp"

namespace polykit {

// Ordered nonzero complex roots w_1..w_n of a monic polynomial
// P(x) = prod (x - w_k).
class RootSet {
public:
    explicit RootSet(std::vector<cx> roots);

    std::size_t size() const { return roots_.size(); }
    cx operator[](std::size_t k) const { return roots_[k]; }
    std::span<const cx> values() const { return roots_; }

    // Spread rho = max_k |w_k|.
    double radius() const;

private:
    std::vector<cx> roots_;
};

// Coefficients a_0..a_n, ascending degree.
struct CoeffVector {
    std::vector<cx> a;

    std::size_t degree() const { return a.size() - 1; }
    std::span<const cx> values() const { return a; }
};

// Coefficients of P_{\k}(x) = P(x)/(x - w_k), ascending, leading term 1.
struct ReducedCoeffVector {
    std::vector<cx> a;
    std::size_t omitted;

    std::size_t degree() const { return a.size() - 1; }
};

struct ScaleSpec {
    double sigma = 1.0;
};

enum class CoeffSolver { p, r, r_plus };

// FFT route: evaluate P at the plan's grid zeta^{-j}, transform, keep the
// first n+1 bins. Insensitive to root order; throws overflow_error with the
// grid index if a partial product leaves the binary64 range.
CoeffVector algorithm_p(const RootSet& roots);

// Fold one root at a time, a_m <- a_m - w_k a_{m+1} downward. Accuracy
// depends on the fold order; see leja_order.
CoeffVector algorithm_r(const RootSet& roots);

// Ordering of Algorithm L: max-modulus point first, then greedily maximize
// the running products of squared distances to the placed prefix. Ties go to
// the lowest index.
RootSet leja_order(const RootSet& roots);

// leja_order followed by algorithm_r.
CoeffVector algorithm_r_plus(const RootSet& roots);

CoeffVector solve_coeffs(CoeffSolver solver, const RootSet& roots);

// Downward recursion a_{i\k} = a_{i+1} + w_k a_{i+1\k}, seeded with leading 1.
// `k` is a 0-based index into roots.
ReducedCoeffVector reduce_s2(std::size_t k, const CoeffVector& coeffs,
                             const RootSet& roots);

// Elementary symmetric functions alpha_1..alpha_n = (-1)^{n-m} a_{n-m}.
std::vector<cx> symmetric_functions(const RootSet& roots, CoeffSolver solver);

// prod (x - w_k), left-to-right. Overflow propagates as a non-finite value.
cx eval_product(const RootSet& roots, cx x);

cx eval_horner(const CoeffVector& coeffs, cx x);
cx eval_horner(std::span<const cx> coeffs, cx x);

// Scale roots by sigma, solve, map a_m back by sigma^{m-n}. Overflow or
// underflow in the re-scale shows up as non-finite/zero entries rather than
// an exception; sigma == 1 bypasses the wrapper entirely.
CoeffVector with_scaling(CoeffSolver solver, const RootSet& roots,
                         ScaleSpec scale);

// sigma = 1/rho for rho < 1, else 1.
ScaleSpec default_scale(const RootSet& roots);

} // namespace polykit
