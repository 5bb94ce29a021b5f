#include "polykit/coeffs.hpp"

#include <algorithm>
#include <cmath>

#include "polykit/fft.hpp"

namespace polykit {

RootSet::RootSet(std::vector<cx> roots) : roots_(std::move(roots)) {
    if (roots_.empty()) throw usage_error("RootSet: need at least one root");
    for (std::size_t k = 0; k < roots_.size(); ++k) {
        if (!is_finite(roots_[k]))
            throw usage_error("RootSet: root " + std::to_string(k) +
                              " is not finite");
        if (roots_[k] == cx{0.0, 0.0})
            throw usage_error("RootSet: root " + std::to_string(k) +
                              " is zero; all roots must be nonzero");
    }
}

double RootSet::radius() const { return max_abs(roots_); }

CoeffVector algorithm_p(const RootSet& roots) {
    const std::size_t n = roots.size();
    const FftPlan pl = plan(n);
    const std::size_t N = pl.length();

    std::vector<cx> p(N);
    for (std::size_t j = 0; j < N; ++j) {
        const cx point = pl.point_conj(j);
        cx prod{1.0, 0.0};
        for (std::size_t k = 0; k < n; ++k) {
            prod *= point - roots[k];
            if (!is_finite(prod))
                throw overflow_error(
                    "algorithm_p: partial product left the binary64 range "
                    "at grid index " + std::to_string(j), j);
        }
        p[j] = prod;
    }

    std::vector<cx> bins = dft(pl, p, Direction::forward);
    CoeffVector out;
    out.a.resize(n + 1);
    const double inv_n = 1.0 / double(N);
    for (std::size_t m = 0; m <= n; ++m) out.a[m] = bins[m] * inv_n;
    // the product is monic by construction; the computed top bin carries
    // transform noise of order eps * max|p_j|, which is large when rho^n is
    out.a[n] = cx{1.0, 0.0};
    return out;
}

CoeffVector algorithm_r(const RootSet& roots) {
    const std::size_t n = roots.size();
    CoeffVector out;
    out.a.assign(n + 1, cx{0.0, 0.0});
    out.a[n] = cx{1.0, 0.0};
    for (std::size_t k = 0; k < n; ++k) {
        const cx w = roots[k];
        cx above{1.0, 0.0}; // a_{m+1} before this pass touched it
        for (std::size_t m = n; m-- > 0;) {
            const cx keep = out.a[m];
            out.a[m] -= w * above;
            if (!is_finite(out.a[m]))
                throw overflow_error(
                    "algorithm_r: intermediate left the binary64 range "
                    "folding root " + std::to_string(k), k);
            above = keep;
        }
    }
    return out;
}

RootSet leja_order(const RootSet& roots) {
    const std::size_t n = roots.size();
    std::vector<cx> w(roots.values().begin(), roots.values().end());
    if (n == 1) return RootSet(std::move(w));

    std::size_t first = 0;
    for (std::size_t k = 1; k < n; ++k)
        if (std::norm(w[k]) > std::norm(w[first])) first = k;
    std::swap(w[0], w[first]);

    std::vector<double> p(n, 1.0);
    for (std::size_t k = 1; k + 1 < n; ++k) {
        for (std::size_t j = k; j < n; ++j)
            p[j] *= std::norm(w[k - 1] - w[j]);
        std::size_t best = k;
        for (std::size_t j = k + 1; j < n; ++j)
            if (p[j] > p[best]) best = j;
        std::swap(w[k], w[best]);
        std::swap(p[k], p[best]);
    }
    return RootSet(std::move(w));
}

CoeffVector algorithm_r_plus(const RootSet& roots) {
    return algorithm_r(leja_order(roots));
}

CoeffVector solve_coeffs(CoeffSolver solver, const RootSet& roots) {
    switch (solver) {
        case CoeffSolver::p: return algorithm_p(roots);
        case CoeffSolver::r: return algorithm_r(roots);
        case CoeffSolver::r_plus: return algorithm_r_plus(roots);
    }
    throw usage_error("unknown solver");
}

ReducedCoeffVector reduce_s2(std::size_t k, const CoeffVector& coeffs,
                             const RootSet& roots) {
    const std::size_t n = roots.size();
    if (coeffs.a.size() != n + 1)
        throw usage_error("reduce_s2: coefficient count does not match roots");
    if (k >= n) throw usage_error("reduce_s2: root index out of range");

    ReducedCoeffVector out;
    out.omitted = k;
    out.a.assign(n, cx{0.0, 0.0});
    out.a[n - 1] = cx{1.0, 0.0};
    const cx w = roots[k];
    for (std::size_t i = n - 1; i-- > 0;)
        out.a[i] = coeffs.a[i + 1] + w * out.a[i + 1];
    return out;
}

std::vector<cx> symmetric_functions(const RootSet& roots, CoeffSolver solver) {
    // alpha_m = (-1)^m a_{n-m}: prod(x - w_k) = sum (-1)^j alpha_j x^{n-j}
    const CoeffVector c = solve_coeffs(solver, roots);
    const std::size_t n = roots.size();
    std::vector<cx> alpha(n);
    for (std::size_t m = 1; m <= n; ++m) {
        const cx v = c.a[n - m];
        alpha[m - 1] = (m % 2 == 0) ? v : -v;
    }
    return alpha;
}

cx eval_product(const RootSet& roots, cx x) {
    cx prod{1.0, 0.0};
    for (std::size_t k = 0; k < roots.size(); ++k) prod *= x - roots[k];
    return prod;
}

cx eval_horner(std::span<const cx> coeffs, cx x) {
    cx acc{0.0, 0.0};
    for (std::size_t m = coeffs.size(); m-- > 0;) acc = acc * x + coeffs[m];
    return acc;
}

cx eval_horner(const CoeffVector& coeffs, cx x) {
    return eval_horner(std::span<const cx>(coeffs.a), x);
}

CoeffVector with_scaling(CoeffSolver solver, const RootSet& roots,
                         ScaleSpec scale) {
    const double sigma = scale.sigma;
    if (!(sigma > 0.0) || !std::isfinite(sigma))
        throw usage_error("with_scaling: sigma must be positive and finite");
    if (sigma == 1.0) return solve_coeffs(solver, roots);

    std::vector<cx> scaled(roots.size());
    for (std::size_t k = 0; k < roots.size(); ++k) scaled[k] = roots[k] * sigma;
    CoeffVector c = solve_coeffs(solver, RootSet(std::move(scaled)));

    const double n = double(roots.size());
    for (std::size_t m = 0; m < c.a.size(); ++m)
        c.a[m] *= std::pow(sigma, double(m) - n);
    return c;
}

ScaleSpec default_scale(const RootSet& roots) {
    const double rho = roots.radius();
    return ScaleSpec{rho < 1.0 ? 1.0 / rho : 1.0};
}

} // namespace polykit
