#include "polykit/vandermonde.hpp"

#include <algorithm>
#include <numeric>

#include "polykit/errors.hpp"

namespace polykit {

InverseVandermonde::InverseVandermonde(std::size_t n, std::vector<cx> entries)
    : n_(n), entries_(std::move(entries)) {
    if (entries_.size() != n_ * n_)
        throw usage_error("InverseVandermonde: entry count mismatch");
}

namespace {

void require_distinct(const RootSet& params) {
    const std::size_t n = params.size();
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = j + 1; l < n; ++l)
            if (params[j] == params[l])
                throw singular_error(
                    "singular Vandermondian: parameters " + std::to_string(j) +
                    " and " + std::to_string(l) + " coincide");
}

// P_{\j}(w_j) = prod_{l != j} (w_j - w_l), product form.
cx denominator(const RootSet& params, std::size_t j) {
    cx prod{1.0, 0.0};
    for (std::size_t l = 0; l < params.size(); ++l)
        if (l != j) prod *= params[j] - params[l];
    return prod;
}

} // namespace

void inverse_columns(const RootSet& params, InvertMethod method,
                     const std::function<void(std::size_t,
                                              std::span<const cx>)>& emit) {
    require_distinct(params);
    const std::size_t n = params.size();

    CoeffVector coeffs;
    if (method == InvertMethod::pt_plus) {
        coeffs = algorithm_r_plus(params);
    } else {
        coeffs = with_scaling(CoeffSolver::p, params, default_scale(params));
    }

    std::vector<cx> column(n);
    for (std::size_t j = 0; j < n; ++j) {
        const ReducedCoeffVector red = reduce_s2(j, coeffs, params);
        const cx den = denominator(params, j);
        if (den == cx{0.0, 0.0})
            throw singular_error("singular Vandermondian: P_{\\j}(w_j) = 0 at "
                                 "parameter " + std::to_string(j));
        for (std::size_t i = 0; i < n; ++i) {
            column[i] = red.a[i] / den;
            if (!is_finite(column[i]))
                throw overflow_error("inverse entry left the binary64 range "
                                     "in column " + std::to_string(j), j);
        }
        emit(j, column);
    }
}

InverseVandermonde invert(const RootSet& params, InvertMethod method) {
    const std::size_t n = params.size();
    std::vector<cx> entries(n * n);
    inverse_columns(params, method,
                    [&](std::size_t j, std::span<const cx> col) {
                        for (std::size_t i = 0; i < n; ++i)
                            entries[i * n + j] = col[i];
                    });
    return InverseVandermonde(n, std::move(entries));
}

InverseVandermonde invert_pt_plus(const RootSet& params) {
    return invert(params, InvertMethod::pt_plus);
}

InverseVandermonde invert_pp(const RootSet& params) {
    return invert(params, InvertMethod::pp);
}

std::vector<cx> solve_system(const RootSet& params, InvertMethod method,
                             std::span<const cx> d) {
    const std::size_t n = params.size();
    if (d.size() != n)
        throw usage_error("solve_system: right-hand side length mismatch");
    std::vector<cx> x(n, cx{0.0, 0.0});
    inverse_columns(params, method,
                    [&](std::size_t j, std::span<const cx> col) {
                        for (std::size_t i = 0; i < n; ++i)
                            x[i] += col[i] * d[j];
                    });
    return x;
}

std::vector<cx> solve_system(const InverseVandermonde& inv,
                             std::span<const cx> d) {
    const std::size_t n = inv.size();
    if (d.size() != n)
        throw usage_error("solve_system: right-hand side length mismatch");
    std::vector<cx> x(n, cx{0.0, 0.0});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            x[i] += inv.at(i, j) * d[j];
    return x;
}

} // namespace polykit
