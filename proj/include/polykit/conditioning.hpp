#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "polykit/coeffs.hpp"
#include "polykit/complexutil.hpp"
#include "polykit/experiments.hpp"
#include "polykit/interpolation.hpp"

namespace polykit {

enum class Problem { a, d, e, f, g, h };

// Normalized max-norm sensitivity of a problem's output to its parameters.
// `finite` is false when an intermediate overflowed or a norm vanished.
struct ConditionEstimate {
    double kappa = 0.0;
    Problem problem = Problem::a;
    bool finite = true;
};

// kappa_A = (max|w| / max|a_m|) max_m sum_k |a_{m\k}|, with reference
// coefficients from the scaled FFT solver and the reduced vectors streamed
// one k at a time.
ConditionEstimate kappa_a(const RootSet& roots);

// Inverse-Vandermonde entries: off-diagonal derivative
// a_{i\k} / ((w_j - w_k) P_{\j}(w_j)), diagonal
// (a_{i\k}/P_{\k}(w_k)) sum_{l != k} 1/(w_k - w_l).
ConditionEstimate kappa_d(const RootSet& params);

// Same derivatives contracted against d before the max-norm quotient.
ConditionEstimate kappa_e(std::span<const cx> d, const RootSet& params);

// Evaluation from roots at data points d_j.
ConditionEstimate kappa_f(std::span<const cx> data, const RootSet& roots);

// Interpolated value P(d) with respect to the joint parameter vector
// (x_0..x_n, y_0..y_n).
ConditionEstimate kappa_g(cx d, const DataSet& data);

// Reduced polynomials at their own roots; only the diagonal entries
// P_{\k}(w_k) carry a derivative, d/dw P_{\k} at w_k.
ConditionEstimate kappa_h(const RootSet& roots);

// kappa_{f o g} <= kappa_f(g(x)) * kappa_g(x).
double composite_bound(const ConditionEstimate& outer,
                       const ConditionEstimate& inner);

// Derived bounds, not estimators:
double kappa_c_lower_bound(const ConditionEstimate& kd,
                           const ConditionEstimate& ka);
double kappa_i_upper_bound(const ConditionEstimate& ka,
                           const ConditionEstimate& kg,
                           const ConditionEstimate& ke);

// Problem-A condition of a test polynomial from the closed-form derivative
// expansion over its p distinct roots, using exact coefficients.
ConditionEstimate exact_condition_testpoly(const TestPolySpec& spec);

} // namespace polykit
