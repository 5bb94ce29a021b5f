#include "polykit/conditioning.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "polykit/errors.hpp"

namespace polykit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

ConditionEstimate flagged_infinite(Problem p) {
    return ConditionEstimate{kInf, p, false};
}

ConditionEstimate finish(double kappa, Problem p) {
    if (!std::isfinite(kappa)) return flagged_infinite(p);
    return ConditionEstimate{kappa, p, true};
}

void require_distinct(const RootSet& params, const char* who) {
    for (std::size_t j = 0; j < params.size(); ++j)
        for (std::size_t l = j + 1; l < params.size(); ++l)
            if (params[j] == params[l])
                throw singular_error(std::string(who) +
                                     ": parameters coincide at indices " +
                                     std::to_string(j) + "," + std::to_string(l));
}

CoeffVector reference_coeffs(const RootSet& roots) {
    return with_scaling(CoeffSolver::p, roots, default_scale(roots));
}

cx reduced_at_own_root(const RootSet& roots, std::size_t k) {
    cx prod{1.0, 0.0};
    for (std::size_t l = 0; l < roots.size(); ++l)
        if (l != k) prod *= roots[k] - roots[l];
    return prod;
}

cx inverse_distance_sum(const RootSet& roots, std::size_t k) {
    cx sum{0.0, 0.0};
    for (std::size_t l = 0; l < roots.size(); ++l)
        if (l != k) sum += cx{1.0, 0.0} / (roots[k] - roots[l]);
    return sum;
}

} // namespace

ConditionEstimate kappa_a(const RootSet& roots) {
    const std::size_t n = roots.size();
    CoeffVector a;
    try {
        a = reference_coeffs(roots);
    } catch (const overflow_error&) {
        return flagged_infinite(Problem::a);
    }
    const double amax = max_abs(a.values());
    std::vector<double> row_sum(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        const ReducedCoeffVector red = reduce_s2(k, a, roots);
        for (std::size_t m = 0; m < n; ++m) row_sum[m] += std::abs(red.a[m]);
    }
    const double numer = *std::max_element(row_sum.begin(), row_sum.end());
    return finish(roots.radius() / amax * numer, Problem::a);
}

namespace {

struct InverseParts {
    std::vector<ReducedCoeffVector> reduced; // one per parameter
    std::vector<cx> den;                     // P_{\j}(w_j)
    std::vector<cx> inv_dist;                // sum_{l != j} 1/(w_j - w_l)
};

InverseParts inverse_parts(const RootSet& params) {
    InverseParts parts;
    const std::size_t n = params.size();
    const CoeffVector a = reference_coeffs(params);
    parts.reduced.reserve(n);
    parts.den.resize(n);
    parts.inv_dist.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        parts.reduced.push_back(reduce_s2(j, a, params));
        parts.den[j] = reduced_at_own_root(params, j);
        parts.inv_dist[j] = inverse_distance_sum(params, j);
    }
    return parts;
}

} // namespace

ConditionEstimate kappa_d(const RootSet& params) {
    require_distinct(params, "kappa_d");
    const std::size_t n = params.size();
    InverseParts parts;
    try {
        parts = inverse_parts(params);
    } catch (const overflow_error&) {
        return flagged_infinite(Problem::d);
    }

    double max_entry = 0.0;
    double max_row = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const cx entry = parts.reduced[j].a[i] / parts.den[j];
            max_entry = std::max(max_entry, std::abs(entry));
            double sum = std::abs(entry * parts.inv_dist[j]); // k = j
            for (std::size_t k = 0; k < n; ++k) {
                if (k == j) continue;
                sum += std::abs(parts.reduced[k].a[i] /
                                ((params[j] - params[k]) * parts.den[j]));
            }
            max_row = std::max(max_row, sum);
        }
    }
    return finish(params.radius() / max_entry * max_row, Problem::d);
}

ConditionEstimate kappa_e(std::span<const cx> d, const RootSet& params) {
    require_distinct(params, "kappa_e");
    const std::size_t n = params.size();
    if (d.size() != n) throw usage_error("kappa_e: dimension mismatch");
    InverseParts parts;
    try {
        parts = inverse_parts(params);
    } catch (const overflow_error&) {
        return flagged_infinite(Problem::e);
    }

    double max_f = 0.0;
    double max_row = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        cx fi{0.0, 0.0};
        for (std::size_t j = 0; j < n; ++j)
            fi += parts.reduced[j].a[i] / parts.den[j] * d[j];
        max_f = std::max(max_f, std::abs(fi));

        double row = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            // sum_j d_j * d/dw_k of entry (i, j); the j = k term carries the
            // quotient-rule minus sign, which matters under this inner sum
            cx deriv = -d[k] * (parts.reduced[k].a[i] / parts.den[k]) *
                       parts.inv_dist[k];
            for (std::size_t j = 0; j < n; ++j) {
                if (j == k) continue;
                deriv += d[j] * parts.reduced[k].a[i] /
                         ((params[j] - params[k]) * parts.den[j]);
            }
            row += std::abs(deriv);
        }
        max_row = std::max(max_row, row);
    }
    if (max_f == 0.0) return flagged_infinite(Problem::e);
    return finish(params.radius() / max_f * max_row, Problem::e);
}

ConditionEstimate kappa_f(std::span<const cx> data, const RootSet& roots) {
    if (data.empty()) throw usage_error("kappa_f: need at least one data point");
    for (std::size_t j = 0; j < data.size(); ++j)
        for (std::size_t k = 0; k < roots.size(); ++k)
            if (data[j] == roots[k])
                throw singular_error("kappa_f: data point " + std::to_string(j) +
                                     " equals a root");

    double max_val = 0.0;
    std::vector<cx> values(data.size());
    for (std::size_t j = 0; j < data.size(); ++j) {
        values[j] = eval_product(roots, data[j]);
        max_val = std::max(max_val, std::abs(values[j]));
    }
    if (max_val == 0.0) return flagged_infinite(Problem::f);

    double max_row = 0.0;
    for (std::size_t j = 0; j < data.size(); ++j) {
        double sum = 0.0;
        for (std::size_t k = 0; k < roots.size(); ++k)
            sum += std::abs(values[j] / (data[j] - roots[k]));
        max_row = std::max(max_row, sum);
    }
    return finish(roots.radius() / max_val * max_row, Problem::f);
}

ConditionEstimate kappa_g(cx d, const DataSet& data) {
    validate(data);
    const std::size_t count = data.count();
    for (std::size_t i = 0; i < count; ++i)
        if (d == data.nodes[i])
            throw singular_error("kappa_g: evaluation point equals a node");

    // l_j(d) by direct products
    std::vector<cx> l(count);
    for (std::size_t j = 0; j < count; ++j) {
        cx num{1.0, 0.0}, den{1.0, 0.0};
        for (std::size_t i = 0; i < count; ++i) {
            if (i == j) continue;
            num *= d - data.nodes[i];
            den *= data.nodes[j] - data.nodes[i];
        }
        l[j] = num / den;
    }

    cx value{0.0, 0.0};
    for (std::size_t j = 0; j < count; ++j) value += data.values[j] * l[j];
    if (value == cx{0.0, 0.0}) return flagged_infinite(Problem::g);

    double deriv_sum = 0.0;
    double param_max = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        // d/dx_i P(d); the y_i l_i term enters with a plus sign (the printed
        // form has it negated, which fails the finite-difference check)
        cx dx{0.0, 0.0};
        for (std::size_t j = 0; j < count; ++j) {
            if (j == i) continue;
            const cx inv_xji = cx{1.0, 0.0} / (data.nodes[j] - data.nodes[i]);
            dx += data.values[j] * l[j] *
                  (inv_xji - cx{1.0, 0.0} / (d - data.nodes[i]));
            dx += data.values[i] * l[i] * inv_xji;
        }
        deriv_sum += std::abs(dx);
        deriv_sum += std::abs(l[i]); // d/dy_i P(d)
        param_max = std::max({param_max, std::abs(data.nodes[i]),
                              std::abs(data.values[i])});
    }
    return finish(deriv_sum * param_max / std::abs(value), Problem::g);
}

ConditionEstimate kappa_h(const RootSet& roots) {
    require_distinct(roots, "kappa_h");
    const std::size_t n = roots.size();
    double max_den = 0.0;
    double max_deriv = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const cx den = reduced_at_own_root(roots, k);
        max_den = std::max(max_den, std::abs(den));
        max_deriv = std::max(max_deriv,
                             std::abs(den * inverse_distance_sum(roots, k)));
    }
    if (max_den == 0.0) return flagged_infinite(Problem::h);
    return finish(roots.radius() / max_den * max_deriv, Problem::h);
}

double composite_bound(const ConditionEstimate& outer,
                       const ConditionEstimate& inner) {
    return outer.kappa * inner.kappa;
}

double kappa_c_lower_bound(const ConditionEstimate& kd,
                           const ConditionEstimate& ka) {
    return kd.kappa / ka.kappa;
}

double kappa_i_upper_bound(const ConditionEstimate& ka,
                           const ConditionEstimate& kg,
                           const ConditionEstimate& ke) {
    return std::min({ka.kappa, kg.kappa, ke.kappa});
}

namespace {

std::vector<cx> convolve(std::span<const cx> a, std::span<const cx> b) {
    std::vector<cx> out(a.size() + b.size() - 1, cx{0.0, 0.0});
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

} // namespace

ConditionEstimate exact_condition_testpoly(const TestPolySpec& spec) {
    const std::size_t p = spec.p;
    const std::size_t q = spec.q;
    const std::size_t n = spec.degree();
    const double rho = spec.rho;

    auto [roots_full, coeffs] = gen_testpoly_exact(spec);
    for (cx c : coeffs.a)
        if (!is_finite(c)) return flagged_infinite(Problem::a);
    const double amax = max_abs(coeffs.values());

    // U: the distinct-root factor with exact coefficients.
    std::vector<cx> U(p + 1);
    if (spec.family == TestPolyFamily::p1) {
        for (std::size_t k = 0; k <= p; ++k) U[k] = cx{0.0, 0.0};
        U[0] = -std::pow(rho, double(p));
        U[p] = cx{1.0, 0.0};
    } else {
        for (std::size_t k = 0; k <= p; ++k)
            U[k] = std::pow(rho, double(p - k));
    }

    // B = U^{q-1} via the exact generator for degree p*(q-1).
    std::vector<cx> B{cx{1.0, 0.0}};
    if (q > 1) {
        TestPolySpec base = spec;
        base.q = q - 1;
        auto [ignored, bq] = gen_testpoly_exact(base);
        B = bq.a;
    }

    // Row sums over the p distinct roots of |coefficients of q B(x) U(x)/(x - w_i)|.
    std::vector<double> row_sum(n, 0.0);
    for (std::size_t i = 0; i < p; ++i) {
        const cx wi = spec.family == TestPolyFamily::p1
                          ? rho * unit_point(double(i), double(p))
                          : rho * unit_point(double(i + 1), double(p + 1));
        // G_i = U / (x - w_i) by the downward division recursion
        std::vector<cx> G(p, cx{0.0, 0.0});
        G[p - 1] = U[p];
        for (std::size_t k = p - 1; k-- > 0;) G[k] = U[k + 1] + wi * G[k + 1];
        const std::vector<cx> D = convolve(B, G);
        for (std::size_t m = 0; m < D.size() && m < n; ++m)
            row_sum[m] += double(q) * std::abs(D[m]);
    }
    const double numer = *std::max_element(row_sum.begin(), row_sum.end());
    return finish(rho / amax * numer, Problem::a);
}

} // namespace polykit
