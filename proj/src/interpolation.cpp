#include "polykit/interpolation.hpp"

#include <string>

#include "polykit/errors.hpp"
#include "polykit/fft.hpp"

namespace polykit {

void validate(const DataSet& data) {
    if (data.nodes.empty())
        throw usage_error("DataSet: need at least one point");
    if (data.nodes.size() != data.values.size())
        throw usage_error("DataSet: node/value count mismatch");
    for (std::size_t i = 0; i < data.nodes.size(); ++i)
        if (!is_finite(data.nodes[i]) || !is_finite(data.values[i]))
            throw usage_error("DataSet: non-finite entry at index " +
                              std::to_string(i));
    for (std::size_t i = 0; i < data.nodes.size(); ++i)
        for (std::size_t j = i + 1; j < data.nodes.size(); ++j)
            if (data.nodes[i] == data.nodes[j])
                throw singular_error("DataSet: nodes " + std::to_string(i) +
                                     " and " + std::to_string(j) + " coincide");
}

BarycentricWeights barycentric_weights(const DataSet& data) {
    validate(data);
    const std::size_t count = data.count();
    BarycentricWeights out;
    out.w.resize(count);
    for (std::size_t j = 0; j < count; ++j) {
        cx den{1.0, 0.0};
        for (std::size_t i = 0; i < count; ++i)
            if (i != j) den *= data.nodes[j] - data.nodes[i];
        out.w[j] = data.values[j] / den;
    }
    return out;
}

cx eval_lagrange(const DataSet& data, const BarycentricWeights& weights, cx d) {
    const std::size_t count = data.count();
    if (weights.w.size() != count)
        throw usage_error("eval_lagrange: weight count mismatch");
    for (std::size_t k = 0; k < count; ++k)
        if (d == data.nodes[k]) return data.values[k];

    cx master{1.0, 0.0};
    cx sum{0.0, 0.0};
    for (std::size_t k = 0; k < count; ++k) {
        master *= d - data.nodes[k];
        sum += weights.w[k] / (d - data.nodes[k]);
    }
    return master * sum;
}

CoeffVector coeffs_ga(const DataSet& data) {
    validate(data);
    const std::size_t n = data.degree();
    const BarycentricWeights w = barycentric_weights(data);

    if (n == 0) return CoeffVector{{data.values[0]}};

    const FftPlan pl = plan(n);
    const std::size_t N = pl.length();
    std::vector<cx> p(N);
    for (std::size_t j = 0; j < N; ++j)
        p[j] = eval_lagrange(data, w, pl.point_conj(j));

    for (const cx& v : p)
        if (!is_finite(v))
            throw overflow_error("coeffs_ga: interpolated value left the "
                                 "binary64 range");

    std::vector<cx> bins = dft(pl, p, Direction::forward);
    CoeffVector out;
    out.a.resize(n + 1);
    const double inv_n = 1.0 / double(N);
    for (std::size_t m = 0; m <= n; ++m) out.a[m] = bins[m] * inv_n;
    return out;
}

CoeffVector coeffs_de(const DataSet& data, InvertMethod method) {
    validate(data);
    RootSet params(data.nodes); // nodes must be nonzero here
    CoeffVector out;
    out.a = solve_system(params, method, data.values);
    return out;
}

} // namespace polykit
