#pragma once

#include <cstddef>
#include <vector>

#include "polykit/coeffs.hpp"
#include "polykit/complexutil.hpp"
#include "polykit/vandermonde.hpp"

namespace polykit {

// n+1 pairwise distinct nodes with values; determines the unique
// interpolating polynomial of degree <= n.
struct DataSet {
    std::vector<cx> nodes;
    std::vector<cx> values;

    std::size_t count() const { return nodes.size(); }
    std::size_t degree() const { return nodes.size() - 1; }
};

void validate(const DataSet& data); // throws usage_error / singular_error

// w_j = y_j / prod_{i != j} (x_j - x_i).
struct BarycentricWeights {
    std::vector<cx> w;
};

BarycentricWeights barycentric_weights(const DataSet& data);

// Barycentric second-form evaluation; exact node coincidence returns the
// stored value y_k directly.
cx eval_lagrange(const DataSet& data, const BarycentricWeights& weights, cx d);

// Interpolate at the plan's unit-root grid and transform, as in algorithm_p.
// The grid covers all N points so the transform is exact for degree <= n.
CoeffVector coeffs_ga(const DataSet& data);

// a = V^{-1}(nodes) * values through the chosen inverter; nodes must be
// nonzero as well as distinct.
CoeffVector coeffs_de(const DataSet& data, InvertMethod method);

} // namespace polykit
