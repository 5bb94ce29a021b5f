#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "polykit/coeffs.hpp"
#include "polykit/complexutil.hpp"

namespace polykit {

enum class InvertMethod { pt_plus, pp };

// Dense inverse of V = (w_i^j), rows i = 1..n over parameters, columns
// j = 0..n-1 over powers. Entry (i, j) of the inverse is
// a_{i\j} / P_{\j}(w_j): row index i = degree 0..n-1, column index j over
// the parameters in caller order.
class InverseVandermonde {
public:
    InverseVandermonde(std::size_t n, std::vector<cx> entries);

    std::size_t size() const { return n_; }
    cx at(std::size_t row, std::size_t col) const {
        return entries_[row * n_ + col];
    }
    std::span<const cx> entries() const { return entries_; }

private:
    std::size_t n_;
    std::vector<cx> entries_;
};

// Stream the inverse one column at a time (column j = all degrees for
// parameter j), keeping O(n) working storage. Columns arrive in caller
// parameter order. Both methods share steps b)-c); they differ in how the
// full coefficient vector of step a) is produced:
//   pt_plus - algorithm R on the Leja-ordered parameters,
//   pp      - algorithm P, scaled by 1/rho when rho < 1.
void inverse_columns(const RootSet& params, InvertMethod method,
                     const std::function<void(std::size_t col,
                                              std::span<const cx> column)>& emit);

InverseVandermonde invert(const RootSet& params, InvertMethod method);

InverseVandermonde invert_pt_plus(const RootSet& params);
InverseVandermonde invert_pp(const RootSet& params);

// M * d without materializing M.
std::vector<cx> solve_system(const RootSet& params, InvertMethod method,
                             std::span<const cx> d);
std::vector<cx> solve_system(const InverseVandermonde& inv,
                             std::span<const cx> d);

} // namespace polykit
