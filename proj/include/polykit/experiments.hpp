#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "polykit/coeffs.hpp"
#include "polykit/complexutil.hpp"

namespace polykit {

// Families with closed-form coefficients:
//   p1: (x^p - 1)^q,  p2: ((x^{p+1}-1)/(x-1))^q,  degree n = p*q,
// roots scaled by rho.
enum class TestPolyFamily { p1, p2 };

struct TestPolySpec {
    TestPolyFamily family = TestPolyFamily::p1;
    std::size_t p = 1;
    std::size_t q = 1;
    double rho = 1.0;

    std::size_t degree() const { return p * q; }
};

enum class SampleFamily { circle, disk, annulus, line };

struct SampleSpec {
    SampleFamily family = SampleFamily::circle;
    double rho = 1.0;
    double delta_width = 0.1; // annulus width
    double tau = 0.0;         // line data shift
    std::size_t n = 10;
    std::uint64_t seed = 0;
    std::size_t samples = 0;  // 0 = paper default: 100 if n < 255 else 10

    std::size_t sample_count() const {
        if (samples > 0) return samples;
        return n < 255 ? 100 : 10;
    }
};

struct ErrorStats {
    std::vector<double> eps2_per_sample; // NaN entries are recorded outcomes
    double eps0 = 0.0;                   // rms over the finite entries
    std::size_t nan_count = 0;
    bool overflow = false;               // any sample hit a non-finite norm
};

// Scaled roots (with multiplicity) and the exact coefficients, expanded in
// integer arithmetic and scaled by rho^{n-m}. Entries that leave the
// binary64 range come back infinite rather than throwing.
std::pair<RootSet, CoeffVector> gen_testpoly_exact(const TestPolySpec& spec);

// Deterministic draw: the (seed, sample_index) pair keys an independent
// stream; identical inputs reproduce the set bit for bit. Angles cover the
// full circle, 2*pi*(k + delta)/n.
RootSet sample_roots(const SampleSpec& spec, std::size_t sample_index);

// Test hook used by sample_roots: the same construction with the uniform
// draws supplied by the caller.
std::vector<cx> sample_points(const SampleSpec& spec,
                              std::size_t count,
                              const std::function<double()>& next_uniform);

// eps2 = ||phi - f||_2 ||x||_2 / ||f||_2 (Definition of the error metric as
// printed; include_x_norm = false drops the ||x||_2 weight, which is the
// form the reference tables use). Norms are naive sums of squares: overflow
// or a vanishing denominator yields NaN, never a throw.
double eps2(std::span<const cx> phi, std::span<const cx> f,
            std::span<const cx> x, bool include_x_norm = true);

enum class ASolver { p, p_scaled, r_plus, r };

struct RunOptions {
    bool include_x_norm = true;
    int threads = 1;
};

// Problem A on a test polynomial: one deterministic run of the solver
// against the exact coefficients.
ErrorStats run_problem_a(const TestPolySpec& spec, ASolver solver,
                         const RunOptions& opts = {});

enum class FSolver { p, r_plus }; // p applies 1/rho scaling when rho < 1

// Problem F: per sample, draw roots and an independent data set from the
// same family, compare product-form values with Horner on the solver's
// coefficients.
ErrorStats run_problem_f(const SampleSpec& spec, FSolver solver,
                         const RunOptions& opts = {});

// Problem H: evaluate the solver's coefficients at the roots and at the
// origin; the reference is (0,...,0, prod(-w_k)).
ErrorStats run_problem_h(const SampleSpec& spec, FSolver solver,
                         const RunOptions& opts = {});

enum class IMethod { ga, de };

// Problem I: sample roots and distinct nodes, evaluate products at the
// nodes, recover coefficients from the data, compare with the FFT-route
// reference computed from the roots.
ErrorStats run_problem_i(const SampleSpec& spec, IMethod method,
                         const RunOptions& opts = {});

const char* family_name(SampleFamily f);
const char* solver_name(ASolver s);
const char* solver_name(FSolver s);
const char* method_name(IMethod m);

} // namespace polykit
