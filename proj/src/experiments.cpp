#include "polykit/experiments.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <random>
#include <string>
#include <thread>

#include <gmpxx.h>

#include "polykit/errors.hpp"
#include "polykit/interpolation.hpp"

namespace polykit {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

double mpz_to_double(const mpz_class& z) {
    // mpz_get_d is system dependent once the value leaves the double range.
    if (mpz_sizeinbase(z.get_mpz_t(), 2) > 1023)
        return z < 0 ? -std::numeric_limits<double>::infinity()
                     : std::numeric_limits<double>::infinity();
    return z.get_d();
}

std::vector<mpz_class> ones_power(std::size_t p, std::size_t q) {
    // (1 + x + ... + x^p)^q by repeated exact convolution
    std::vector<mpz_class> acc{1_mpz};
    const std::vector<mpz_class> base(p + 1, 1_mpz);
    for (std::size_t rep = 0; rep < q; ++rep) {
        std::vector<mpz_class> next(acc.size() + p, 0_mpz);
        for (std::size_t i = 0; i < acc.size(); ++i)
            for (std::size_t j = 0; j <= p; ++j) next[i + j] += acc[i] * base[j];
        acc = std::move(next);
    }
    return acc;
}

} // namespace

std::pair<RootSet, CoeffVector> gen_testpoly_exact(const TestPolySpec& spec) {
    if (spec.p < 1 || spec.q < 1)
        throw usage_error("test polynomial: p and q must be >= 1");
    if (!(spec.rho > 0.0) || !std::isfinite(spec.rho))
        throw usage_error("test polynomial: rho must be positive and finite");

    const std::size_t n = spec.degree();
    CoeffVector coeffs;
    coeffs.a.assign(n + 1, cx{0.0, 0.0});
    std::vector<cx> roots;
    roots.reserve(n);

    if (spec.family == TestPolyFamily::p1) {
        // (x^p - 1)^q: coefficient (-1)^{q-k} C(q,k) at degree p*k
        mpz_class binom;
        for (std::size_t k = 0; k <= spec.q; ++k) {
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(spec.q),
                         static_cast<unsigned long>(k));
            double c = mpz_to_double(binom);
            if ((spec.q - k) % 2 == 1) c = -c;
            const std::size_t m = spec.p * k;
            coeffs.a[m] = c * std::pow(spec.rho, double(n - m));
        }
        for (std::size_t i = 0; i < spec.p; ++i) {
            const cx root = spec.rho * unit_point(double(i), double(spec.p));
            for (std::size_t rep = 0; rep < spec.q; ++rep) roots.push_back(root);
        }
    } else {
        // ((x^{p+1}-1)/(x-1))^q = (1 + x + ... + x^p)^q
        const std::vector<mpz_class> unit = ones_power(spec.p, spec.q);
        for (std::size_t m = 0; m <= n; ++m)
            coeffs.a[m] = mpz_to_double(unit[m]) * std::pow(spec.rho, double(n - m));
        for (std::size_t i = 1; i <= spec.p; ++i) {
            const cx root = spec.rho * unit_point(double(i), double(spec.p + 1));
            for (std::size_t rep = 0; rep < spec.q; ++rep) roots.push_back(root);
        }
    }
    return {RootSet(std::move(roots)), std::move(coeffs)};
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Independent per-sample stream; mt19937_64 is fully pinned by the standard
// and the mapping below avoids the implementation-defined distributions.
class UniformStream {
public:
    UniformStream(std::uint64_t seed, std::uint64_t sample_index)
        : eng_(splitmix64(seed) ^ splitmix64(sample_index * 0xA24BAED4963EE407ull + 1)) {}

    double next() { return double(eng_() >> 11) * 0x1.0p-53; }
    std::function<double()> as_fn() {
        return [this] { return next(); };
    }

private:
    std::mt19937_64 eng_;
};

} // namespace

namespace {

void validate(const SampleSpec& spec) {
    if (!(spec.rho > 0.0) || !std::isfinite(spec.rho))
        throw usage_error("sample spec: rho must be positive and finite");
    if (!(spec.delta_width >= 0.0) || !(spec.delta_width < 1.0))
        throw usage_error("sample spec: annulus width must lie in [0, 1)");
    if (spec.n < 1) throw usage_error("sample spec: n must be >= 1");
}

} // namespace

std::vector<cx> sample_points(const SampleSpec& spec, std::size_t count,
                              const std::function<double()>& next_uniform) {
    validate(spec);
    const double n = double(spec.n);
    std::vector<cx> pts(count);
    for (std::size_t k = 0; k < count; ++k) {
        switch (spec.family) {
            case SampleFamily::circle: {
                const double d = next_uniform();
                pts[k] = spec.rho * unit_point(double(k) + d, n);
                break;
            }
            case SampleFamily::disk: {
                const double r = next_uniform();
                const double d = next_uniform();
                pts[k] = (r * spec.rho) * unit_point(double(k) + d, n);
                break;
            }
            case SampleFamily::annulus: {
                const double r = next_uniform();
                const double d = next_uniform();
                pts[k] = ((1.0 - spec.delta_width * r) * spec.rho) *
                         unit_point(double(k) + d, n);
                break;
            }
            case SampleFamily::line: {
                const double d = next_uniform();
                pts[k] = cx{spec.rho * (-1.0 + 2.0 * (double(k) + d) / n), 0.0};
                break;
            }
        }
    }
    return pts;
}

namespace {

// As sample_points, but redraw any point that lands exactly on zero (a zero
// root is outside every solver's domain).
std::vector<cx> sample_nonzero(const SampleSpec& spec, std::size_t count,
                               UniformStream& stream) {
    std::vector<cx> pts = sample_points(spec, count, stream.as_fn());
    for (std::size_t k = 0; k < count; ++k) {
        for (int tries = 0; pts[k] == cx{0.0, 0.0}; ++tries) {
            if (tries > 64)
                throw usage_error("sampler keeps producing zero points");
            SampleSpec one = spec;
            std::vector<cx> redraw = sample_points(one, 1, stream.as_fn());
            pts[k] = redraw[0];
        }
    }
    return pts;
}

} // namespace

RootSet sample_roots(const SampleSpec& spec, std::size_t sample_index) {
    UniformStream stream(spec.seed, sample_index);
    return RootSet(sample_nonzero(spec, spec.n, stream));
}

double eps2(std::span<const cx> phi, std::span<const cx> f,
            std::span<const cx> x, bool include_x_norm) {
    if (phi.size() != f.size())
        throw usage_error("eps2: vector length mismatch");
    std::vector<cx> diff(phi.size());
    for (std::size_t i = 0; i < phi.size(); ++i) diff[i] = phi[i] - f[i];
    const double num = norm2(diff);
    const double den = norm2(f);
    const double xn = include_x_norm ? norm2(x) : 1.0;
    if (!std::isfinite(num) || !std::isfinite(den) || !std::isfinite(xn) ||
        den == 0.0)
        return kNan;
    return num * xn / den;
}

namespace {

ErrorStats aggregate(std::vector<double> eps) {
    ErrorStats stats;
    stats.eps2_per_sample = std::move(eps);
    double sum = 0.0;
    std::size_t finite = 0;
    for (double e : stats.eps2_per_sample) {
        if (std::isfinite(e)) {
            sum += e * e;
            ++finite;
        } else {
            ++stats.nan_count;
        }
    }
    stats.overflow = stats.nan_count > 0;
    stats.eps0 = finite > 0 ? std::sqrt(sum / double(finite)) : kNan;
    return stats;
}

ErrorStats run_sampled(std::size_t samples, int threads,
                       const std::function<double(std::size_t)>& one_sample) {
    std::vector<double> eps(samples, kNan);
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&](std::size_t i) {
        try {
            eps[i] = one_sample(i);
        } catch (const overflow_error&) {
            eps[i] = kNan; // recorded outcome, as in the tables
        } catch (const singular_error&) {
            eps[i] = kNan;
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    };
    if (threads <= 1) {
        for (std::size_t i = 0; i < samples; ++i) work(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        const std::size_t nthreads =
            std::min<std::size_t>(std::size_t(threads), samples);
        pool.reserve(nthreads);
        for (std::size_t t = 0; t < nthreads; ++t)
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < samples;
                     i = next.fetch_add(1))
                    work(i);
            });
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);
    return aggregate(std::move(eps));
}

CoeffVector coeffs_for(FSolver solver, const RootSet& roots) {
    if (solver == FSolver::r_plus) return algorithm_r_plus(roots);
    return with_scaling(CoeffSolver::p, roots, default_scale(roots));
}

} // namespace

ErrorStats run_problem_a(const TestPolySpec& spec, ASolver solver,
                         const RunOptions& opts) {
    auto [roots, exact] = gen_testpoly_exact(spec);
    std::vector<double> eps(1, kNan);
    try {
        CoeffVector got;
        switch (solver) {
            case ASolver::p: got = algorithm_p(roots); break;
            case ASolver::p_scaled:
                got = with_scaling(CoeffSolver::p, roots, default_scale(roots));
                break;
            case ASolver::r_plus: got = algorithm_r_plus(roots); break;
            case ASolver::r: got = algorithm_r(roots); break;
        }
        eps[0] = eps2(got.a, exact.a, roots.values(), opts.include_x_norm);
    } catch (const overflow_error&) {
    }
    return aggregate(std::move(eps));
}

ErrorStats run_problem_f(const SampleSpec& spec, FSolver solver,
                         const RunOptions& opts) {
    return run_sampled(spec.sample_count(), opts.threads, [&](std::size_t i) {
        UniformStream stream(spec.seed, i);
        RootSet roots(sample_nonzero(spec, spec.n, stream));
        std::vector<cx> data = sample_points(spec, spec.n + 1, stream.as_fn());
        if (spec.family == SampleFamily::line && spec.tau != 0.0)
            for (cx& d : data) d += spec.tau;

        const CoeffVector a = coeffs_for(solver, roots);
        std::vector<cx> y(data.size()), z(data.size());
        for (std::size_t j = 0; j < data.size(); ++j) {
            y[j] = eval_product(roots, data[j]);
            z[j] = eval_horner(a, data[j]);
        }
        return eps2(z, y, roots.values(), opts.include_x_norm);
    });
}

ErrorStats run_problem_h(const SampleSpec& spec, FSolver solver,
                         const RunOptions& opts) {
    return run_sampled(spec.sample_count(), opts.threads, [&](std::size_t i) {
        UniformStream stream(spec.seed, i);
        RootSet roots(sample_nonzero(spec, spec.n, stream));
        const std::size_t n = spec.n;

        const CoeffVector a = coeffs_for(solver, roots);
        std::vector<cx> phi(n + 1), ref(n + 1, cx{0.0, 0.0});
        for (std::size_t k = 0; k < n; ++k) phi[k] = eval_horner(a, roots[k]);
        phi[n] = eval_horner(a, cx{0.0, 0.0});
        cx p0{1.0, 0.0};
        for (std::size_t k = 0; k < n; ++k) p0 *= -roots[k];
        ref[n] = p0;
        return eps2(phi, ref, roots.values(), opts.include_x_norm);
    });
}

ErrorStats run_problem_i(const SampleSpec& spec, IMethod method,
                         const RunOptions& opts) {
    return run_sampled(spec.sample_count(), opts.threads, [&](std::size_t i) {
        UniformStream stream(spec.seed, i);
        RootSet roots(sample_nonzero(spec, spec.n, stream));

        std::vector<cx> nodes;
        bool distinct = false;
        for (int tries = 0; tries < 16 && !distinct; ++tries) {
            nodes = sample_nonzero(spec, spec.n + 1, stream);
            distinct = true;
            for (std::size_t a = 0; a < nodes.size() && distinct; ++a)
                for (std::size_t b = a + 1; b < nodes.size(); ++b)
                    if (nodes[a] == nodes[b]) {
                        distinct = false;
                        break;
                    }
        }
        if (!distinct)
            throw usage_error("could not sample distinct interpolation nodes");

        DataSet data;
        data.nodes = nodes;
        data.values.resize(nodes.size());
        for (std::size_t j = 0; j < nodes.size(); ++j)
            data.values[j] = eval_product(roots, nodes[j]);

        const CoeffVector ref =
            with_scaling(CoeffSolver::p, roots, default_scale(roots));
        const CoeffVector got = method == IMethod::ga
                                    ? coeffs_ga(data)
                                    : coeffs_de(data, InvertMethod::pt_plus);
        return eps2(got.a, ref.a, roots.values(), opts.include_x_norm);
    });
}

const char* family_name(SampleFamily f) {
    switch (f) {
        case SampleFamily::circle: return "circle";
        case SampleFamily::disk: return "disk";
        case SampleFamily::annulus: return "annulus";
        case SampleFamily::line: return "line";
    }
    return "?";
}

const char* solver_name(ASolver s) {
    switch (s) {
        case ASolver::p: return "p";
        case ASolver::p_scaled: return "p-scaled";
        case ASolver::r_plus: return "r+";
        case ASolver::r: return "r";
    }
    return "?";
}

const char* solver_name(FSolver s) {
    return s == FSolver::p ? "p" : "r+";
}

const char* method_name(IMethod m) { return m == IMethod::ga ? "ga" : "de"; }

} // namespace polykit
