#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polykit/coeffs.hpp"
#include "polykit/errors.hpp"
#include "polykit/experiments.hpp"
#include "polykit/interpolation.hpp"
#include "polykit/vandermonde.hpp"

namespace {

using polykit::cx;

constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;

struct ParsedCsv {
    std::vector<std::vector<double>> rows;
};

// CSV of doubles with one header line; reports 1-based line numbers.
ParsedCsv read_csv(const std::string& path, std::size_t columns) {
    std::ifstream in(path);
    if (!in) throw polykit::usage_error("cannot open " + path);
    ParsedCsv out;
    std::string line;
    std::size_t lineno = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (!header_seen) {
            header_seen = true; // header names are informative only
            continue;
        }
        std::stringstream ss(line);
        std::vector<double> row;
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            try {
                std::size_t used = 0;
                row.push_back(std::stod(cell, &used));
                for (; used < cell.size(); ++used)
                    if (!std::isspace(static_cast<unsigned char>(cell[used])))
                        throw std::invalid_argument(cell);
            } catch (const std::exception&) {
                throw polykit::usage_error(path + ":" + std::to_string(lineno) +
                                           ": cannot parse '" + cell + "'");
            }
        }
        if (row.size() != columns)
            throw polykit::usage_error(path + ":" + std::to_string(lineno) +
                                       ": expected " + std::to_string(columns) +
                                       " columns, got " +
                                       std::to_string(row.size()));
        out.rows.push_back(std::move(row));
    }
    if (out.rows.empty())
        throw polykit::usage_error(path + ": no data rows");
    return out;
}

std::vector<cx> read_complex_list(const std::string& path) {
    ParsedCsv csv = read_csv(path, 2);
    std::vector<cx> values;
    values.reserve(csv.rows.size());
    for (const auto& row : csv.rows) values.emplace_back(row[0], row[1]);
    return values;
}

polykit::DataSet read_dataset(const std::string& path) {
    ParsedCsv csv = read_csv(path, 4);
    polykit::DataSet data;
    for (const auto& row : csv.rows) {
        data.nodes.emplace_back(row[0], row[1]);
        data.values.emplace_back(row[2], row[3]);
    }
    return data;
}

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_)
                throw polykit::usage_error("cannot open output file " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

void write_coeffs(std::ostream& os, const polykit::CoeffVector& c) {
    os << "index,re,im\n";
    os.precision(17);
    for (std::size_t m = 0; m < c.a.size(); ++m)
        os << m << ',' << c.a[m].real() << ',' << c.a[m].imag() << '\n';
}

int thread_default() {
    if (const char* env = std::getenv("POLYKIT_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 1;
}

struct NRange {
    std::size_t start = 0, stop = 0, step = 1;
};

// "110" or "10..110..50" (start..stop..step)
NRange parse_n_range(const std::string& text) {
    NRange r;
    const auto p1 = text.find("..");
    if (p1 == std::string::npos) {
        r.start = r.stop = std::stoul(text);
        return r;
    }
    const auto p2 = text.find("..", p1 + 2);
    r.start = std::stoul(text.substr(0, p1));
    if (p2 == std::string::npos) {
        r.stop = std::stoul(text.substr(p1 + 2));
    } else {
        r.stop = std::stoul(text.substr(p1 + 2, p2 - p1 - 2));
        r.step = std::stoul(text.substr(p2 + 2));
    }
    if (r.step == 0 || r.stop < r.start)
        throw polykit::usage_error("bad n range '" + text + "'");
    return r;
}

struct ExperimentRow {
    std::size_t n;
    double rho;
    std::string solver;
    double eps0;
    std::size_t nan_count;
    std::size_t samples;
};

void write_rows(std::ostream& os, const std::vector<ExperimentRow>& rows,
                bool markdown) {
    os.precision(6);
    os << std::scientific;
    if (markdown) {
        os << "| n | rho | solver | eps0 | nan_count | samples |\n";
        os << "|---|-----|--------|------|-----------|---------|\n";
        for (const auto& r : rows)
            os << "| " << r.n << " | " << r.rho << " | " << r.solver << " | "
               << r.eps0 << " | " << r.nan_count << " | " << r.samples
               << " |\n";
    } else {
        os << "n,rho,solver,eps0,nan_count,samples\n";
        for (const auto& r : rows)
            os << r.n << ',' << r.rho << ',' << r.solver << ',' << r.eps0 << ','
               << r.nan_count << ',' << r.samples << '\n';
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"polynomial coefficients from roots, Vandermonde inversion, "
                 "interpolation and error benchmarks"};
    app.require_subcommand(1);

    std::string out_path;
    app.add_option("--out", out_path, "write output to a file instead of stdout")
        ->capture_default_str();

    // ---- coeffs ----
    auto* cmd_coeffs = app.add_subcommand(
        "coeffs", "polynomial coefficients from a roots file");
    std::string coeffs_input, coeffs_solver = "p";
    double coeffs_sigma = 0.0;
    cmd_coeffs->add_option("input", coeffs_input, "CSV roots file (re,im)")
        ->required();
    cmd_coeffs
        ->add_option("--solver", coeffs_solver, "p | r | r+ | p-scaled")
        ->check(CLI::IsMember({"p", "r", "r+", "p-scaled"}))
        ->capture_default_str();
    cmd_coeffs->add_option(
        "--sigma", coeffs_sigma,
        "scaling factor for p-scaled (default: 1/rho when rho < 1)");

    // ---- eval ----
    auto* cmd_eval = app.add_subcommand(
        "eval", "Horner-evaluate a coefficients file at given points");
    std::string eval_coeffs, eval_points;
    cmd_eval->add_option("coeffs", eval_coeffs, "CSV coefficients (index,re,im)")
        ->required();
    cmd_eval->add_option("points", eval_points, "CSV points file (re,im)")
        ->required();

    // ---- invert ----
    auto* cmd_invert = app.add_subcommand(
        "invert", "inverse Vandermonde matrix from a parameters file");
    std::string invert_input, invert_method = "pp";
    bool invert_streaming = false;
    cmd_invert->add_option("input", invert_input, "CSV parameters file (re,im)")
        ->required();
    cmd_invert->add_option("--method", invert_method, "pp | pt+")
        ->check(CLI::IsMember({"pp", "pt+"}))
        ->capture_default_str();
    cmd_invert->add_flag("--streaming", invert_streaming,
                         "emit column by column with O(n) working storage");

    // ---- interp ----
    auto* cmd_interp = app.add_subcommand(
        "interp", "interpolation-polynomial coefficients from a data file");
    std::string interp_input, interp_method = "ga";
    cmd_interp
        ->add_option("input", interp_input, "CSV data file (x_re,x_im,y_re,y_im)")
        ->required();
    cmd_interp->add_option("--method", interp_method, "ga | de")
        ->check(CLI::IsMember({"ga", "de"}))
        ->capture_default_str();

    // ---- experiment ----
    auto* cmd_exp = app.add_subcommand(
        "experiment", "run a named error experiment and print a table");
    std::string exp_name, exp_family = "circle", exp_solver, exp_n = "110";
    double exp_rho = 1.0, exp_delta = 0.1, exp_tau = 0.0;
    std::uint64_t exp_seed = 0;
    std::size_t exp_samples = 0;
    int exp_threads = thread_default();
    bool exp_markdown = false, exp_no_x_norm = false;
    cmd_exp->add_option("name", exp_name, "a | f | h | i")
        ->check(CLI::IsMember({"a", "f", "h", "i"}))
        ->required();
    cmd_exp->add_option("--family", exp_family,
                        "a: p1|p2; f/h/i: circle|disk|annulus|line");
    cmd_exp->add_option("--rho", exp_rho, "radius")->capture_default_str();
    cmd_exp->add_option("--n", exp_n, "size or range start..stop..step")
        ->capture_default_str();
    cmd_exp->add_option("--solver", exp_solver,
                        "a: p|p-scaled|r+|r; f/h: p|r+; i: ga|de");
    cmd_exp->add_option("--seed", exp_seed, "RNG seed")->capture_default_str();
    cmd_exp->add_option("--samples", exp_samples,
                        "overrides the size-dependent default sample count");
    cmd_exp->add_option("--delta", exp_delta, "annulus width")
        ->capture_default_str();
    cmd_exp->add_option("--tau", exp_tau, "line data shift")
        ->capture_default_str();
    cmd_exp->add_option("--threads", exp_threads,
                        "sample parallelism (default 1, or POLYKIT_THREADS)");
    cmd_exp->add_flag("--markdown", exp_markdown, "markdown table output");
    cmd_exp->add_flag("--no-x-norm", exp_no_x_norm,
                      "drop the ||x||_2 weight from the error metric");

    CLI11_PARSE(app, argc, argv);

    try {
        Output out(out_path);

        if (*cmd_coeffs) {
            std::vector<cx> values = read_complex_list(coeffs_input);
            for (std::size_t k = 0; k < values.size(); ++k)
                if (values[k] == cx{0.0, 0.0})
                    throw polykit::usage_error(
                        "root " + std::to_string(k) +
                        " is zero; the coefficient solvers require nonzero roots");
            polykit::RootSet roots(values);
            polykit::CoeffVector c;
            if (coeffs_solver == "p") {
                c = polykit::algorithm_p(roots);
            } else if (coeffs_solver == "r") {
                c = polykit::algorithm_r(roots);
            } else if (coeffs_solver == "r+") {
                c = polykit::algorithm_r_plus(roots);
            } else {
                polykit::ScaleSpec scale = coeffs_sigma > 0.0
                                               ? polykit::ScaleSpec{coeffs_sigma}
                                               : polykit::default_scale(roots);
                c = polykit::with_scaling(polykit::CoeffSolver::p, roots, scale);
            }
            write_coeffs(out.stream(), c);
            return 0;
        }

        if (*cmd_eval) {
            ParsedCsv craw = read_csv(eval_coeffs, 3);
            std::vector<cx> coeffs;
            for (const auto& row : craw.rows) coeffs.emplace_back(row[1], row[2]);
            std::vector<cx> points = read_complex_list(eval_points);
            auto& os = out.stream();
            os << "re,im\n";
            os.precision(17);
            for (cx x : points) {
                const cx y = polykit::eval_horner(coeffs, x);
                os << y.real() << ',' << y.imag() << '\n';
            }
            return 0;
        }

        if (*cmd_invert) {
            polykit::RootSet params(read_complex_list(invert_input));
            const polykit::InvertMethod method =
                invert_method == "pp" ? polykit::InvertMethod::pp
                                      : polykit::InvertMethod::pt_plus;
            auto& os = out.stream();
            os << "i,j,re,im\n";
            os.precision(17);
            if (invert_streaming) {
                polykit::inverse_columns(
                    params, method,
                    [&](std::size_t j, std::span<const cx> col) {
                        for (std::size_t i = 0; i < col.size(); ++i)
                            os << i << ',' << j << ',' << col[i].real() << ','
                               << col[i].imag() << '\n';
                    });
            } else {
                polykit::InverseVandermonde inv =
                    polykit::invert(params, method);
                for (std::size_t i = 0; i < inv.size(); ++i)
                    for (std::size_t j = 0; j < inv.size(); ++j)
                        os << i << ',' << j << ',' << inv.at(i, j).real() << ','
                           << inv.at(i, j).imag() << '\n';
            }
            return 0;
        }

        if (*cmd_interp) {
            polykit::DataSet data = read_dataset(interp_input);
            polykit::CoeffVector c =
                interp_method == "ga"
                    ? polykit::coeffs_ga(data)
                    : polykit::coeffs_de(data, polykit::InvertMethod::pt_plus);
            write_coeffs(out.stream(), c);
            return 0;
        }

        if (*cmd_exp) {
            polykit::RunOptions opts;
            opts.include_x_norm = !exp_no_x_norm;
            opts.threads = exp_threads;
            const NRange range = parse_n_range(exp_n);
            std::vector<ExperimentRow> rows;

            for (std::size_t n = range.start; n <= range.stop; n += range.step) {
                if (exp_name == "a") {
                    polykit::TestPolySpec spec;
                    spec.family = exp_family == "p2"
                                      ? polykit::TestPolyFamily::p2
                                      : polykit::TestPolyFamily::p1;
                    spec.p = n;
                    spec.q = 1;
                    spec.rho = exp_rho;
                    const std::string name = exp_solver.empty() ? "p" : exp_solver;
                    polykit::ASolver solver = polykit::ASolver::p;
                    if (name == "p-scaled") solver = polykit::ASolver::p_scaled;
                    else if (name == "r+") solver = polykit::ASolver::r_plus;
                    else if (name == "r") solver = polykit::ASolver::r;
                    else if (name != "p")
                        throw polykit::usage_error("experiment a: unknown solver '" +
                                                   name + "'");
                    polykit::ErrorStats stats =
                        polykit::run_problem_a(spec, solver, opts);
                    rows.push_back({n, exp_rho, name, stats.eps0,
                                    stats.nan_count, stats.eps2_per_sample.size()});
                    continue;
                }

                polykit::SampleSpec spec;
                if (exp_family == "circle") spec.family = polykit::SampleFamily::circle;
                else if (exp_family == "disk") spec.family = polykit::SampleFamily::disk;
                else if (exp_family == "annulus") spec.family = polykit::SampleFamily::annulus;
                else if (exp_family == "line") spec.family = polykit::SampleFamily::line;
                else
                    throw polykit::usage_error("experiment " + exp_name +
                                               ": unknown family '" + exp_family + "'");
                spec.rho = exp_rho;
                spec.delta_width = exp_delta;
                spec.tau = exp_tau;
                spec.n = n;
                spec.seed = exp_seed;
                spec.samples = exp_samples;

                polykit::ErrorStats stats;
                std::string name;
                if (exp_name == "f" || exp_name == "h") {
                    name = exp_solver.empty() ? "p" : exp_solver;
                    polykit::FSolver solver = polykit::FSolver::p;
                    if (name == "r+") solver = polykit::FSolver::r_plus;
                    else if (name != "p")
                        throw polykit::usage_error("experiment " + exp_name +
                                                   ": unknown solver '" + name + "'");
                    stats = exp_name == "f"
                                ? polykit::run_problem_f(spec, solver, opts)
                                : polykit::run_problem_h(spec, solver, opts);
                } else {
                    name = exp_solver.empty() ? "ga" : exp_solver;
                    polykit::IMethod method = polykit::IMethod::ga;
                    if (name == "de") method = polykit::IMethod::de;
                    else if (name != "ga")
                        throw polykit::usage_error("experiment i: unknown method '" +
                                                   name + "'");
                    stats = polykit::run_problem_i(spec, method, opts);
                }
                rows.push_back({n, exp_rho, name, stats.eps0, stats.nan_count,
                                stats.eps2_per_sample.size()});
            }
            write_rows(out.stream(), rows, exp_markdown);
            return 0;
        }
    } catch (const polykit::usage_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const polykit::singular_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const polykit::overflow_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return 0;
}
