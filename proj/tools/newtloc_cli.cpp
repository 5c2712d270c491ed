// Command-line front end: exact coefficient tables, kernel sampling,
// point-charge reduction, certified integrals and the verification suite.

#include "newtloc/coefficients.hpp"
#include "newtloc/kernels.hpp"
#include "newtloc/quadrature.hpp"
#include "newtloc/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

namespace {

using namespace newtloc;
using json = nlohmann::json;

constexpr double kPi = std::numbers::pi;

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text << "\n";
}

int cmd_coeffs(int d, int m, double delta, bool has_delta, const std::string& format,
               const std::string& out) {
    const auto sol = solve_q(d, m);
    if (format == "json") {
        json j = json::parse(sol.to_json());
        if (d == 2) {
            const auto set = make_s1_coefficients(m);
            const json s1 = json::parse(set.to_json());
            j["A"] = s1["A"];
            j["beta"] = s1["beta"];
            j["Q"] = s1["Q"];
        }
        write_output(j.dump(2), out);
        return 0;
    }

    std::string text;
    for (int l = 0; l <= m; ++l) text += "q_" + std::to_string(l) + " = " + sol.q[l].str() + "\n";
    if (has_delta) {
        const auto values = eval_q(sol, delta);
        text += "q(delta=" + format_double(delta) + ") = (";
        for (std::size_t i = 0; i < values.size(); ++i)
            text += (i ? ", " : "") + format_double(values[i]);
        text += ")\n";
    }
    if (d == 2) {
        const auto set = make_s1_coefficients(m);
        for (int l = 1; l <= m; ++l)
            text += "Q_" + std::to_string(l) + " = " + set.Q[l - 1].str() + "\n";
        for (int k = 0; k <= m - 1; ++k) {
            text += "A_" + std::to_string(k) + ",* =";
            for (const auto& v : set.A[k]) text += " " + v.str();
            text += "\n";
        }
        for (int k = 1; k <= m; ++k) {
            const auto& r = set.beta[k - 1];
            text += "beta_" + std::to_string(m - 1) + "," + std::to_string(k - 1) + " = pi * " +
                    numer(r).str() + "/" + denom(r).str() + "\n";
        }
    }
    if (!text.empty() && text.back() == '\n') text.pop_back();
    write_output(text, out);
    return 0;
}

int cmd_sample(const std::string& family_str, int d, int m, double eps, int n, bool normalized,
               double tol, const std::string& out) {
    const Family family = family_from_name(family_str);
    const KernelParams params(d, m, eps, family);
    auto kernel = ZonalKernel::make(params);
    kernel.series_tol = tol;
    if (normalized) kernel = normalize_kernel(kernel);

    const bool flat = (family == Family::flat);
    const double hi = flat ? 100.0 * eps : kPi;

    std::vector<double> rhos;
    const int geometric = n / 2;
    rhos.push_back(0.0);
    for (int k = -12; static_cast<int>(rhos.size()) < geometric; ++k) {
        const double r = eps * std::pow(2.0, k / 4.0);
        if (r >= hi) break;
        rhos.push_back(r);
    }
    for (int i = 0; static_cast<int>(rhos.size()) < n; ++i)
        rhos.push_back(hi * (i + 1) / (n - geometric + 1));
    rhos.resize(n);
    std::sort(rhos.begin(), rhos.end());

    std::string text = "theta,rho,t,value\n";
    for (double rho : rhos) {
        const double theta = flat ? 0.0 : rho * 180.0 / kPi;
        const double t = flat ? 0.0 : std::cos(rho);
        const double value = flat ? kernel.radial(rho) : kernel(t);
        text += format_double(theta) + "," + format_double(rho) + "," + format_double(t) + "," +
                format_double(value) + "\n";
    }
    text.pop_back();
    write_output(text, out);
    return 0;
}

int cmd_charges(const std::string& family_str, int d, int m, double eps, double t,
                const std::string& out) {
    const Family family = family_from_name(family_str);
    const KernelParams params(d, m, eps, family);
    ExpansionSpec spec;
    switch (family) {
        case Family::main: spec = make_main_expansion(params); break;
        case Family::s1_second: spec = make_s1_expansion(params); break;
        case Family::flat: spec = make_flat_expansion(params); break;
        default:
            throw std::domain_error("charges: the colzani family has no single-pole expansion");
    }
    const auto config = to_point_charges(spec, t);

    // measured on-sphere deviation from the exact expansion
    double deviation = 0.0;
    if (family != Family::flat) {
        for (int i = 0; i <= 256; ++i) {
            const double rho = kPi * i / 256.0;
            Vec x(d, 0.0);
            x[0] = std::cos(rho);
            x[1] = std::sin(rho);
            deviation =
                std::max(deviation, std::abs(eval_point_charges(config, x) - expansion_eval(spec, x)));
        }
    } else {
        for (int i = 0; i <= 256; ++i) {
            Vec x(d, 0.0);
            x[0] = 100.0 * eps * i / 256.0;
            deviation =
                std::max(deviation, std::abs(eval_point_charges(config, x) - expansion_eval(spec, x)));
        }
    }

    const std::string dev_line = "deviation = " + format_double(deviation);
    if (out.empty()) {
        std::cout << config.to_json() << "\n";
        std::cerr << dev_line << "\n";
    } else {
        write_output(config.to_json(), out);
        std::cout << dev_line << "\n";
    }
    return 0;
}

int cmd_integrate(const std::string& family_str, int d, int m, double eps, double tol,
                  const std::string& format, const std::string& out) {
    const Family family = family_from_name(family_str);
    auto kernel = ZonalKernel::make(KernelParams(d, m, eps, family));
    kernel.series_tol = tol;
    const double integral = kernel_integral(kernel);
    if (format == "json") {
        json j;
        j["family"] = family_str;
        j["d"] = d;
        j["m"] = m;
        j["eps"] = eps;
        j["integral"] = integral;
        write_output(j.dump(2), out);
    } else {
        write_output("integral = " + format_double(integral), out);
    }
    return 0;
}

int cmd_verify(const std::string& filter, std::uint64_t seed, bool timings,
               const std::string& out) {
    verify::SuiteOptions opts;
    opts.filter = filter;
    opts.seed = seed;
    const auto reports = verify::run_suite(opts);
    write_output(verify::report_json(reports, timings), out);
    int failed = 0;
    for (const auto& r : reports)
        if (!r.pass) ++failed;
    if (failed > 0)
        std::cerr << failed << " of " << reports.size() << " checks failed\n";
    return failed > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Localized spherical and flat kernels built from Newtonian kernels"};
    app.require_subcommand(1);

    int d = 3, m = 1, n = 64;
    double eps = 0.5, delta = 0.0, t = 0.0, tol = 1e-12;
    std::string family = "main", format = "text", out, filter;
    std::uint64_t seed = 1;
    bool normalized = false, timings = false;

    auto* coeffs = app.add_subcommand("coeffs", "Exact coefficient tables");
    coeffs->add_option("--d", d, "dimension (>= 2)")->required();
    coeffs->add_option("--m", m, "order (>= 1)")->required();
    auto* delta_opt = coeffs->add_option("--delta", delta, "evaluate q at this delta in [0,1)");
    coeffs->add_option("--format", format, "text|json");
    coeffs->add_option("--out", out, "output path (default stdout)");

    auto* sample = app.add_subcommand("sample", "Sample a kernel on a rho grid (CSV)");
    sample->add_option("--family", family, "colzani|main|s1_second|flat")->required();
    sample->add_option("--d", d)->required();
    sample->add_option("--m", m)->required();
    sample->add_option("--eps", eps)->required();
    sample->add_option("--n", n, "number of rows");
    sample->add_flag("--normalized", normalized, "emit the unit-integral kernel");
    sample->add_option("--out", out);
    sample->add_option("--tol", tol, "series tolerance override");

    auto* charges = app.add_subcommand("charges", "Finite-difference point-charge configuration");
    charges->add_option("--family", family, "main|s1_second|flat");
    charges->add_option("--d", d)->required();
    charges->add_option("--m", m)->required();
    charges->add_option("--eps", eps)->required();
    charges->add_option("--t", t, "difference step, 0 < t < eps/m")->required();
    charges->add_option("--out", out);

    auto* integrate = app.add_subcommand("integrate", "Certified kernel integral");
    integrate->add_option("--family", family)->required();
    integrate->add_option("--d", d)->required();
    integrate->add_option("--m", m)->required();
    integrate->add_option("--eps", eps)->required();
    integrate->add_option("--format", format, "text|json");
    integrate->add_option("--out", out);
    integrate->add_option("--tol", tol, "series tolerance override");

    auto* verify_cmd = app.add_subcommand("verify", "Run the verification suite");
    verify_cmd->add_option("--filter", filter, "check-id prefix");
    verify_cmd->add_option("--seed", seed, "seed for randomized checks");
    verify_cmd->add_flag("--timings", timings, "include wall-clock seconds in the report");
    verify_cmd->add_option("--out", out, "report path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (coeffs->parsed()) return cmd_coeffs(d, m, delta, delta_opt->count() > 0, format, out);
        if (sample->parsed()) return cmd_sample(family, d, m, eps, n, normalized, tol, out);
        if (charges->parsed()) return cmd_charges(family, d, m, eps, t, out);
        if (integrate->parsed()) return cmd_integrate(family, d, m, eps, tol, format, out);
        if (verify_cmd->parsed()) return cmd_verify(filter, seed, timings, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
