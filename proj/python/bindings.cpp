#include "newtloc/coefficients.hpp"
#include "newtloc/kernels.hpp"
#include "newtloc/quadrature.hpp"
#include "newtloc/special.hpp"
#include "newtloc/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

namespace py = pybind11;
using namespace newtloc;

namespace {

KernelParams make_params(int d, int m, double eps, const std::string& family) {
    return KernelParams(d, m, eps, family_from_name(family));
}

std::vector<std::vector<std::pair<std::string, std::string>>> q_poly_strings(int d, int m) {
    const auto sol = solve_q(d, m);
    std::vector<std::vector<std::pair<std::string, std::string>>> out;
    for (const auto& p : sol.q) {
        std::vector<std::pair<std::string, std::string>> coeffs;
        for (const auto& c : p.coefficients()) coeffs.emplace_back(numer(c).str(), denom(c).str());
        out.push_back(std::move(coeffs));
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_newtloc, mod) {
    mod.doc() = "Localized spherical and flat kernels built from Newtonian kernels";

    mod.def("ballot", [](int l, int m) { return ballot(l, m).str(); }, py::arg("l"), py::arg("m"),
            "Ballot number as a decimal string");
    mod.def("stirling2", [](unsigned k, unsigned nu) { return stirling2(k, nu).str(); },
            py::arg("k"), py::arg("nu"));
    mod.def("pochhammer",
            [](long num, long den, unsigned k) {
                const Rational r = pochhammer(Rational(num, den), k);
                return std::make_pair(numer(r).str(), denom(r).str());
            },
            py::arg("num"), py::arg("den"), py::arg("k"),
            "Rising factorial of num/den, returned as a numerator/denominator pair");
    mod.def("gegenbauer",
            [](unsigned l, double mu_num, double mu_den, double t) {
                return gegenbauer_c(l, Rational(static_cast<long>(mu_num),
                                                static_cast<long>(mu_den)), t);
            },
            py::arg("l"), py::arg("mu_num"), py::arg("mu_den"), py::arg("t"));
    mod.def("chebyshev", &chebyshev_t, py::arg("l"), py::arg("t"));
    mod.def("surface_area", &surface_area, py::arg("d"));

    mod.def("q_polynomials", &q_poly_strings, py::arg("d"), py::arg("m"),
            "q_0..q_m as lists of (numerator, denominator) coefficient strings");
    mod.def("q_values",
            [](int d, int m, double delta) { return eval_q(solve_q(d, m), delta); },
            py::arg("d"), py::arg("m"), py::arg("delta"));
    mod.def("coefficients_json",
            [](int d, int m) { return solve_q(d, m).to_json(); }, py::arg("d"), py::arg("m"));
    mod.def("s1_coefficients_json",
            [](int m) { return make_s1_coefficients(m).to_json(); }, py::arg("m"));

    mod.def("poisson_zonal", &poisson_zonal, py::arg("d"), py::arg("a"), py::arg("t"));
    mod.def("colzani_zonal",
            [](int d, int m, double eps, double t) {
                return colzani_zonal(make_params(d, m, eps, "colzani"), t);
            },
            py::arg("d"), py::arg("m"), py::arg("eps"), py::arg("t"));
    mod.def("main_zonal",
            [](int d, int m, double eps, double t) {
                return main_zonal(make_params(d, m, eps, "main"), t);
            },
            py::arg("d"), py::arg("m"), py::arg("eps"), py::arg("t"));
    mod.def("s1_series",
            [](int m, double eps, double rho, double tol) {
                return s1_series(make_params(2, m, eps, "s1_second"), rho, tol);
            },
            py::arg("m"), py::arg("eps"), py::arg("rho"), py::arg("tol") = 1e-12);
    mod.def("flat_closed",
            [](int d, int m, double eps, double r) {
                return flat_closed_radial(make_params(d, m, eps, "flat"), r);
            },
            py::arg("d"), py::arg("m"), py::arg("eps"), py::arg("r"));

    mod.def("expansion_eval",
            [](int d, int m, double eps, const std::string& family, const Vec& x) {
                const auto params = make_params(d, m, eps, family);
                ExpansionSpec spec;
                if (params.family == Family::main)
                    spec = make_main_expansion(params);
                else if (params.family == Family::s1_second)
                    spec = make_s1_expansion(params);
                else
                    spec = make_flat_expansion(params);
                return expansion_eval(spec, x);
            },
            py::arg("d"), py::arg("m"), py::arg("eps"), py::arg("family"), py::arg("x"));

    mod.def("point_charges_json",
            [](int d, int m, double eps, double t, const std::string& family) {
                const auto params = make_params(d, m, eps, family);
                ExpansionSpec spec;
                if (params.family == Family::main)
                    spec = make_main_expansion(params);
                else if (params.family == Family::s1_second)
                    spec = make_s1_expansion(params);
                else
                    spec = make_flat_expansion(params);
                return to_point_charges(spec, t).to_json();
            },
            py::arg("d"), py::arg("m"), py::arg("eps"), py::arg("t"),
            py::arg("family") = "main");
    mod.def("eval_point_charges",
            [](const std::string& config_json, const Vec& x) {
                return eval_point_charges(PointChargeConfig::from_json(config_json), x);
            },
            py::arg("config_json"), py::arg("x"));
    mod.def("invert_poles",
            [](const std::string& config_json) {
                return invert_poles(PointChargeConfig::from_json(config_json)).to_json();
            },
            py::arg("config_json"));

    mod.def("gauss_jacobi",
            [](int n, double alpha) {
                const auto rule = gauss_jacobi(n, alpha);
                return std::make_pair(rule.nodes, rule.weights);
            },
            py::arg("n"), py::arg("alpha"));
    mod.def("kernel_integral",
            [](int d, int m, double eps, const std::string& family) {
                return kernel_integral(ZonalKernel::make(make_params(d, m, eps, family)));
            },
            py::arg("d"), py::arg("m"), py::arg("eps"), py::arg("family"));

    mod.def("verify_suite",
            [](const std::string& filter, std::uint64_t seed) {
                verify::SuiteOptions opts;
                opts.filter = filter;
                opts.seed = seed;
                return verify::report_json(verify::run_suite(opts), false);
            },
            py::arg("filter") = "", py::arg("seed") = 1,
            "Run the verification suite and return the JSON report");
}
